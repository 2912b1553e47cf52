#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permstats/checked.hpp"
#include "permstats/distributions.hpp"
#include "permstats/formulas.hpp"

namespace permstats {

// Network unreachable, or offline mode with nothing cached.
class OeisOffline : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OeisNotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A b-file line that is not "index value". line() is 1-based.
class OeisParseError : public std::runtime_error {
public:
    OeisParseError(const std::string& what, std::size_t line) : std::runtime_error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

enum class OeisSource { network, cache };

struct OeisRef {
    std::string id;
    std::int64_t first_index = 0;
    // Decimal strings; OEIS terms may exceed 64 bits.
    std::vector<std::string> terms;
    std::chrono::system_clock::time_point fetched_at;
    OeisSource source = OeisSource::network;
};

// Throws InvalidInput unless id is "A" followed by six digits.
void validate_oeis_id(std::string_view id);

// Parses b-file text: "n a(n)" per line, '#' comments and blank lines ignored.
OeisRef parse_bfile(std::string_view id, std::string_view text);

struct HttpResponse {
    int status = 0;
    std::string body;
};

// GET https://<host><path>. Throws OeisOffline when the host cannot be reached.
using HttpGet = std::function<HttpResponse(const std::string& host, const std::string& path)>;

HttpGet default_http_transport();

struct OeisOptions {
    std::filesystem::path cache_dir;
    bool offline = false;
    std::chrono::hours max_age{24 * 30};
    HttpGet transport;
};

// $PERMSTATS_OEIS_CACHE, else $XDG_CACHE_HOME/permstats/oeis, else ~/.cache/permstats/oeis.
std::filesystem::path default_cache_dir();

// b-file fetcher with a one-file-per-sequence cache. Concurrent fetches of one id make a single request.
class OeisClient {
public:
    explicit OeisClient(OeisOptions options);

    OeisRef fetch(std::string_view id);

    std::filesystem::path cache_path(std::string_view id) const;
    std::size_t network_requests() const noexcept { return requests_; }

private:
    std::mutex& lock_for(const std::string& id);

    OeisOptions options_;
    std::mutex table_mutex_;
    std::map<std::string, std::unique_ptr<std::mutex>> id_mutexes_;
    std::size_t requests_ = 0;
};

struct TermMismatch {
    // 1-based position within the compared run.
    std::size_t position = 0;
    std::string local;
    std::string reference;
};

struct MatchReport {
    std::size_t compared = 0;
    std::size_t prefix = 0;
    std::optional<TermMismatch> mismatch;

    bool matched() const { return !mismatch && compared > 0; }
};

// local[i] against ref.terms[offset + i], over the shorter of the two runs.
MatchReport compare(const std::vector<Count>& local, const OeisRef& ref, std::size_t offset);

// How a triangle a(n, k) is read off as a sequence.
struct Flattening {
    std::string id;
    std::string description;
    // Exactly one of formula / series is set.
    std::optional<FormulaId> formula;
    std::string series;
    unsigned n_min = 1;
    // k runs over [0, k_max(n)] for each n >= n_min.
    std::function<unsigned(unsigned)> k_max;
    // Leading reference terms to skip before the first local term.
    std::size_t offset = 0;
};

const std::vector<Flattening>& flattening_registry();

// Lookup by A-number or by formula name. Throws InvalidInput if neither is registered.
const Flattening& find_flattening(std::string_view key);

std::vector<Count> flatten(const Flattening& f, unsigned max_n);

} // namespace permstats
