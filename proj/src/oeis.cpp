#include "permstats/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "permstats/errors.hpp"

namespace permstats {

namespace fs = std::filesystem;

void validate_oeis_id(std::string_view id)
{
    const bool ok = id.size() == 7 && id[0] == 'A' &&
                    std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!ok) throw InvalidInput("malformed OEIS id '" + std::string(id) + "' (expected A followed by six digits)");
}

namespace {

bool is_integer(std::string_view s)
{
    if (!s.empty() && s[0] == '-') s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Write to a sibling temp file and rename, so readers never see a partial file.
void write_atomically(const fs::path& path, std::string_view data)
{
    fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    fs::rename(tmp, path);
}

} // namespace

OeisRef parse_bfile(std::string_view id, std::string_view text)
{
    OeisRef ref;
    ref.id = std::string(id);
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::int64_t> prev;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string index, value, extra;
        fields >> index >> value;
        if (fields >> extra || !is_integer(index) || !is_integer(value)) {
            throw OeisParseError(ref.id + " b-file line " + std::to_string(line_no) + ": expected \"index value\", got \"" +
                                     line + "\"",
                                 line_no);
        }
        const std::int64_t idx = std::stoll(index);
        if (prev && idx != *prev + 1) {
            throw OeisParseError(ref.id + " b-file line " + std::to_string(line_no) + ": index " + index +
                                     " does not follow " + std::to_string(*prev),
                                 line_no);
        }
        if (!prev) ref.first_index = idx;
        prev = idx;
        ref.terms.push_back(value);
    }
    return ref;
}

fs::path default_cache_dir()
{
    if (const char* env = std::getenv("PERMSTATS_OEIS_CACHE"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "permstats" / "oeis";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "permstats" / "oeis";
    return fs::temp_directory_path() / "permstats-oeis";
}

OeisClient::OeisClient(OeisOptions options) : options_(std::move(options))
{
    if (options_.cache_dir.empty()) options_.cache_dir = default_cache_dir();
    if (!options_.transport) options_.transport = default_http_transport();
}

fs::path OeisClient::cache_path(std::string_view id) const
{
    return options_.cache_dir / ("b" + std::string(id.substr(1)) + ".txt");
}

std::mutex& OeisClient::lock_for(const std::string& id)
{
    std::lock_guard lock(table_mutex_);
    auto& slot = id_mutexes_[id];
    if (!slot) slot = std::make_unique<std::mutex>();
    return *slot;
}

OeisRef OeisClient::fetch(std::string_view id_view)
{
    validate_oeis_id(id_view);
    const std::string id(id_view);
    std::lock_guard single_flight(lock_for(id));

    const fs::path path = cache_path(id);
    std::error_code ec;
    if (fs::is_regular_file(path, ec)) {
        const auto age = fs::file_time_type::clock::now() - fs::last_write_time(path, ec);
        if (!ec && (options_.offline || age <= options_.max_age)) {
            OeisRef ref = parse_bfile(id, read_file(path));
            ref.source = OeisSource::cache;
            ref.fetched_at = std::chrono::file_clock::to_sys(fs::last_write_time(path));
            if (!ref.terms.empty()) return ref;
        }
    }
    if (options_.offline) throw OeisOffline("offline mode and no cached b-file for " + id);

    ++requests_;
    const HttpResponse response = options_.transport("oeis.org", "/" + id + "/b" + id.substr(1) + ".txt");
    if (response.status == 404) throw OeisNotFound("OEIS has no sequence " + id);
    if (response.status != 200) {
        throw OeisOffline("OEIS request for " + id + " failed with HTTP status " + std::to_string(response.status));
    }
    OeisRef ref = parse_bfile(id, response.body);
    if (ref.terms.empty()) throw OeisNotFound("OEIS returned no terms for " + id);
    write_atomically(path, response.body);
    ref.source = OeisSource::network;
    ref.fetched_at = std::chrono::system_clock::now();
    return ref;
}

MatchReport compare(const std::vector<Count>& local, const OeisRef& ref, std::size_t offset)
{
    MatchReport report;
    const std::size_t available = ref.terms.size() > offset ? ref.terms.size() - offset : 0;
    report.compared = std::min(local.size(), available);
    for (std::size_t i = 0; i < report.compared; ++i) {
        const std::string mine = std::to_string(local[i]);
        if (mine != ref.terms[offset + i]) {
            report.mismatch = TermMismatch{i + 1, mine, ref.terms[offset + i]};
            return report;
        }
        ++report.prefix;
    }
    return report;
}

const std::vector<Flattening>& flattening_registry()
{
    const auto half = [](unsigned n) { return (n - 1) / 2; };
    const auto all_but_last = [](unsigned n) { return n - 1; };
    const auto two_short = [](unsigned n) { return n >= 2 ? n - 2 : 0u; };
    static const std::vector<Flattening> registry{
        {"A091894", "pk over {231}", FormulaId::PK231, "", 1, half, 1},
        {"A001263", "asc over single-pattern classes (Narayana)", FormulaId::NARAYANA, "", 1, all_but_last, 0},
        {"A007318", "asc over {213,312} (Pascal)", FormulaId::ASC_213_312, "", 1, all_but_last, 0},
        {"A076791", "ddes over {132,213}", std::nullopt, "ddes132213", 1, two_short, 0},
        {"A034867", "pk over {132,213}", FormulaId::PK_132_213, "", 1, half, 0},
        {"A034839", "asc over {123,132}", FormulaId::ASC_123_132, "", 1, [](unsigned n) { return n / 2; }, 1},
        {"A093560", "ddes over {123,132}", FormulaId::DDES_123_132, "", 3, two_short, 1},
        {"A119462", "vl over {123,132}", FormulaId::VL_123_132, "", 2, half, 1},
        {"A299927", "dasc over {213,312}", FormulaId::DASC_213_312, "", 1, two_short, 0},
    };
    return registry;
}

const Flattening& find_flattening(std::string_view key)
{
    for (const auto& f : flattening_registry()) {
        if (f.id == key || (f.formula && formula_name(*f.formula) == key)) return f;
    }
    throw InvalidInput("no registered flattening for '" + std::string(key) + "'");
}

std::vector<Count> flatten(const Flattening& f, unsigned max_n)
{
    std::vector<Count> out;
    std::optional<BivariateSeries> series;
    if (!f.formula) series = series_by_name(f.series, max_n);
    for (unsigned n = f.n_min; n <= max_n; ++n) {
        for (unsigned k = 0; k <= f.k_max(n); ++k) {
            if (f.formula) {
                out.push_back(closed_form(*f.formula, n, k).value());
            } else {
                const auto c = series->coeff(n, k);
                if (c < 0) throw std::logic_error("negative coefficient in " + f.series);
                out.push_back(static_cast<Count>(c));
            }
        }
    }
    return out;
}

} // namespace permstats
