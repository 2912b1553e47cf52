#include "permstats/perm.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <numeric>

#include "permstats/errors.hpp"

namespace permstats {

namespace {

bool is_rearrangement(const std::vector<int>& v)
{
    std::vector<bool> seen(v.size() + 1, false);
    for (int x : v) {
        if (x < 1 || static_cast<std::size_t>(x) > v.size() || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

// Specialised scan for patterns of length 3: fix the middle entry, then ask whether a
// compatible left entry and right entry exist in the right relative order.
bool contains3(std::span<const int> host, std::span<const int> pat)
{
    const bool left_below_mid = pat[0] < pat[1];
    const bool mid_below_right = pat[1] < pat[2];
    const bool left_below_right = pat[0] < pat[2];
    const std::size_t n = host.size();
    for (std::size_t j = 1; j + 1 < n; ++j) {
        const int mid = host[j];
        int lo_left = INT_MAX, hi_left = INT_MIN;
        for (std::size_t i = 0; i < j; ++i) {
            if ((host[i] < mid) == left_below_mid) {
                lo_left = std::min(lo_left, host[i]);
                hi_left = std::max(hi_left, host[i]);
            }
        }
        if (lo_left == INT_MAX) continue;
        int lo_right = INT_MAX, hi_right = INT_MIN;
        for (std::size_t k = j + 1; k < n; ++k) {
            if ((mid < host[k]) == mid_below_right) {
                lo_right = std::min(lo_right, host[k]);
                hi_right = std::max(hi_right, host[k]);
            }
        }
        if (lo_right == INT_MAX) continue;
        if (left_below_right ? lo_left < hi_right : hi_left > lo_right) return true;
    }
    return false;
}

bool extend(std::span<const int> host, std::span<const int> pat, std::vector<std::size_t>& chosen,
            std::size_t from)
{
    const std::size_t depth = chosen.size();
    if (depth == pat.size()) return true;
    const std::size_t remaining = pat.size() - depth;
    for (std::size_t i = from; i + remaining <= host.size(); ++i) {
        bool ok = true;
        for (std::size_t b = 0; b < depth && ok; ++b) {
            ok = (host[chosen[b]] < host[i]) == (pat[b] < pat[depth]);
        }
        if (!ok) continue;
        chosen.push_back(i);
        if (extend(host, pat, chosen, i + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

std::vector<int> parse_values(std::string_view text)
{
    std::vector<int> out;
    const bool separated = text.find_first_of(", ") != std::string_view::npos;
    if (!separated) {
        for (char ch : text) {
            if (ch < '0' || ch > '9') throw InvalidInput("not a digit in permutation: '" + std::string(text) + "'");
            out.push_back(ch - '0');
        }
        return out;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
        if (i == text.size()) break;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == text.data() + i) {
            throw InvalidInput("malformed permutation: '" + std::string(text) + "'");
        }
        out.push_back(value);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return out;
}

} // namespace

Perm::Perm(std::vector<int> values) : values_(std::move(values))
{
    if (!is_rearrangement(values_)) throw InvalidInput("not a permutation of 1..n");
}

Perm Perm::parse(std::string_view text)
{
    if (text.empty() || text == "e") return Perm();
    return Perm(parse_values(text));
}

Perm Perm::identity(std::size_t n)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v), Trusted{});
}

Perm Perm::decreasing(std::size_t n)
{
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
    return Perm(std::move(v), Trusted{});
}

std::string Perm::to_string() const
{
    std::string out;
    const bool wide = values_.size() > 9;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (wide && i > 0) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

Perm unchecked_perm(std::vector<int> values) { return Perm(std::move(values), Perm::Trusted{}); }

Perm reduce(std::span<const int> word)
{
    std::vector<std::size_t> order(word.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
    std::vector<int> out(word.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r > 0 && word[order[r]] == word[order[r - 1]]) {
            throw InvalidInput("reduce: duplicate entry " + std::to_string(word[order[r]]));
        }
        out[order[r]] = static_cast<int>(r + 1);
    }
    return Perm(std::move(out), Perm::Trusted{});
}

bool contains(std::span<const int> host, std::span<const int> pattern)
{
    if (pattern.size() > host.size()) return false;
    if (pattern.empty()) return true;
    if (pattern.size() == 1) return true;
    if (pattern.size() == 3) return contains3(host, pattern);
    std::vector<std::size_t> chosen;
    chosen.reserve(pattern.size());
    return extend(host, pattern, chosen, 0);
}

bool contains(const Perm& host, const Perm& pattern) { return contains(host.values(), pattern.values()); }

Perm reverse(const Perm& p)
{
    std::vector<int> v(p.values_.rbegin(), p.values_.rend());
    return Perm(std::move(v), Perm::Trusted{});
}

Perm complement(const Perm& p)
{
    const int n1 = static_cast<int>(p.size()) + 1;
    std::vector<int> v(p.values_);
    for (int& x : v) x = n1 - x;
    return Perm(std::move(v), Perm::Trusted{});
}

Perm direct_sum(const Perm& a, const Perm& b)
{
    std::vector<int> v(a.values_);
    const int shift = static_cast<int>(a.size());
    for (int x : b.values_) v.push_back(x + shift);
    return Perm(std::move(v), Perm::Trusted{});
}

Perm skew_sum(const Perm& a, const Perm& b)
{
    std::vector<int> v;
    v.reserve(a.size() + b.size());
    const int shift = static_cast<int>(b.size());
    for (int x : a.values_) v.push_back(x + shift);
    for (int x : b.values_) v.push_back(x);
    return Perm(std::move(v), Perm::Trusted{});
}

std::vector<Point> ltr_maxima(std::span<const int> p)
{
    std::vector<Point> out;
    int best = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > best) {
            best = p[i];
            out.push_back({i + 1, p[i]});
        }
    }
    return out;
}

PatternSet::PatternSet(std::vector<Perm> patterns) : patterns_(std::move(patterns))
{
    if (patterns_.empty()) throw InvalidInput("pattern set must be nonempty");
    for (const auto& p : patterns_) {
        if (p.empty()) throw InvalidInput("patterns must have length >= 1");
    }
    std::sort(patterns_.begin(), patterns_.end(), [](const Perm& a, const Perm& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    if (std::adjacent_find(patterns_.begin(), patterns_.end()) != patterns_.end()) {
        throw InvalidInput("duplicate pattern in basis");
    }
}

PatternSet PatternSet::parse(std::string_view text)
{
    std::vector<Perm> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(start, comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item.empty()) throw InvalidInput("empty pattern in basis '" + std::string(text) + "'");
        if (item.size() > 9) throw InvalidInput("patterns of length >= 10 are not supported: '" + std::string(item) + "'");
        out.push_back(Perm::parse(item));
        start = comma + 1;
    }
    return PatternSet(std::move(out));
}

std::string PatternSet::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
        if (i > 0) out += ',';
        out += patterns_[i].to_string();
    }
    return out;
}

std::vector<std::string> PatternSet::to_strings() const
{
    std::vector<std::string> out;
    for (const auto& p : patterns_) out.push_back(p.to_string());
    return out;
}

PatternSet PatternSet::reversed() const
{
    std::vector<Perm> out;
    for (const auto& p : patterns_) out.push_back(reverse(p));
    return PatternSet(std::move(out));
}

PatternSet PatternSet::complemented() const
{
    std::vector<Perm> out;
    for (const auto& p : patterns_) out.push_back(complement(p));
    return PatternSet(std::move(out));
}

bool avoids_all(std::span<const int> host, const PatternSet& basis)
{
    for (const auto& rho : basis.patterns()) {
        if (contains(host, rho.values())) return false;
    }
    return true;
}

bool avoids_all(const Perm& host, const PatternSet& basis) { return avoids_all(host.values(), basis); }

} // namespace permstats
