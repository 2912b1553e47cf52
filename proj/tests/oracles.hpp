// Slow, direct implementations used as ground truth. Nothing here calls the library's algorithms.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using Word = std::vector<int>;
using Row = std::map<unsigned, std::uint64_t>;

inline Word digits(const std::string& s)
{
    Word w;
    for (char c : s) w.push_back(c - '0');
    return w;
}

// Every permutation of 1..n, built by inserting n into each gap of each permutation of 1..n-1.
inline std::vector<Word> perms(int n)
{
    std::vector<Word> out{{}};
    for (int m = 1; m <= n; ++m) {
        std::vector<Word> next;
        for (const auto& p : out) {
            for (std::size_t gap = 0; gap <= p.size(); ++gap) {
                Word q = p;
                q.insert(q.begin() + static_cast<std::ptrdiff_t>(gap), m);
                next.push_back(std::move(q));
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool same_order(const Word& a, const Word& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if ((a[i] < a[j]) != (b[i] < b[j])) return false;
        }
    }
    return true;
}

// Tries every index subset of the pattern's size.
inline bool contains(const Word& host, const Word& pattern)
{
    const std::size_t n = host.size(), k = pattern.size();
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t slot, std::size_t from) -> bool {
        if (slot == k) {
            Word sub;
            for (auto i : idx) sub.push_back(host[i]);
            return same_order(sub, pattern);
        }
        for (std::size_t i = from; i < n; ++i) {
            idx[slot] = i;
            if (pick(slot + 1, i + 1)) return true;
        }
        return false;
    };
    return pick(0, 0);
}

inline bool avoids(const Word& host, const std::vector<Word>& basis)
{
    return std::none_of(basis.begin(), basis.end(), [&](const Word& b) { return contains(host, b); });
}

inline std::vector<Word> parse_basis(const std::string& text)
{
    std::vector<Word> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            out.push_back(digits(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

inline std::vector<Word> avoiders(int n, const std::string& basis)
{
    const auto b = parse_basis(basis);
    std::vector<Word> out;
    for (const auto& p : perms(n)) {
        if (avoids(p, b)) out.push_back(p);
    }
    return out;
}

// Statistic names: asc, des, dasc, ddes, pk, vl.
inline unsigned stat(const std::string& name, const Word& p)
{
    unsigned c = 0;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (name == "asc" && p[i] < p[i + 1]) ++c;
        if (name == "des" && p[i] > p[i + 1]) ++c;
    }
    for (std::size_t i = 0; i + 2 < n; ++i) {
        const int a = p[i], b = p[i + 1], d = p[i + 2];
        if (name == "dasc" && a < b && b < d) ++c;
        if (name == "ddes" && a > b && b > d) ++c;
        if (name == "pk" && a < b && b > d) ++c;
        if (name == "vl" && a > b && b < d) ++c;
    }
    return c;
}

inline Row distribution(const std::string& name, int n, const std::string& basis)
{
    Row r;
    for (const auto& p : avoiders(n, basis)) ++r[stat(name, p)];
    return r;
}

inline std::uint64_t binom(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        t[i].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t[n][k];
}

inline std::uint64_t catalan(int n) { return binom(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

// All balanced U/D strings of semilength n with no negative prefix, by filtering all 2^(2n) strings.
inline std::vector<std::string> dyck(int n)
{
    std::vector<std::string> out;
    const int len = 2 * n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        std::string s;
        int h = 0;
        bool ok = true;
        for (int i = len - 1; i >= 0; --i) {
            const bool up = !((mask >> i) & 1);
            s += up ? 'U' : 'D';
            h += up ? 1 : -1;
            if (h < 0) ok = false;
        }
        if (ok && h == 0) out.push_back(s);
    }
    return out;
}

inline std::vector<std::string> indecomposable(int n)
{
    std::vector<std::string> out;
    for (const auto& s : dyck(n)) {
        int h = 0;
        bool touches = false;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            h += s[i] == 'U' ? 1 : -1;
            if (h == 0) touches = true;
        }
        if (!touches && !s.empty()) out.push_back(s);
    }
    return out;
}

inline unsigned count_factor(const std::string& s, const std::string& f)
{
    unsigned c = 0;
    for (std::size_t i = 0; i + f.size() <= s.size(); ++i) {
        if (s.compare(i, f.size(), f) == 0) ++c;
    }
    return c;
}

inline unsigned st(const std::string& s) { return count_factor(s, "UUD"); }

// UUD occurrences whose second U comes before the final U of the word.
inline unsigned st_star(const std::string& s)
{
    const auto last_up = s.rfind('U');
    unsigned c = 0;
    for (std::size_t i = 0; i + 3 <= s.size(); ++i) {
        if (s.compare(i, 3, "UUD") == 0 && i + 1 < last_up) ++c;
    }
    return c;
}

inline std::vector<std::string> bit_words(int len)
{
    std::vector<std::string> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        std::string s;
        for (int i = len - 1; i >= 0; --i) s += ((mask >> i) & 1) ? '1' : '0';
        out.push_back(s);
    }
    return out;
}

} // namespace oracle
