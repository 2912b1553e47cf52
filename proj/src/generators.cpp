#include "permstats/generators.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>

#include "permstats/errors.hpp"

namespace permstats {

namespace {

void check_cap(std::size_t n, unsigned cap, const char* what)
{
    if (n > cap) {
        throw ResourceLimit(std::string(what) + ": size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
}

template <typename T>
Stream<T> from_vector(std::vector<T> items)
{
    auto state = std::make_shared<std::pair<std::vector<T>, std::size_t>>(std::move(items), 0);
    return Stream<T>([state]() -> std::optional<T> {
        if (state->second == state->first.size()) return std::nullopt;
        return state->first[state->second++];
    });
}

// Lexicographic successor over {U < D}; false when s is the last word (UD)^n.
bool next_dyck(std::string& s)
{
    const std::size_t len = s.size();
    const std::size_t n = len / 2;
    long height = 0;
    std::size_t ups = 0;
    std::vector<long> heights(len + 1, 0);
    std::vector<std::size_t> up_counts(len + 1, 0);
    for (std::size_t i = 0; i < len; ++i) {
        heights[i] = height;
        up_counts[i] = ups;
        if (s[i] == 'U') ++height, ++ups;
        else --height;
    }
    for (std::size_t i = len; i-- > 0;) {
        if (s[i] != 'U' || heights[i] < 1) continue;
        const std::size_t ups_left = n - up_counts[i];
        const std::size_t room = len - i - 1;
        if (ups_left > room) continue;
        s[i] = 'D';
        std::size_t pos = i + 1;
        for (std::size_t r = 0; r < ups_left; ++r) s[pos++] = 'U';
        while (pos < len) s[pos++] = 'D';
        return true;
    }
    return false;
}

PermStream filtered(PermStream source, PatternSet basis)
{
    auto src = std::make_shared<PermStream>(std::move(source));
    return PermStream([src, basis = std::move(basis)]() -> std::optional<Perm> {
        while (auto p = src->next()) {
            if (avoids_all(*p, basis)) return p;
        }
        return std::nullopt;
    });
}

// Lexicographic permutations of the given starting arrangement, restricted to a fixed first entry
// when `lock_first` is set.
PermStream lex_stream(std::vector<int> start, bool lock_first)
{
    struct State {
        std::vector<int> cur;
        bool started = false;
        bool done = false;
        bool lock_first;
    };
    auto st = std::make_shared<State>(State{std::move(start), false, false, lock_first});
    return PermStream([st]() -> std::optional<Perm> {
        if (st->done) return std::nullopt;
        if (!st->started) {
            st->started = true;
            return unchecked_perm(st->cur);
        }
        const auto begin = st->lock_first && !st->cur.empty() ? st->cur.begin() + 1 : st->cur.begin();
        if (!std::next_permutation(begin, st->cur.end())) {
            st->done = true;
            return std::nullopt;
        }
        return unchecked_perm(st->cur);
    });
}

std::vector<Perm> structured_231(std::size_t n);

// alpha n (beta + |alpha|): everything before n is smaller than everything after it.
std::vector<Perm> structured_231(std::size_t n)
{
    if (n == 0) return {Perm()};
    std::vector<Perm> out;
    for (std::size_t a = 0; a < n; ++a) {
        const auto left = structured_231(a);
        const auto right = structured_231(n - 1 - a);
        for (const auto& alpha : left) {
            for (const auto& beta : right) {
                std::vector<int> v(alpha.values().begin(), alpha.values().end());
                v.push_back(static_cast<int>(n));
                for (int x : beta.values()) v.push_back(x + static_cast<int>(a));
                out.push_back(unchecked_perm(std::move(v)));
            }
        }
    }
    return out;
}

template <typename Decode>
PermStream via_bits(std::size_t n, const Limits& limits, Decode decode)
{
    if (n == 0) return from_vector(std::vector<Perm>{Perm()});
    auto bits = std::make_shared<BitsStream>(gen_bits(n - 1, limits));
    return PermStream([bits, decode]() -> std::optional<Perm> {
        auto s = bits->next();
        if (!s) return std::nullopt;
        return decode(*s);
    });
}

PermStream structured_213_312(std::size_t n)
{
    if (n == 0) return from_vector(std::vector<Perm>{Perm()});
    auto mask = std::make_shared<std::uint64_t>(0);
    const std::uint64_t end = std::uint64_t{1} << (n - 1);
    return PermStream([mask, end, n]() -> std::optional<Perm> {
        if (*mask == end) return std::nullopt;
        const std::uint64_t m = (*mask)++;
        // Chosen values rise to n, the rest fall after it.
        std::vector<int> v;
        for (std::size_t x = 1; x < n; ++x) {
            if (m >> (x - 1) & 1) v.push_back(static_cast<int>(x));
        }
        v.push_back(static_cast<int>(n));
        for (std::size_t x = n - 1; x >= 1; --x) {
            if (!(m >> (x - 1) & 1)) v.push_back(static_cast<int>(x));
        }
        return unchecked_perm(std::move(v));
    });
}

// (I_a skew I_b) direct-sum I_{n-a-b}: the identity first, then a >= 1, b >= 1, a + b <= n.
PermStream structured_132_321(std::size_t n)
{
    std::vector<Perm> out{Perm::identity(n)};
    for (std::size_t a = 1; a < n; ++a) {
        for (std::size_t b = 1; a + b <= n; ++b) {
            out.push_back(direct_sum(skew_sum(Perm::identity(a), Perm::identity(b)), Perm::identity(n - a - b)));
        }
    }
    return from_vector(std::move(out));
}

using Builder = std::function<PermStream(std::size_t, const Limits&)>;

const std::map<std::string, Builder>& registry()
{
    static const std::map<std::string, Builder> table{
        {"231", [](std::size_t n, const Limits&) { return from_vector(structured_231(n)); }},
        {"321",
         [](std::size_t n, const Limits& limits) {
             auto words = std::make_shared<DyckStream>(gen_dyck(n, limits));
             return PermStream([words]() -> std::optional<Perm> {
                 auto d = words->next();
                 if (!d) return std::nullopt;
                 return psi321_inv(*d);
             });
         }},
        {"213,312", [](std::size_t n, const Limits&) { return structured_213_312(n); }},
        {"132,213", [](std::size_t n, const Limits& l) { return via_bits(n, l, dec_132_213); }},
        {"213,231", [](std::size_t n, const Limits& l) { return via_bits(n, l, dec_213_231); }},
        {"123,132", [](std::size_t n, const Limits& l) { return via_bits(n, l, dec_123_132); }},
        {"132,321", [](std::size_t n, const Limits&) { return structured_132_321(n); }},
    };
    return table;
}

} // namespace

PermStream gen_all(std::size_t n, const Limits& limits)
{
    check_cap(n, limits.perm_cap, "gen_all");
    std::vector<int> start(n);
    std::iota(start.begin(), start.end(), 1);
    return lex_stream(std::move(start), false);
}

PermStream gen_all_starting_with(std::size_t n, int first, const Limits& limits)
{
    check_cap(n, limits.perm_cap, "gen_all");
    if (first < 1 || static_cast<std::size_t>(first) > n) throw InvalidInput("first entry out of range");
    std::vector<int> start{first};
    for (int x = 1; x <= static_cast<int>(n); ++x) {
        if (x != first) start.push_back(x);
    }
    return lex_stream(std::move(start), true);
}

PermStream gen_class(const ClassSpec& spec, const Limits& limits)
{
    if (spec.method == GenMethod::filter) return filtered(gen_all(spec.n, limits), spec.basis);
    const auto it = registry().find(spec.basis.to_string());
    if (it == registry().end()) {
        throw Unsupported("no structured generator for basis {" + spec.basis.to_string() + "}");
    }
    check_cap(spec.n, std::max(limits.perm_cap, limits.dyck_cap), "gen_class");
    return it->second(spec.n, limits);
}

PermStream gen_class_starting_with(std::size_t n, const PatternSet& basis, int first, const Limits& limits)
{
    return filtered(gen_all_starting_with(n, first, limits), basis);
}

bool has_structured_generator(const PatternSet& basis) { return registry().count(basis.to_string()) > 0; }

std::vector<PatternSet> structured_bases()
{
    std::vector<PatternSet> out;
    for (const auto& [key, builder] : registry()) out.push_back(PatternSet::parse(key));
    return out;
}

DyckStream gen_dyck(std::size_t n, const Limits& limits)
{
    check_cap(n, limits.dyck_cap, "gen_dyck");
    struct State {
        std::string cur;
        bool started = false;
        bool done = false;
    };
    auto st = std::make_shared<State>(State{std::string(n, 'U') + std::string(n, 'D')});
    return DyckStream([st]() -> std::optional<DyckWord> {
        if (st->done) return std::nullopt;
        if (!st->started) {
            st->started = true;
            return unchecked_dyck(st->cur);
        }
        if (!next_dyck(st->cur)) {
            st->done = true;
            return std::nullopt;
        }
        return unchecked_dyck(st->cur);
    });
}

DyckStream gen_indec(std::size_t n, const Limits& limits)
{
    check_cap(n, limits.dyck_cap, "gen_indec");
    if (n == 0) return from_vector(std::vector<DyckWord>{});
    auto inner = std::make_shared<DyckStream>(gen_dyck(n - 1, limits));
    return DyckStream([inner]() -> std::optional<DyckWord> {
        auto d = inner->next();
        if (!d) return std::nullopt;
        return unchecked_dyck("U" + d->str() + "D");
    });
}

BitsStream gen_bits(std::size_t len, const Limits& limits)
{
    check_cap(len, limits.bits_cap, "gen_bits");
    auto next = std::make_shared<std::uint64_t>(0);
    const std::uint64_t end = std::uint64_t{1} << len;
    return BitsStream([next, end, len]() -> std::optional<Bits> {
        if (*next == end) return std::nullopt;
        const std::uint64_t m = (*next)++;
        std::vector<bool> bits(len);
        for (std::size_t i = 0; i < len; ++i) bits[i] = (m >> (len - 1 - i)) & 1;
        return Bits(std::move(bits));
    });
}

} // namespace permstats
