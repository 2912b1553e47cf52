#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permstats {

// A permutation of {1..n} in one-line notation. Positions and values are 1-based.
// The empty permutation (n = 0) is a valid value.
class Perm {
public:
    Perm() = default;

    // Throws InvalidInput unless values is a rearrangement of 1..size.
    explicit Perm(std::vector<int> values);

    // Accepts "4312" (one digit per entry, n <= 9) or a comma/space separated list "10,2,1,...".
    // The empty string and "e" give the empty permutation.
    static Perm parse(std::string_view text);

    static Perm identity(std::size_t n);
    static Perm decreasing(std::size_t n);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    // 1-based access.
    int at(std::size_t position) const { return values_.at(position - 1); }

    std::span<const int> values() const noexcept { return values_; }

    std::string to_string() const;

    auto operator<=>(const Perm&) const = default;

private:
    struct Trusted {};
    Perm(std::vector<int> values, Trusted) : values_(std::move(values)) {}

    friend Perm reduce(std::span<const int>);
    friend Perm reverse(const Perm&);
    friend Perm complement(const Perm&);
    friend Perm direct_sum(const Perm&, const Perm&);
    friend Perm skew_sum(const Perm&, const Perm&);
    friend Perm unchecked_perm(std::vector<int>);

    std::vector<int> values_;
};

// Skips validation; for generators that construct permutations by design.
Perm unchecked_perm(std::vector<int> values);

// The order-isomorphic permutation of {1..len}. Throws InvalidInput on duplicate entries.
Perm reduce(std::span<const int> word);

bool contains(std::span<const int> host, std::span<const int> pattern);
bool contains(const Perm& host, const Perm& pattern);

Perm reverse(const Perm& p);
Perm complement(const Perm& p);
Perm direct_sum(const Perm& a, const Perm& b);
Perm skew_sum(const Perm& a, const Perm& b);

struct Point {
    std::size_t position;
    int value;
    auto operator<=>(const Point&) const = default;
};

std::vector<Point> ltr_maxima(std::span<const int> p);
inline std::vector<Point> ltr_maxima(const Perm& p) { return ltr_maxima(p.values()); }

// Nonempty set of patterns, each of length >= 1, kept sorted (by length, then lexicographically)
// and free of duplicates.
class PatternSet {
public:
    explicit PatternSet(std::vector<Perm> patterns);

    // Comma separated one-line permutations, e.g. "132,213".
    static PatternSet parse(std::string_view text);

    const std::vector<Perm>& patterns() const noexcept { return patterns_; }
    std::size_t size() const noexcept { return patterns_.size(); }

    std::string to_string() const;
    std::vector<std::string> to_strings() const;

    PatternSet reversed() const;
    PatternSet complemented() const;

    bool operator==(const PatternSet&) const = default;
    auto operator<=>(const PatternSet&) const = default;

private:
    std::vector<Perm> patterns_;
};

bool avoids_all(std::span<const int> host, const PatternSet& basis);
bool avoids_all(const Perm& host, const PatternSet& basis);

} // namespace permstats
