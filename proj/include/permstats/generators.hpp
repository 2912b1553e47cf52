#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "permstats/bijections.hpp"
#include "permstats/dyck.hpp"
#include "permstats/perm.hpp"

namespace permstats {

// Size caps for exhaustive generation. Exceeding one throws ResourceLimit.
struct Limits {
    unsigned perm_cap = 10;
    unsigned dyck_cap = 14;
    unsigned bits_cap = 30;
    unsigned series_cap = 24;
};

// Single-consumer pull stream. next() returns std::nullopt once exhausted.
template <typename T>
class Stream {
public:
    using Source = std::function<std::optional<T>()>;

    explicit Stream(Source source) : source_(std::move(source)) {}

    std::optional<T> next() { return source_(); }

    template <typename F>
    void for_each(F&& f)
    {
        while (auto item = source_()) f(*item);
    }

    std::vector<T> collect()
    {
        std::vector<T> out;
        for_each([&](const T& item) { out.push_back(item); });
        return out;
    }

    std::size_t count()
    {
        std::size_t c = 0;
        while (source_()) ++c;
        return c;
    }

private:
    Source source_;
};

using PermStream = Stream<Perm>;
using DyckStream = Stream<DyckWord>;
using BitsStream = Stream<Bits>;

enum class GenMethod { filter, structured };

struct ClassSpec {
    std::size_t n = 0;
    PatternSet basis;
    GenMethod method = GenMethod::filter;
};

// All n! permutations in lexicographic order.
PermStream gen_all(std::size_t n, const Limits& limits = {});

// The permutations of length n beginning with `first`, lexicographic. Partitions gen_all by first entry.
PermStream gen_all_starting_with(std::size_t n, int first, const Limits& limits = {});

// Filter: gen_all restricted to avoiders, lexicographic. Structured: registered constructions,
// in a fixed construction-specific order. Throws Unsupported for an unregistered structured basis.
PermStream gen_class(const ClassSpec& spec, const Limits& limits = {});

// Filtered stream over the permutations beginning with `first` (a partition of the filter stream).
PermStream gen_class_starting_with(std::size_t n, const PatternSet& basis, int first, const Limits& limits = {});

bool has_structured_generator(const PatternSet& basis);
std::vector<PatternSet> structured_bases();

// Dyck words of semilength n in lexicographic order with U < D.
DyckStream gen_dyck(std::size_t n, const Limits& limits = {});

// Indecomposable words of semilength n (U w D over gen_dyck(n - 1)); empty for n = 0.
DyckStream gen_indec(std::size_t n, const Limits& limits = {});

// All 2^len words, s_1 most significant, counting upwards from 0...0.
BitsStream gen_bits(std::size_t len, const Limits& limits = {});

} // namespace permstats
