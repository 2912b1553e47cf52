#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace permstats {

// Characters used for up and down steps in text I/O.
struct StepAlphabet {
    char up = 'U';
    char down = 'D';
};

inline constexpr StepAlphabet kBinaryAlphabet{'1', '0'};

// A balanced U/D word whose prefixes never have more Ds than Us. Stored canonically as a
// string over {'U','D'}; the empty word is allowed.
class DyckWord {
public:
    DyckWord() = default;

    // Throws InvalidDyck carrying the first offending index.
    static DyckWord parse(std::string_view text, StepAlphabet alphabet = {});

    std::size_t semilength() const noexcept { return steps_.size() / 2; }
    std::size_t length() const noexcept { return steps_.size(); }
    bool empty() const noexcept { return steps_.empty(); }
    char operator[](std::size_t i) const { return steps_[i]; }

    const std::string& str() const noexcept { return steps_; }
    std::string to_string(StepAlphabet alphabet = {}) const;

    auto operator<=>(const DyckWord&) const = default;

private:
    explicit DyckWord(std::string steps) : steps_(std::move(steps)) {}
    friend DyckWord unchecked_dyck(std::string);

    std::string steps_;
};

// Skips validation; callers guarantee a canonical U/D Dyck word.
DyckWord unchecked_dyck(std::string steps);

// Overlapping occurrences of factor (a string over {U,D}) in d.
std::size_t factor_count(const DyckWord& d, std::string_view factor);

// Number of UUD factors.
std::size_t st(const DyckWord& d);

// Number of UUD factors whose second U is not the last U of d.
std::size_t st_star(const DyckWord& d);

bool is_indecomposable(const DyckWord& d);

// Splits d at its returns to the axis; the parts are indecomposable and concatenate to d.
std::vector<DyckWord> decompose(const DyckWord& d);

// Reverse the step sequence and swap U and D.
DyckWord reverse_path(const DyckWord& d);

// Concatenation; both operands are Dyck words so the result is one.
DyckWord operator+(const DyckWord& a, const DyckWord& b);

} // namespace permstats
