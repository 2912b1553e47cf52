#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "permstats/dyck.hpp"
#include "permstats/perm.hpp"

namespace permstats {

// A binary word s_1 ... s_m.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::vector<bool> bits) : bits_(std::move(bits)) {}

    // Accepts a string over {0,1}; "e" or "" is the empty word.
    static Bits parse(std::string_view text);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    bool operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<bool>& bits() const noexcept { return bits_; }

    std::size_t ones() const;
    std::size_t zeros() const { return size() - ones(); }

    // Overlapping occurrences of a factor over {0,1}.
    std::size_t factor_count(std::string_view factor) const;
    bool starts_with(std::string_view prefix) const;

    std::string to_string() const;

    auto operator<=>(const Bits&) const = default;

private:
    std::vector<bool> bits_;
};

// 231-avoiders to Dyck words: phi(alpha n beta) = phi(alpha) U phi(beta) D.
DyckWord phi231(const Perm& p);
Perm phi231_inv(const DyckWord& d);

// 321-avoiders to Dyck words through the lattice path on the non-left-to-right-maxima.
DyckWord psi321(const Perm& p);
Perm psi321_inv(const DyckWord& d);

// U psi321(p) D; indecomposable of semilength n + 1.
DyckWord psi_hat(const Perm& p);

// 312-avoiders to 321-avoiders keeping the left-to-right maxima (positions and values).
Perm zeta(const Perm& p);
Perm zeta_inv(const Perm& p);

// Involution on Dyck words of each semilength exchanging {st = k, des = k + 1} with
// {st = k + 1, des = k}, des taken on psi321_inv(d). Fixes the words with st = des.
DyckWord iota(const DyckWord& d);

// Binary encodings of length n - 1 for the three two-pattern classes below.
// Forward maps need n >= 1; inverse maps accept any word and return a permutation of length size + 1.
Bits enc_132_213(const Perm& p);
Perm dec_132_213(const Bits& s);

Bits enc_213_231(const Perm& p);
Perm dec_213_231(const Bits& s);

Bits enc_123_132(const Perm& p);
Perm dec_123_132(const Bits& s);

} // namespace permstats
