#include "permstats/series.hpp"

#include <stdexcept>

#include "permstats/checked.hpp"

namespace permstats {

BivariateSeries BivariateSeries::constant(std::size_t max_degree, std::int64_t c)
{
    BivariateSeries s(max_degree);
    s.set(0, 0, c);
    return s;
}

std::int64_t BivariateSeries::coeff(std::size_t n, std::size_t k) const
{
    const auto& r = rows_.at(n);
    return k < r.size() ? r[k] : 0;
}

void BivariateSeries::set(std::size_t n, std::size_t k, std::int64_t value)
{
    auto& r = rows_.at(n);
    if (k >= r.size()) r.resize(k + 1, 0);
    r[k] = value;
    trim(n);
}

void BivariateSeries::add(std::size_t n, std::size_t k, std::int64_t value)
{
    auto& r = rows_.at(n);
    if (k >= r.size()) r.resize(k + 1, 0);
    r[k] = checked_add(r[k], value);
    trim(n);
}

void BivariateSeries::trim(std::size_t n)
{
    auto& r = rows_[n];
    while (!r.empty() && r.back() == 0) r.pop_back();
}

std::vector<std::int64_t> BivariateSeries::row(std::size_t n) const { return rows_.at(n); }

std::int64_t BivariateSeries::row_sum(std::size_t n) const
{
    std::int64_t total = 0;
    for (auto c : rows_.at(n)) total = checked_add(total, c);
    return total;
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& other) const
{
    if (other.max_degree() != max_degree()) throw std::invalid_argument("series degree mismatch");
    BivariateSeries out(*this);
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        for (std::size_t k = 0; k < other.rows_[n].size(); ++k) out.add(n, k, other.rows_[n][k]);
    }
    return out;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& other) const
{
    if (other.max_degree() != max_degree()) throw std::invalid_argument("series degree mismatch");
    BivariateSeries out(*this);
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        for (std::size_t k = 0; k < other.rows_[n].size(); ++k) {
            out.add(n, k, checked_mul(std::int64_t{-1}, other.rows_[n][k]));
        }
    }
    return out;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& other) const
{
    if (other.max_degree() != max_degree()) throw std::invalid_argument("series degree mismatch");
    BivariateSeries out(max_degree());
    for (std::size_t a = 0; a < rows_.size(); ++a) {
        for (std::size_t b = 0; a + b < rows_.size(); ++b) {
            const auto& ra = rows_[a];
            const auto& rb = other.rows_[b];
            if (ra.empty() || rb.empty()) continue;
            auto& dst = out.rows_[a + b];
            if (dst.size() < ra.size() + rb.size() - 1) dst.resize(ra.size() + rb.size() - 1, 0);
            for (std::size_t i = 0; i < ra.size(); ++i) {
                for (std::size_t j = 0; j < rb.size(); ++j) {
                    dst[i + j] = checked_add(dst[i + j], checked_mul(ra[i], rb[j]));
                }
            }
        }
    }
    for (std::size_t n = 0; n < out.rows_.size(); ++n) out.trim(n);
    return out;
}

BivariateSeries BivariateSeries::shift_z(std::size_t shift) const
{
    BivariateSeries out(max_degree());
    for (std::size_t n = 0; n + shift < rows_.size(); ++n) out.rows_[n + shift] = rows_[n];
    return out;
}

BivariateSeries BivariateSeries::inverse() const
{
    if (rows_[0] != std::vector<std::int64_t>{1}) throw std::invalid_argument("series inverse needs constant term 1");
    // inv_n = -sum_{m=1..n} self_m * inv_{n-m}
    BivariateSeries inv(max_degree());
    inv.set(0, 0, 1);
    for (std::size_t n = 1; n < rows_.size(); ++n) {
        for (std::size_t m = 1; m <= n; ++m) {
            const auto& a = rows_[m];
            const auto& b = inv.rows_[n - m];
            for (std::size_t i = 0; i < a.size(); ++i) {
                for (std::size_t j = 0; j < b.size(); ++j) {
                    inv.add(n, i + j, checked_mul(std::int64_t{-1}, checked_mul(a[i], b[j])));
                }
            }
        }
    }
    return inv;
}

bool BivariateSeries::operator==(const BivariateSeries& other) const { return rows_ == other.rows_; }

} // namespace permstats
