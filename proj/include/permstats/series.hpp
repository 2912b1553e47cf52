#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace permstats {

// Power series in z with polynomial coefficients in q, truncated after z^max_degree.
// Coefficients are exact; arithmetic is overflow-checked.
class BivariateSeries {
public:
    explicit BivariateSeries(std::size_t max_degree) : rows_(max_degree + 1) {}

    static BivariateSeries constant(std::size_t max_degree, std::int64_t c);

    std::size_t max_degree() const noexcept { return rows_.size() - 1; }

    // Coefficient of z^n q^k; zero when absent. n must be <= max_degree.
    std::int64_t coeff(std::size_t n, std::size_t k) const;
    void set(std::size_t n, std::size_t k, std::int64_t value);
    void add(std::size_t n, std::size_t k, std::int64_t value);

    // q-polynomial for z^n, trailing zeros trimmed.
    std::vector<std::int64_t> row(std::size_t n) const;
    std::int64_t row_sum(std::size_t n) const;

    BivariateSeries operator+(const BivariateSeries& other) const;
    BivariateSeries operator-(const BivariateSeries& other) const;
    BivariateSeries operator*(const BivariateSeries& other) const;

    // Multiply by z^shift, dropping terms above max_degree.
    BivariateSeries shift_z(std::size_t shift) const;

    // Multiplicative inverse; requires the z^0 row to be the constant 1.
    BivariateSeries inverse() const;

    bool operator==(const BivariateSeries& other) const;

private:
    void trim(std::size_t n);

    std::vector<std::vector<std::int64_t>> rows_;
};

} // namespace permstats
