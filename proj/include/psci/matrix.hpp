#ifndef PSCI_MATRIX_HPP
#define PSCI_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "psci/polyring.hpp"

namespace psci {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    bool is_zero() const;

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

/// Exact rank: denominators are cleared row by row, then fraction-free
/// (Bareiss) elimination runs over the integers.
std::size_t rank_exact(const RationalMatrix& m);

/// Rank of the reduction modulo a prime. Returns nothing when some
/// denominator vanishes mod p. Never larger than the rational rank.
std::optional<std::size_t> rank_modular(const RationalMatrix& m, std::uint64_t prime);

/// Rank with an optional modular prefilter: a full modular rank is accepted
/// (it is a lower bound that already reaches the maximum); anything else is
/// recomputed exactly.
std::size_t rank(const RationalMatrix& m, std::optional<std::uint64_t> prime = std::nullopt);

/// Basis of {v : m v = 0}, one vector per free column, in column order.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Entries as strings "p/q" (or "p" for integers).
nlohmann::json to_json(const RationalMatrix& m);

}  // namespace psci

#endif  // PSCI_MATRIX_HPP
