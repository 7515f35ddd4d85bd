#ifndef PSCI_POLYRING_HPP
#define PSCI_POLYRING_HPP

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace psci {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown when two operands live in different polynomial rings.
class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/*
 * A polynomial ring K[x_1..x_n] or K[x_1..x_n, z] over the rationals.
 *
 * Variables are indexed from 0: x_i has index i-1 and z (when present) has
 * index nvars. The monomial order is graded reverse lexicographic with
 * x_1 > x_2 > ... > x_n > z, so z is always the smallest variable.
 *
 * The `aux` flag is internal: it appends one extra variable t after all
 * others and switches to the block order (t) >> (grevlex on the rest). It is
 * used for elimination and never appears in public results.
 */
struct RingSpec {
    int nvars = 1;
    bool has_z = false;
    bool aux = false;

    RingSpec() = default;
    RingSpec(int n, bool z, bool aux_var = false);

    int num_vars() const { return nvars + (has_z ? 1 : 0) + (aux ? 1 : 0); }
    int x(int i) const;   ///< index of x_i, 1-based i
    int z() const;        ///< index of z; requires has_z
    int t() const;        ///< index of the auxiliary variable; requires aux
    int last_var() const { return num_vars() - 1; }
    std::string var_name(int var) const;
    bool valid_var(int var) const { return var >= 0 && var < num_vars(); }

    /// The same ring with the auxiliary elimination variable added.
    RingSpec with_aux() const { return RingSpec(nvars, has_z, true); }
    RingSpec without_aux() const { return RingSpec(nvars, has_z, false); }

    bool operator==(const RingSpec&) const = default;
};

std::ostream& operator<<(std::ostream& os, const RingSpec& ring);

/*
 * Exponent vector packed one byte per variable into a 64-bit word.
 * Supports up to 8 variables and total degree up to 127, which keeps every
 * byte below 0x80 and lets divisibility be tested with a single subtraction.
 */
class Monomial {
public:
    static constexpr int kMaxVars = 8;
    static constexpr int kMaxDegree = 127;

    constexpr Monomial() = default;
    static Monomial variable(int var, int power = 1);
    static Monomial from_exponents(std::span<const int> exps);
    static Monomial from_bits(std::uint64_t bits) { Monomial m; m.bits_ = bits; return m; }

    int exponent(int var) const { return static_cast<int>((bits_ >> (8 * var)) & 0xffu); }
    int degree() const { return static_cast<int>((bits_ * 0x0101010101010101ULL) >> 56); }
    bool is_one() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }

    bool divides(Monomial other) const {
        constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
        return (((other.bits_ | kHigh) - bits_) & kHigh) == kHigh;
    }
    bool coprime(Monomial other) const;
    Monomial operator*(Monomial other) const;
    /// Exact quotient; requires `other.divides(*this)`.
    Monomial operator/(Monomial other) const { return from_bits(bits_ - other.bits_); }
    Monomial lcm(Monomial other) const;

    /// Nonzero exponents as (variable, power) pairs, ascending by variable.
    std::vector<std::pair<int, int>> support() const;
    /// Index of the single variable if this is a pure power x^k (k >= 1), else -1.
    int pure_power_var() const;

    bool operator==(const Monomial&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// Three-way comparison of monomials: graded reverse lex, or the block
/// elimination order when `elim_var >= 0`.
struct MonomialOrder {
    int elim_var = -1;

    int compare(Monomial a, Monomial b) const;
    /// Strict "a comes before b" in descending order.
    bool greater(Monomial a, Monomial b) const { return compare(a, b) > 0; }
};

int compare_grevlex(Monomial a, Monomial b);
MonomialOrder order_of(const RingSpec& ring);

struct Term {
    Monomial mono;
    Rational coeff;
};

/*
 * Sparse polynomial with exact rational coefficients.
 *
 * Terms are stored sorted descending by the ring's monomial order with no
 * zero coefficients, so two polynomials are equal exactly when their term
 * vectors are equal.
 */
class Polynomial {
public:
    explicit Polynomial(RingSpec ring = RingSpec()) : ring_(ring) {}

    static Polynomial constant(const RingSpec& ring, const Rational& c);
    static Polynomial variable(const RingSpec& ring, int var);
    static Polynomial monomial(const RingSpec& ring, Monomial m, const Rational& c = 1);
    /// Canonicalizes: sorts, merges duplicates and drops zeros.
    static Polynomial from_terms(const RingSpec& ring, std::vector<Term> terms);
    /// Trusts the caller that `terms` is already canonical.
    static Polynomial from_sorted_terms(const RingSpec& ring, std::vector<Term> terms);

    const RingSpec& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_homogeneous() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    int degree_in(int var) const;

    const Term& leading_term() const;
    Monomial leading_monomial() const { return leading_term().mono; }
    const Rational& leading_coeff() const { return leading_term().coeff; }
    Rational coeff(Monomial m) const;

    /// Scaled so that the leading coefficient is 1.
    Polynomial monic() const;
    /// Scaled to integer coefficients with gcd 1 and positive leading coefficient.
    Polynomial primitive() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);

    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(Monomial m, const Rational& c = 1) const;
    /// Same polynomial read in another ring; variables keep their role
    /// (x_i stays x_i, z stays z). Fails if a variable has no counterpart.
    Polynomial in_ring(const RingSpec& target) const;
    bool involves(int var) const;

    std::string to_string() const;

    bool operator==(const Polynomial& other) const;

private:
    RingSpec ring_;
    std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, int k);
Polynomial partial_derivative(const Polynomial& p, int var);
/// k-fold partial derivative.
Polynomial partial_derivative(const Polynomial& p, int var, int k);
/// Replaces `var` by `value`; `value` must live in p's ring.
Polynomial substitute(const Polynomial& p, int var, const Polynomial& value);
/// Exact quotient p / f; throws if f does not divide p.
Polynomial exact_divide(const Polynomial& p, const Polynomial& f);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
Polynomial operator*(const Rational& c, const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);
std::string rational_to_string(const Rational& q);

/// Syntax or naming error in polynomial text, with a 1-based column.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, int column);
    int column() const { return column_; }

private:
    int column_;
};

/*
 * Parses the text grammar used by the CLI and ideal files:
 *   rationals `a` or `a/b`, variables `x1..x<n>` and `z`, operators + - * ^,
 *   and parentheses. Juxtaposition is rejected.
 */
Polynomial parse_polynomial(const std::string& text, const RingSpec& ring);

}  // namespace psci

#endif  // PSCI_POLYRING_HPP
