#ifndef PSCI_TESTS_SUPPORT_HPP
#define PSCI_TESTS_SUPPORT_HPP

#include <map>
#include <random>
#include <vector>

#include "psci/ideals.hpp"
#include "psci/matrix.hpp"

namespace psci::testing {

// Small random objects for property tests. Everything is seeded, so a
// failure reproduces exactly.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational() {
        const int num = integer(-7, 7);
        const int den = integer(1, 4);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    Monomial monomial(const RingSpec& ring, int degree) {
        std::vector<int> e(ring.num_vars(), 0);
        for (int k = 0; k < degree; ++k) ++e[integer(0, ring.num_vars() - 1)];
        return Monomial::from_exponents(e);
    }

    Polynomial polynomial(const RingSpec& ring, int max_degree, int terms) {
        std::vector<Term> t;
        for (int k = 0; k < terms; ++k) t.push_back({monomial(ring, integer(0, max_degree)), rational()});
        return Polynomial::from_terms(ring, std::move(t));
    }

    Polynomial homogeneous(const RingSpec& ring, int degree, int terms) {
        for (;;) {
            std::vector<Term> t;
            for (int k = 0; k < terms; ++k) t.push_back({monomial(ring, degree), rational()});
            Polynomial p = Polynomial::from_terms(ring, std::move(t));
            if (!p.is_zero()) return p;
        }
    }

    // Homogeneous ideal with pure powers of every variable thrown in, so R/I is Artinian.
    Ideal artinian_ideal(const RingSpec& ring, int extra, int max_degree) {
        std::vector<Polynomial> gens;
        for (int v = 0; v < ring.num_vars(); ++v)
            gens.push_back(Polynomial::monomial(ring, Monomial::variable(v, integer(2, max_degree))));
        for (int k = 0; k < extra; ++k) gens.push_back(homogeneous(ring, integer(1, max_degree), integer(1, 3)));
        return Ideal(ring, gens);
    }

    RationalMatrix matrix(std::size_t rows, std::size_t cols, int zero_bias = 0) {
        RationalMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = integer(0, zero_bias) == 0 ? rational() : Rational(0);
        return m;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Evaluates p at a rational point; independent of the multiplication code.
inline Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
    Rational sum = 0;
    for (const auto& t : p.terms()) {
        Rational v = t.coeff;
        for (int k = 0; k < static_cast<int>(point.size()); ++k)
            for (int e = 0; e < t.mono.exponent(k); ++e) v *= point[k];
        sum += v;
    }
    return sum;
}

// Rank by textbook Gaussian elimination over the rationals.
inline std::size_t naive_rank(RationalMatrix m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(pivot, k), m.at(rank, k));
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            const Rational f = m.at(r, c) / m.at(rank, c);
            for (std::size_t k = c; k < m.cols(); ++k) m.at(r, k) -= f * m.at(rank, k);
        }
        ++rank;
    }
    return rank;
}

// Hilbert function of a complete intersection from its degrees alone:
// coefficients of prod (1 + t + ... + t^{d-1}).
inline std::vector<long> ci_hilbert(const std::vector<int>& degrees) {
    std::vector<long> h{1};
    for (int d : degrees) {
        std::vector<long> next(h.size() + d - 1, 0);
        for (std::size_t i = 0; i < h.size(); ++i)
            for (int j = 0; j < d; ++j) next[i + j] += h[i];
        h = next;
    }
    return h;
}

// Hilbert function of a monomial quotient by direct counting.
inline std::vector<long> monomial_hilbert(const RingSpec& ring, const std::vector<Monomial>& gens, int max_degree) {
    std::vector<long> h;
    for (int d = 0; d <= max_degree; ++d) {
        long count = 0;
        for (Monomial m : monomials_of_degree(ring, d)) {
            bool standard = true;
            for (Monomial g : gens) standard = standard && !g.divides(m);
            count += standard;
        }
        h.push_back(count);
    }
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

inline Polynomial x(const RingSpec& ring, int i) { return Polynomial::variable(ring, ring.x(i)); }
inline Polynomial zvar(const RingSpec& ring) { return Polynomial::variable(ring, ring.z()); }
inline Polynomial P(const std::string& text, const RingSpec& ring) { return parse_polynomial(text, ring); }

}  // namespace psci::testing

#endif  // PSCI_TESTS_SUPPORT_HPP
