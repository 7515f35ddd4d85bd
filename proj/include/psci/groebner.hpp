#ifndef PSCI_GROEBNER_HPP
#define PSCI_GROEBNER_HPP

#include <vector>

#include "psci/polyring.hpp"

namespace psci {

/// A reduced Groebner basis: monic elements sorted by leading monomial,
/// descending. Canonical for the ideal it generates under the ring's order.
struct GroebnerBasis {
    RingSpec ring;
    std::vector<Polynomial> polys;

    bool is_zero() const { return polys.empty(); }
    bool is_unit() const { return polys.size() == 1 && polys[0].is_constant(); }
    std::vector<Monomial> leading_monomials() const;
    bool operator==(const GroebnerBasis& other) const { return ring == other.ring && polys == other.polys; }
};

/// Full reduction (normal form) of p by a list of monic polynomials.
class Reducer {
public:
    /// `skip` excludes one element (used for tail reduction).
    explicit Reducer(const std::vector<Polynomial>& basis, int skip = -1);
    explicit Reducer(std::vector<const Polynomial*> basis);

    Polynomial reduce(const Polynomial& p) const;
    /// Index of a basis element whose leading monomial divides m, or -1.
    int find_divisor(Monomial m) const;

private:
    std::vector<const Polynomial*> basis_;
    std::vector<Monomial> leads_;
};

/// Buchberger's algorithm with the normal selection strategy (sugar) and the
/// Gebauer-Moeller criteria. Zero generators are ignored.
GroebnerBasis buchberger(const RingSpec& ring, const std::vector<Polynomial>& gens);

/// Groebner basis of base + (extra). Pairs inside `base` are not revisited.
GroebnerBasis extend_groebner(const GroebnerBasis& base, const std::vector<Polynomial>& extra);

/// Turns any Groebner basis into the reduced one.
GroebnerBasis interreduce(const RingSpec& ring, std::vector<Polynomial> basis);

/// S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// True when every S-polynomial of `basis` reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);

}  // namespace psci

#endif  // PSCI_GROEBNER_HPP
