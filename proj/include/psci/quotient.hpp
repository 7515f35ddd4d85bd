#ifndef PSCI_QUOTIENT_HPP
#define PSCI_QUOTIENT_HPP

#include <vector>

#include "psci/ideals.hpp"
#include "psci/matrix.hpp"

namespace psci {

class NotArtinian : public std::invalid_argument {
public:
    NotArtinian(const RingSpec& ring, int var);
    int variable() const { return var_; }

private:
    int var_;
};

/*
 * A = R/I for Artinian I, as a graded vector space. The basis of A_d is the
 * list of standard monomials of degree d, descending in the monomial order,
 * so matrices come out the same on every run. The unit ideal gives the zero
 * algebra with socle degree -1.
 */
class QuotientAlgebra {
public:
    explicit QuotientAlgebra(const Ideal& I);

    const Ideal& ideal() const { return ideal_; }
    const RingSpec& ring() const { return ideal_.ring(); }
    int socle_degree() const { return static_cast<int>(basis_.size()) - 1; }
    const std::vector<std::vector<Monomial>>& basis_by_degree() const { return basis_; }
    /// Empty outside 0..c.
    const std::vector<Monomial>& basis(int degree) const;
    std::vector<long> hilbert_function() const;
    long dimension() const;

    Polynomial normal_form(const Polynomial& p) const { return reducer_.reduce(p); }
    /// Coordinates of a homogeneous degree-d polynomial in the basis of A_d.
    std::vector<Rational> coordinates(const Polynomial& p, int degree) const;

    /// Matrix of x f: A_i -> A_{i+deg f}; rows index the target basis.
    RationalMatrix mult_map_matrix(const Polynomial& f, int i) const;
    /// Same with the degree of f given explicitly, so f = 0 is allowed.
    RationalMatrix mult_map_matrix(const Polynomial& f, int d, int i) const;

private:
    Ideal ideal_;
    Reducer reducer_;
    std::vector<std::vector<Monomial>> basis_;
};

QuotientAlgebra build_quotient(const Ideal& I);
std::vector<long> hilbert_function(const QuotientAlgebra& A);
/// Hilbert function of R/I; throws NotArtinian.
std::vector<long> hilbert_function(const Ideal& I);
RationalMatrix mult_map_matrix(const QuotientAlgebra& A, const Polynomial& f, int i);

/// h_i = h_{c-i} for all i.
bool is_symmetric(const std::vector<long>& hilbert);
long total_dimension(const std::vector<long>& hilbert);

struct RegularSequenceCertificate {
    bool regular = false;
    bool artinian = false;
    long dimension = 0;  ///< dim_K R/(gens), 0 when not Artinian
    long expected = 0;   ///< product of the generator degrees
};

/// A square homogeneous system is a regular sequence iff R/(gens) is
/// Artinian of dimension prod deg g_i.
RegularSequenceCertificate certify_regular_sequence(const RingSpec& ring, const std::vector<Polynomial>& gens);

}  // namespace psci

#endif  // PSCI_QUOTIENT_HPP
