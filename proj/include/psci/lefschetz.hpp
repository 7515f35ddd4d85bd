#ifndef PSCI_LEFSCHETZ_HPP
#define PSCI_LEFSCHETZ_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "psci/quotient.hpp"

namespace psci {

struct SlpOptions {
    /// Also check d = c (the map A_0 -> A_c) for algebras.
    bool check_top_degree = false;
    std::optional<std::uint64_t> modular_prime;
};

struct SlpWitness {
    int d = 0;
    int i = 0;
    std::size_t rank = 0;
    std::size_t expected = 0;
};

struct LefschetzReport {
    std::string subject;
    Polynomial linear_form;
    bool holds = false;
    /// Failing pairs only, sorted by (d, i).
    std::vector<SlpWitness> witnesses;
    std::vector<long> hilbert;
    /// Degree of hilbert[0] (nonzero for modules).
    int shift = 0;
    int pairs_checked = 0;
    std::optional<std::uint64_t> seed;
    int tries = 0;
};

nlohmann::json to_json(const LefschetzReport& r);

/*
 * The cyclic module V = (den + (g)) / den inside R/den, graded by the
 * ambient degree. V_k is spanned by the columns of the matrix of x g from
 * (R/den)_{k - deg g} to (R/den)_k.
 */
class GradedModuleView {
public:
    GradedModuleView(QuotientAlgebra ambient, Polynomial generator);

    const QuotientAlgebra& ambient() const { return ambient_; }
    const Polynomial& generator() const { return generator_; }
    bool is_zero() const { return dims_.empty(); }
    /// Lowest and highest nonzero degrees; V_a != 0 and V_b != 0.
    int low() const { return low_; }
    int high() const { return high_; }
    /// dim V_k for k = a..b.
    const std::vector<long>& dims() const { return dims_; }
    long dim(int k) const;
    /// Columns span V_k inside (R/den)_k.
    RationalMatrix spanning_matrix(int k) const;

private:
    QuotientAlgebra ambient_;
    Polynomial generator_;
    int low_ = 0;
    int high_ = -1;
    std::vector<long> dims_;
};

/// Ranks of x y^d : A_i -> A_{i+d} for 1 <= d <= c-1, 0 <= i <= c-d.
LefschetzReport slp_check_algebra(const QuotientAlgebra& A, const Polynomial& y, const SlpOptions& opts = {});
/// Ranks of x y^d : V_i -> V_{i+d} for 1 <= d <= b-a, a <= i <= b-d.
LefschetzReport slp_check_module(const GradedModuleView& V, const Polynomial& y, const SlpOptions& opts = {});

/// Candidates in order: sum of all variables, each variable, then seeded
/// random combinations with small integer coefficients.
std::vector<Polynomial> lefschetz_candidates(const RingSpec& ring, int count, std::uint64_t seed);

/// First candidate with the SLP, or nothing after max_tries. The returned
/// report records the seed and the number of tries.
std::optional<LefschetzReport> find_lefschetz_element(const QuotientAlgebra& A, int max_tries, std::uint64_t seed = 1,
                                                      const SlpOptions& opts = {});

}  // namespace psci

#endif  // PSCI_LEFSCHETZ_HPP
