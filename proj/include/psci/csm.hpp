#ifndef PSCI_CSM_HPP
#define PSCI_CSM_HPP

#include <optional>
#include <vector>

#include "psci/quotient.hpp"
#include "psci/report.hpp"

namespace psci {

/// Least p with y^p in I.
int nilpotency_index(const QuotientAlgebra& A, const Polynomial& y);

/// Exponents first..last where the chain takes one value.
struct ChainRange {
    Ideal ideal;
    int first = 0;
    int last = 0;
    long colength = 0;  ///< dim_K R/ideal
};

/*
 * The chain C_i = (I : y^i) + (y), i = 0..p, for a ring variable y, with
 * p the nilpotency index of y in R/I (so C_p is the unit ideal). In R/I this
 * is (0 : y^i) + (y), and it is increasing in i.
 */
struct CsmChain {
    Ideal ideal;
    int var = 0;
    int p = 0;
    std::vector<Ideal> members;       ///< C_0..C_p
    std::vector<long> colengths;      ///< dim_K R/C_i
    std::vector<ChainRange> ranges;   ///< distinct members in increasing order; the last is the unit ideal
};

CsmChain csm_chain(const Ideal& I, int var);

struct CentralSimpleModule {
    int index = 0;  ///< j, 1-based
    Ideal numerator;
    Ideal denominator;
    /// dim (numerator/denominator)_d for d = shift, shift+1, ...
    std::vector<long> graded_dims;
    int shift = 0;
    std::optional<Polynomial> cyclic_generator;
    std::optional<Ideal> annihilator;
    /// numerator = denominator + (generator); meaningful when a generator is set.
    bool presentation_ok = false;
};

/// Graded dimensions of num/den for den contained in num, both Artinian
/// (num may be the unit ideal). Returns (dims, shift) with leading zeros trimmed.
std::pair<std::vector<long>, int> quotient_dims(const Ideal& num, const Ideal& den);

/*
 * U_1..U_s read off a chain with distinct members a_0 < a_1 < ... < a_s
 * (a_s the unit ideal): U_j = a_{s+1-j} / a_{s-j}. So U_1 is the top
 * quotient R/C_{p-1} and U_s = a_1 / a_0.
 */
std::vector<CentralSimpleModule> central_simple_modules(const CsmChain& chain);
std::vector<CentralSimpleModule> central_simple_modules(const Ideal& I, int var);

/// Checks num = den + (g) and computes the annihilator (den : g).
CentralSimpleModule cyclic_presentation(const Ideal& num, const Ideal& den, const Polynomial& g);

/*
 * Consistency of the last module with the first jump of the chain: with q
 * the least i where C_i differs from C_0, U_s = C_q / C_0. When (I : y^q)
 * is the unit ideal there is a single module, R/C_0. The modules of
 * (I : y^q) are then compared with U_1..U_{s-1}.
 */
CheckNode verify_last_module(const Ideal& I, int var);

}  // namespace psci

#endif  // PSCI_CSM_HPP
