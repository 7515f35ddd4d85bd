#ifndef PSCI_VERIFY_HPP
#define PSCI_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "psci/csm.hpp"
#include "psci/symfun.hpp"

namespace psci {

/*
 * Instance verifiers for the power-sum complete intersections in
 * K[x1..xn, z]:
 *   I(n, a)    = (pt_a, ..., pt_{a+n}),
 *   I(n, a, b) = (pt_a, ..., pt_{a+b}, et_{b+2}, ..., et_{n+1}),
 * where pt = p + z^i and et is the signed elementary polynomial with z
 * adjoined. Each verifier returns a report tree and never throws on a
 * mathematical mismatch.
 */

Ideal power_sum_ideal(int n, int a);
Ideal mixed_ideal(int n, int a, int b);

/// J_j = (p_{a-1}, ..., p_{a+j-3}, e_j, ..., e_n) in the given ring
/// (K[x1..xn] or K[x1..xn, z]).
Ideal module_annihilator(const RingSpec& ring, int a, int j);

/// a_k = (p_a, ..., p_{a+n-k-1}, e_{n+1-k}, ..., e_n, z), 0 <= k <= n.
Ideal power_chain_ideal(int n, int a, int k);
/// b_k = (p_a, ..., p_{a+b-k}, e_{b+2-k}, ..., e_n, z), 0 <= k <= b+1.
Ideal mixed_chain_ideal(int n, int a, int b, int k);

/// Exponent where the k-th mixed chain member starts: n - b + (k-1) a.
int mixed_chain_start(int n, int a, int b, int k);

/// Product of generator degrees equals dim R/I, and the Hilbert function is symmetric.
CheckNode verify_complete_intersection(const std::string& name, const Ideal& I);
/// sum_i dim R/((I : y^i) + (y)) = dim R/I.
CheckNode verify_filtration_identity(const CsmChain& chain);

CheckNode verify_newton(int n, int k_max, int m_max = -1);
CheckNode verify_derivative_identities(DerivativeIdentity variant, int n, std::optional<int> b = std::nullopt);

CheckNode verify_theorem_3_1(int n, int a);
CheckNode verify_theorem_4_1(int n, int a, int b);

/// Replacing pt_{a+n-k} by z^a f^(k) (kind F) or pt_{a+b+1-k} by z^a g^(k-1)
/// (kind G) keeps the ideal; also identifies these ideals with I : z^(...).
CheckNode verify_generator_swap(BoundaryKind kind, int n, int a, std::optional<int> b = std::nullopt);

/// s in 0..n-2: (p_a..p_{a+s}, e_{s+2}..e_n, z) : e_{s+1} = (p_{a-1}..p_{a+s-1}, e_{s+2}..e_n, z).
/// No s: (p_a..p_{a+n-1}, z) : e_n = (p_{a-1}..p_{a+n-2}, z).
CheckNode verify_colon_lemma(int n, int a, std::optional<int> s);

/// Colon chain of I(n, a) (no b) or I(n, a, b) against the expected members and exponent ranges.
CheckNode verify_chain_lemma(int n, int a, std::optional<int> b = std::nullopt);

}  // namespace psci

#endif  // PSCI_VERIFY_HPP
