#ifndef PSCI_SYMFUN_HPP
#define PSCI_SYMFUN_HPP

#include <optional>
#include <vector>

#include "psci/polyring.hpp"

namespace psci {

/*
 * Symmetric-polynomial generators.
 *
 * e_i is always the SIGNED elementary symmetric polynomial, defined by
 *   prod_{j=1..n} (z - x_j) = sum_{i=0..n} e_i z^{n-i},
 * so e_1 = -(x_1 + ... + x_n) and e_i = 0 for i > n. The unsigned version is
 * not exposed.
 *
 * p_i = x_1^i + ... + x_n^i with the convention p_0 = n (the number of
 * x-variables). This convention is load-bearing: it makes
 * sum_{i=0..n} e_i p_{m-i} = 0 hold for m = n as well as m > n.
 * Likewise ptilde_0 = n + 1.
 *
 * ptilde_i = p_i + z^i, and etilde_i is the signed elementary symmetric
 * polynomial in x_1..x_n, z (z playing x_{n+1}).
 */
enum class GeneratorKind { ESigned, P, PTilde, ETilde };

/// Generator in an explicit ring; n is ring.nvars. Tilde kinds need ring.has_z.
Polynomial symmetric_generator(GeneratorKind kind, const RingSpec& ring, int i);
/// Generator in its natural ring: K[x1..xn] for e/p, K[x1..xn,z] for the tilde kinds.
Polynomial symmetric_generator(GeneratorKind kind, int n, int i);

// Shorthands in an explicit ring.
inline Polynomial e_signed(const RingSpec& r, int i) { return symmetric_generator(GeneratorKind::ESigned, r, i); }
inline Polynomial power_sum(const RingSpec& r, int i) { return symmetric_generator(GeneratorKind::P, r, i); }
inline Polynomial p_tilde(const RingSpec& r, int i) { return symmetric_generator(GeneratorKind::PTilde, r, i); }
inline Polynomial e_tilde(const RingSpec& r, int i) { return symmetric_generator(GeneratorKind::ETilde, r, i); }

enum class BoundaryKind { F, G };

/*
 * f^(k) = d^k/dz^k of f^(0) = sum_{i=0..n} e_i z^{n-i}, for 0 <= k <= n, or
 * g^(k) = d^k/dz^k of g^(0) = sum_{i=0..b} e_i z^{b-i}, for 0 <= b < n, 0 <= k <= b.
 * Built from the closed falling-factorial form, not by differentiating.
 * Lives in K[x1..xn, z].
 */
Polynomial boundary_polynomial(BoundaryKind kind, int n, std::optional<int> b, int k);

struct IdentityResult {
    bool holds = false;
    Polynomial residual;
};

/// k e_k + sum_{i=0..k-1} e_i p_{k-i}, which must vanish (e_j = 0 for j > n).
IdentityResult newton_check(int n, int k);
/// sum_{i=0..n} e_i p_{m-i} for m >= n, using p_0 = n.
IdentityResult newton_vanishing_sum(int n, int m);

enum class DerivativeIdentity { Full, Truncated };

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// The row [e_{N-1}, ..., e_1, e_0], the lower-triangular Z with Z[i][j] = z^{i-j},
/// and the column u^(k) = [d^k/dz^k z^j]_{j<N}. N is n for Full and b for Truncated (the g^(k) family).
struct DerivativeMatrices {
    PolyMatrix e;
    PolyMatrix Z;
    PolyMatrix u;
};

DerivativeMatrices derivative_matrices(DerivativeIdentity variant, int n, std::optional<int> b, int k);
PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);

/// The 1x1 product e Z u^(k), for any 0 <= k < N.
Polynomial derivative_matrix_product(DerivativeIdentity variant, int n, std::optional<int> b, int k);

/*
 * Checks e Z u^(k) = f^(k+1)/(k+1) (Full, 2 <= k <= n-1) or the primed
 * version e' Z' u'^(k) = g^(k+1)/(k+1) (Truncated, 0 <= b < n, 2 <= k <= b-1).
 * Throws std::out_of_range outside those ranges.
 */
IdentityResult derivative_identity_check(DerivativeIdentity variant, int n, std::optional<int> b, int k);

}  // namespace psci

#endif  // PSCI_SYMFUN_HPP
