#include "psci/symfun.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace psci {

namespace {

// Unsigned elementary symmetric polynomials of the given variables, all degrees.
std::vector<Polynomial> elementary_table(const RingSpec& ring, const std::vector<int>& vars) {
    std::vector<Polynomial> table{Polynomial::constant(ring, 1)};
    for (int v : vars) {
        const Polynomial x = Polynomial::variable(ring, v);
        table.emplace_back(ring);
        for (std::size_t i = table.size() - 1; i >= 1; --i) table[i] += mul(x, table[i - 1]);
    }
    return table;
}

Polynomial compute_generator(GeneratorKind kind, const RingSpec& ring, int i) {
    const int n = ring.nvars;
    switch (kind) {
        case GeneratorKind::ESigned: {
            if (i < 0) throw std::out_of_range("e_i needs i >= 0");
            if (i > n) return Polynomial(ring);
            std::vector<int> xs;
            for (int v = 0; v < n; ++v) xs.push_back(v);
            const Polynomial e = elementary_table(ring, xs)[i];
            return (i % 2 == 0) ? e : -e;
        }
        case GeneratorKind::ETilde: {
            if (i < 0 || i > n + 1) throw std::out_of_range("etilde_i needs 0 <= i <= n+1");
            std::vector<int> vars;
            for (int v = 0; v < n; ++v) vars.push_back(v);
            vars.push_back(ring.z());
            const Polynomial e = elementary_table(ring, vars)[i];
            return (i % 2 == 0) ? e : -e;
        }
        case GeneratorKind::P:
        case GeneratorKind::PTilde: {
            if (i < 0) throw std::out_of_range("p_i needs i >= 0");
            const bool tilde = kind == GeneratorKind::PTilde;
            if (i == 0) return Polynomial::constant(ring, n + (tilde ? 1 : 0));
            std::vector<Term> terms;
            for (int v = 0; v < n; ++v) terms.push_back({Monomial::variable(v, i), 1});
            if (tilde) terms.push_back({Monomial::variable(ring.z(), i), 1});
            return Polynomial::from_terms(ring, std::move(terms));
        }
    }
    throw std::logic_error("unknown generator kind");
}

using CacheKey = std::tuple<int, int, bool, bool, int>;

}  // namespace

Polynomial symmetric_generator(GeneratorKind kind, const RingSpec& ring, int i) {
    if ((kind == GeneratorKind::PTilde || kind == GeneratorKind::ETilde) && !ring.has_z)
        throw std::invalid_argument("tilde generators need a ring with z");
    static std::mutex mu;
    static std::map<CacheKey, Polynomial> cache;
    const CacheKey key{static_cast<int>(kind), ring.nvars, ring.has_z, ring.aux, i};
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    Polynomial p = compute_generator(kind, ring, i);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(p)).first->second;
}

Polynomial symmetric_generator(GeneratorKind kind, int n, int i) {
    const bool tilde = kind == GeneratorKind::PTilde || kind == GeneratorKind::ETilde;
    return symmetric_generator(kind, RingSpec(n, tilde), i);
}

Polynomial boundary_polynomial(BoundaryKind kind, int n, std::optional<int> b, int k) {
    int top = n;
    if (kind == BoundaryKind::G) {
        if (!b || *b < 0 || *b >= n) throw std::out_of_range("g^(k) needs 0 <= b < n");
        top = *b;
    }
    if (k < 0 || k > top) throw std::out_of_range("derivative order out of range");
    const RingSpec ring(n, true);
    Polynomial out(ring);
    // d^k/dz^k (e_i z^{top-i}) = (top-i)(top-i-1)...(top-i-k+1) e_i z^{top-i-k}
    for (int i = 0; i + k <= top; ++i) {
        const int power = top - i;
        Integer falling = 1;
        for (int j = 0; j < k; ++j) falling *= power - j;
        const Polynomial zpow = Polynomial::monomial(ring, Monomial::variable(ring.z(), power - k));
        out += mul(e_signed(ring, i), zpow).scaled(Rational(falling));
    }
    return out;
}

IdentityResult newton_check(int n, int k) {
    if (k < 1) throw std::out_of_range("Newton's identity needs k >= 1");
    const RingSpec ring(n, false);
    Polynomial r = e_signed(ring, k).scaled(k);
    for (int i = 0; i < k; ++i) r += mul(e_signed(ring, i), power_sum(ring, k - i));
    return {r.is_zero(), r};
}

IdentityResult newton_vanishing_sum(int n, int m) {
    if (m < n) throw std::out_of_range("vanishing sum needs m >= n");
    const RingSpec ring(n, false);
    Polynomial r(ring);
    for (int i = 0; i <= n; ++i) r += mul(e_signed(ring, i), power_sum(ring, m - i));
    return {r.is_zero(), r};
}

DerivativeMatrices derivative_matrices(DerivativeIdentity variant, int n, std::optional<int> b, int k) {
    int size = n;
    if (variant == DerivativeIdentity::Truncated) {
        if (!b || *b < 0 || *b >= n) throw std::out_of_range("Truncated matrices need 0 <= b < n");
        size = *b;
    }
    if (k < 0) throw std::out_of_range("negative derivative order");
    const RingSpec ring(n, true);
    const int z = ring.z();
    DerivativeMatrices m;
    m.e.assign(1, {});
    for (int j = 0; j < size; ++j) m.e[0].push_back(e_signed(ring, size - 1 - j));
    m.Z.assign(size, std::vector<Polynomial>(size, Polynomial(ring)));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j <= i; ++j) m.Z[i][j] = Polynomial::monomial(ring, Monomial::variable(z, i - j));
    for (int j = 0; j < size; ++j)
        m.u.push_back({partial_derivative(Polynomial::monomial(ring, Monomial::variable(z, j)), z, k)});
    return m;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.empty() || b.empty() || a[0].size() != b.size()) throw std::invalid_argument("matrix shape mismatch");
    const RingSpec ring = b[0][0].ring();
    PolyMatrix c(a.size(), std::vector<Polynomial>(b[0].size(), Polynomial(ring)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b[0].size(); ++j)
            for (std::size_t l = 0; l < b.size(); ++l) c[i][j] += mul(a[i][l], b[l][j]);
    return c;
}

Polynomial derivative_matrix_product(DerivativeIdentity variant, int n, std::optional<int> b, int k) {
    const DerivativeMatrices m = derivative_matrices(variant, n, b, k);
    if (m.Z.empty()) return Polynomial(RingSpec(n, true));
    return matmul(matmul(m.e, m.Z), m.u)[0][0];
}

IdentityResult derivative_identity_check(DerivativeIdentity variant, int n, std::optional<int> b, int k) {
    const int top = variant == DerivativeIdentity::Full ? n - 1 : (b ? *b - 1 : -1);
    if (variant == DerivativeIdentity::Truncated && (!b || *b < 0 || *b >= n))
        throw std::out_of_range("Truncated needs 0 <= b < n");
    if (k < 2 || k > top) throw std::out_of_range("derivative identity needs 2 <= k <= N-1");
    const Polynomial lhs = derivative_matrix_product(variant, n, b, k);
    const BoundaryKind kind = variant == DerivativeIdentity::Full ? BoundaryKind::F : BoundaryKind::G;
    const Polynomial rhs = boundary_polynomial(kind, n, b, k + 1).scaled(Rational(1, k + 1));
    Polynomial residual = lhs - rhs;
    return {residual.is_zero(), residual};
}

}  // namespace psci
