#include "psci/lefschetz.hpp"

#include <random>

namespace psci {

nlohmann::json to_json(const LefschetzReport& r) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : r.witnesses) w.push_back({{"d", x.d}, {"i", x.i}, {"rank", x.rank}, {"expected", x.expected}});
    nlohmann::json j = {{"subject", r.subject},        {"linear_form", r.linear_form.to_string()},
                        {"holds", r.holds},            {"witnesses", w},
                        {"hilbert", r.hilbert},        {"shift", r.shift},
                        {"pairs_checked", r.pairs_checked}, {"tries", r.tries}};
    j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
    return j;
}

GradedModuleView::GradedModuleView(QuotientAlgebra ambient, Polynomial generator)
    : ambient_(std::move(ambient)), generator_(std::move(generator)) {
    if (!(generator_.ring() == ambient_.ring())) throw RingMismatch("generator lives in a different ring");
    if (generator_.is_zero() || !generator_.is_homogeneous())
        throw std::invalid_argument("module generator must be nonzero and homogeneous");
    const int e = generator_.degree();
    for (int k = e; k <= ambient_.socle_degree(); ++k) {
        const long r = static_cast<long>(rank_exact(spanning_matrix(k)));
        if (r == 0) break;
        if (dims_.empty()) low_ = k;
        dims_.push_back(r);
        high_ = k;
    }
}

long GradedModuleView::dim(int k) const {
    if (is_zero() || k < low_ || k > high_) return 0;
    return dims_[k - low_];
}

RationalMatrix GradedModuleView::spanning_matrix(int k) const {
    const int e = generator_.degree();
    if (k < e) return RationalMatrix(ambient_.basis(k).size(), 0);
    return ambient_.mult_map_matrix(generator_, e, k - e);
}

namespace {

void check_linear(const Polynomial& y, const RingSpec& ring) {
    if (!(y.ring() == ring)) throw RingMismatch("linear form lives in a different ring");
    if (y.is_zero() || !y.is_homogeneous() || y.degree() != 1) throw std::invalid_argument("y must be a linear form");
}

// Y[i] is the matrix of x y : A_i -> A_{i+1}.
std::vector<RationalMatrix> degree_one_maps(const QuotientAlgebra& A, const Polynomial& y) {
    std::vector<RationalMatrix> Y;
    for (int i = 0; i <= A.socle_degree(); ++i) Y.push_back(A.mult_map_matrix(y, 1, i));
    return Y;
}

}  // namespace

LefschetzReport slp_check_algebra(const QuotientAlgebra& A, const Polynomial& y, const SlpOptions& opts) {
    check_linear(y, A.ring());
    LefschetzReport rep;
    rep.subject = A.ideal().to_string();
    rep.linear_form = y;
    rep.hilbert = A.hilbert_function();
    const int c = A.socle_degree();
    const int d_max = opts.check_top_degree ? c : c - 1;
    const auto Y = degree_one_maps(A, y);
    for (int d = 1; d <= d_max; ++d)
        for (int i = 0; i + d <= c; ++i) {
            RationalMatrix P = Y[i];
            for (int k = 1; k < d; ++k) P = Y[i + k] * P;
            const std::size_t r = rank(P, opts.modular_prime);
            const std::size_t expected = static_cast<std::size_t>(std::min(rep.hilbert[i], rep.hilbert[i + d]));
            ++rep.pairs_checked;
            if (r < expected) rep.witnesses.push_back({d, i, r, expected});
        }
    rep.holds = rep.witnesses.empty();
    return rep;
}

LefschetzReport slp_check_module(const GradedModuleView& V, const Polynomial& y, const SlpOptions& opts) {
    if (V.is_zero()) throw std::invalid_argument("module is zero");
    const QuotientAlgebra& A = V.ambient();
    check_linear(y, A.ring());
    LefschetzReport rep;
    rep.subject = "(" + V.generator().to_string() + ") mod " + A.ideal().to_string();
    rep.linear_form = y;
    rep.hilbert = V.dims();
    rep.shift = V.low();
    const int a = V.low(), b = V.high();
    const auto Y = degree_one_maps(A, y);
    for (int d = 1; d <= b - a; ++d)
        for (int i = a; i + d <= b; ++i) {
            RationalMatrix P = V.spanning_matrix(i);
            for (int k = 0; k < d; ++k) P = Y[i + k] * P;
            const std::size_t r = rank(P, opts.modular_prime);
            const std::size_t expected = static_cast<std::size_t>(std::min(V.dim(i), V.dim(i + d)));
            ++rep.pairs_checked;
            if (r < expected) rep.witnesses.push_back({d, i, r, expected});
        }
    rep.holds = rep.witnesses.empty();
    return rep;
}

std::vector<Polynomial> lefschetz_candidates(const RingSpec& ring, int count, std::uint64_t seed) {
    std::vector<Polynomial> out;
    const int nv = ring.num_vars();
    if (count <= 0) return out;
    Polynomial all(ring);
    for (int v = 0; v < nv; ++v) all += Polynomial::variable(ring, v);
    out.push_back(all);
    for (int v = 0; v < nv && static_cast<int>(out.size()) < count; ++v) out.push_back(Polynomial::variable(ring, v));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    while (static_cast<int>(out.size()) < count) {
        Polynomial y(ring);
        for (int v = 0; v < nv; ++v) y += Polynomial::variable(ring, v).scaled(coeff(rng));
        if (!y.is_zero()) out.push_back(y);
    }
    return out;
}

std::optional<LefschetzReport> find_lefschetz_element(const QuotientAlgebra& A, int max_tries, std::uint64_t seed,
                                                      const SlpOptions& opts) {
    int tries = 0;
    for (const auto& y : lefschetz_candidates(A.ring(), max_tries, seed)) {
        ++tries;
        LefschetzReport rep = slp_check_algebra(A, y, opts);
        if (rep.holds) {
            rep.seed = seed;
            rep.tries = tries;
            return rep;
        }
    }
    return std::nullopt;
}

}  // namespace psci
