#include "psci/quotient.hpp"

#include <unordered_map>

namespace psci {

NotArtinian::NotArtinian(const RingSpec& ring, int var)
    : std::invalid_argument("quotient is not Artinian: no power of " + ring.var_name(var) +
                            " among the leading monomials"),
      var_(var) {}

QuotientAlgebra::QuotientAlgebra(const Ideal& I) : ideal_(I), reducer_(I.gb().polys) {
    if (const int v = I.non_artinian_variable(); v >= 0) throw NotArtinian(I.ring(), v);
    if (I.is_unit()) return;
    for (int d = 0;; ++d) {
        std::vector<Monomial> b = standard_monomials(I.gb(), d);
        if (b.empty()) break;
        basis_.push_back(std::move(b));
    }
}

const std::vector<Monomial>& QuotientAlgebra::basis(int degree) const {
    static const std::vector<Monomial> empty;
    if (degree < 0 || degree > socle_degree()) return empty;
    return basis_[degree];
}

std::vector<long> QuotientAlgebra::hilbert_function() const {
    std::vector<long> h;
    for (const auto& b : basis_) h.push_back(static_cast<long>(b.size()));
    return h;
}

long QuotientAlgebra::dimension() const { return total_dimension(hilbert_function()); }

std::vector<Rational> QuotientAlgebra::coordinates(const Polynomial& p, int degree) const {
    const auto& b = basis(degree);
    std::vector<Rational> out(b.size());
    const Polynomial r = normal_form(p);
    // Both lists are descending in the same order, so one merge pass suffices.
    std::size_t k = 0;
    for (const auto& t : r.terms()) {
        while (k < b.size() && !(b[k] == t.mono)) ++k;
        if (k == b.size()) throw std::invalid_argument("polynomial is not homogeneous of the requested degree");
        out[k] = t.coeff;
    }
    return out;
}

RationalMatrix QuotientAlgebra::mult_map_matrix(const Polynomial& f, int i) const {
    if (f.is_zero()) throw std::invalid_argument("degree of the zero polynomial is ambiguous; pass it explicitly");
    return mult_map_matrix(f, f.degree(), i);
}

RationalMatrix QuotientAlgebra::mult_map_matrix(const Polynomial& f, int d, int i) const {
    if (!(f.ring() == ring())) throw RingMismatch("polynomial lives in a different ring");
    if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != d))
        throw std::invalid_argument("multiplier must be homogeneous of degree " + std::to_string(d));
    if (d < 0 || i < 0) throw std::out_of_range("degree out of range");
    const auto& src = basis(i);
    const auto& dst = basis(i + d);
    RationalMatrix m(dst.size(), src.size());
    if (f.is_zero() || dst.empty()) return m;
    for (std::size_t c = 0; c < src.size(); ++c) {
        const std::vector<Rational> col = coordinates(f.times_monomial(src[c]), i + d);
        for (std::size_t r = 0; r < dst.size(); ++r) m.at(r, c) = col[r];
    }
    return m;
}

QuotientAlgebra build_quotient(const Ideal& I) { return QuotientAlgebra(I); }

std::vector<long> hilbert_function(const QuotientAlgebra& A) { return A.hilbert_function(); }

std::vector<long> hilbert_function(const Ideal& I) { return QuotientAlgebra(I).hilbert_function(); }

RationalMatrix mult_map_matrix(const QuotientAlgebra& A, const Polynomial& f, int i) { return A.mult_map_matrix(f, i); }

bool is_symmetric(const std::vector<long>& h) {
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i] != h[h.size() - 1 - i]) return false;
    return true;
}

long total_dimension(const std::vector<long>& h) {
    long s = 0;
    for (long x : h) s += x;
    return s;
}

RegularSequenceCertificate certify_regular_sequence(const RingSpec& ring, const std::vector<Polynomial>& gens) {
    if (static_cast<int>(gens.size()) != ring.num_vars())
        throw std::invalid_argument("regular-sequence certificate needs as many generators as variables");
    RegularSequenceCertificate cert;
    cert.expected = 1;
    for (const auto& g : gens) {
        if (g.is_zero() || !g.is_homogeneous() || g.degree() < 1)
            throw std::invalid_argument("generators must be homogeneous of positive degree");
        cert.expected *= g.degree();
    }
    const Ideal I(ring, gens);
    cert.artinian = I.is_artinian();
    if (!cert.artinian) return cert;
    cert.dimension = QuotientAlgebra(I).dimension();
    cert.regular = cert.dimension == cert.expected;
    return cert;
}

}  // namespace psci
