#include "psci/polyring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace psci {

// ---------------------------------------------------------------------------
// RingSpec

RingSpec::RingSpec(int n, bool z, bool aux_var) : nvars(n), has_z(z), aux(aux_var) {
    if (n < 1) throw std::invalid_argument("ring needs at least one x-variable");
    if (num_vars() > Monomial::kMaxVars)
        throw std::invalid_argument("ring has more than " + std::to_string(Monomial::kMaxVars) +
                                    " variables");
}

int RingSpec::x(int i) const {
    if (i < 1 || i > nvars) throw std::out_of_range("no variable x" + std::to_string(i));
    return i - 1;
}

int RingSpec::z() const {
    if (!has_z) throw std::out_of_range("ring has no variable z");
    return nvars;
}

int RingSpec::t() const {
    if (!aux) throw std::out_of_range("ring has no auxiliary variable");
    return nvars + (has_z ? 1 : 0);
}

std::string RingSpec::var_name(int var) const {
    if (var < nvars) return "x" + std::to_string(var + 1);
    if (has_z && var == nvars) return "z";
    return "t";
}

std::ostream& operator<<(std::ostream& os, const RingSpec& ring) {
    os << "K[x1..x" << ring.nvars << (ring.has_z ? ",z" : "") << (ring.aux ? ",t" : "") << "]";
    return os;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(int var, int power) {
    if (var < 0 || var >= kMaxVars) throw std::out_of_range("variable index out of range");
    if (power < 0 || power > kMaxDegree) throw std::overflow_error("monomial degree too large");
    return from_bits(static_cast<std::uint64_t>(power) << (8 * var));
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
    if (exps.size() > static_cast<std::size_t>(kMaxVars))
        throw std::out_of_range("too many exponents");
    std::uint64_t bits = 0;
    int total = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0) throw std::invalid_argument("negative exponent");
        total += exps[i];
        if (total > kMaxDegree) throw std::overflow_error("monomial degree too large");
        bits |= static_cast<std::uint64_t>(exps[i]) << (8 * i);
    }
    return from_bits(bits);
}

bool Monomial::coprime(Monomial other) const {
    for (int v = 0; v < kMaxVars; ++v)
        if (exponent(v) != 0 && other.exponent(v) != 0) return false;
    return true;
}

Monomial Monomial::operator*(Monomial other) const {
    if (degree() + other.degree() > kMaxDegree) throw std::overflow_error("monomial degree too large");
    return from_bits(bits_ + other.bits_);
}

Monomial Monomial::lcm(Monomial other) const {
    std::uint64_t bits = 0;
    for (int v = 0; v < kMaxVars; ++v)
        bits |= static_cast<std::uint64_t>(std::max(exponent(v), other.exponent(v))) << (8 * v);
    Monomial m = from_bits(bits);
    if (m.degree() > kMaxDegree) throw std::overflow_error("monomial degree too large");
    return m;
}

std::vector<std::pair<int, int>> Monomial::support() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < kMaxVars; ++v)
        if (int e = exponent(v)) out.emplace_back(v, e);
    return out;
}

int Monomial::pure_power_var() const {
    int found = -1;
    for (int v = 0; v < kMaxVars; ++v) {
        if (exponent(v) == 0) continue;
        if (found >= 0) return -1;
        found = v;
    }
    return found;
}

int compare_grevlex(Monomial a, Monomial b) {
    if (a == b) return 0;
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    const std::uint64_t diff = a.bits() ^ b.bits();
    const int var = (63 - __builtin_clzll(diff)) / 8;
    return a.exponent(var) < b.exponent(var) ? 1 : -1;
}

int MonomialOrder::compare(Monomial a, Monomial b) const {
    if (elim_var >= 0) {
        const int ea = a.exponent(elim_var), eb = b.exponent(elim_var);
        if (ea != eb) return ea > eb ? 1 : -1;
    }
    return compare_grevlex(a, b);
}

MonomialOrder order_of(const RingSpec& ring) {
    return MonomialOrder{ring.aux ? ring.t() : -1};
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

void check_same_ring(const Polynomial& p, const Polynomial& q) {
    if (!(p.ring() == q.ring())) throw RingMismatch("operands live in different rings");
}

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract,
                              const MonomialOrder& ord) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const int c = ord.compare(a[i].mono, b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({b[j].mono, subtract ? Rational(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (s != 0) out.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].mono, subtract ? Rational(-b[j].coeff) : b[j].coeff});
    return out;
}

void append_monomial(std::ostringstream& os, const RingSpec& ring, Monomial m) {
    bool first = true;
    for (auto [v, e] : m.support()) {
        if (!first) os << '*';
        first = false;
        os << ring.var_name(v);
        if (e > 1) os << '^' << e;
    }
}

}  // namespace

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Polynomial Polynomial::constant(const RingSpec& ring, const Rational& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({Monomial(), c});
    return p;
}

Polynomial Polynomial::variable(const RingSpec& ring, int var) {
    if (!ring.valid_var(var)) throw std::out_of_range("variable index out of range");
    return monomial(ring, Monomial::variable(var));
}

Polynomial Polynomial::monomial(const RingSpec& ring, Monomial m, const Rational& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(const RingSpec& ring, std::vector<Term> terms) {
    const MonomialOrder ord = order_of(ring);
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    Polynomial p(ring);
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
}

Polynomial Polynomial::from_sorted_terms(const RingSpec& ring, std::vector<Term> terms) {
    Polynomial p(ring);
    p.terms_ = std::move(terms);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.front().mono.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

int Polynomial::degree_in(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
    return d;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.front();
}

Rational Polynomial::coeff(Monomial m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return 0;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(Rational(1) / terms_.front().coeff);
}

Polynomial Polynomial::primitive() const {
    if (terms_.empty()) return *this;
    Integer den = 1, num = 0;
    for (const auto& t : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    for (const auto& t : terms_) {
        Rational v = t.coeff * den;
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_num_mpz_t());
    }
    Rational scale(den, num);
    scale.canonicalize();
    if (terms_.front().coeff < 0) scale = -scale;
    return scaled(scale);
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_same_ring(*this, other);
    terms_ = merge_terms(terms_, other.terms_, false, order_of(ring_));
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_same_ring(*this, other);
    terms_ = merge_terms(terms_, other.terms_, true, order_of(ring_));
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = mul(*this, other);
    return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial p(ring_);
    if (c == 0) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
    return p;
}

Polynomial Polynomial::times_monomial(Monomial m, const Rational& c) const {
    Polynomial p(ring_);
    if (c == 0) return p;
    p.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves the order, so no re-sort is needed.
    for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
    return p;
}

Polynomial Polynomial::in_ring(const RingSpec& target) const {
    if (target == ring_) return *this;
    std::vector<int> map(ring_.num_vars(), -1);
    for (int i = 0; i < ring_.nvars; ++i)
        if (i < target.nvars) map[i] = i;
    if (ring_.has_z && target.has_z) map[ring_.z()] = target.z();
    if (ring_.aux && target.aux) map[ring_.t()] = target.t();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<int> exps(target.num_vars(), 0);
        for (auto [v, e] : t.mono.support()) {
            if (map[v] < 0)
                throw RingMismatch("variable " + ring_.var_name(v) + " has no counterpart in target ring");
            exps[map[v]] = e;
        }
        out.push_back({Monomial::from_exponents(exps), t.coeff});
    }
    return from_terms(target, std::move(out));
}

bool Polynomial::involves(int var) const {
    return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono.exponent(var) > 0; });
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        const bool neg = t.coeff < 0;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        Rational mag = neg ? Rational(-t.coeff) : t.coeff;
        if (t.mono.is_one()) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << '*';
            append_monomial(os, ring_, t.mono);
        }
    }
    return os.str();
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (!(ring_ == other.ring_) || terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff) return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial add(const Polynomial& p, const Polynomial& q) {
    Polynomial r = p;
    r += q;
    return r;
}

Polynomial sub(const Polynomial& p, const Polynomial& q) {
    Polynomial r = p;
    r -= q;
    return r;
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
    check_same_ring(p, q);
    if (p.is_zero() || q.is_zero()) return Polynomial(p.ring());
    const Polynomial& small = p.size() <= q.size() ? p : q;
    const Polynomial& large = p.size() <= q.size() ? q : p;
    if (small.size() == 1) return large.times_monomial(small.terms()[0].mono, small.terms()[0].coeff);
    std::vector<Term> prod;
    prod.reserve(p.size() * q.size());
    for (const auto& a : p.terms())
        for (const auto& b : q.terms()) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return Polynomial::from_terms(p.ring(), std::move(prod));
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

Polynomial pow(const Polynomial& p, int k) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    Polynomial result = Polynomial::constant(p.ring(), 1);
    Polynomial base = p;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return result;
}

Polynomial partial_derivative(const Polynomial& p, int var) {
    if (!p.ring().valid_var(var)) throw std::out_of_range("variable index out of range");
    std::vector<Term> out;
    const Monomial x = Monomial::variable(var);
    for (const auto& t : p.terms()) {
        const int e = t.mono.exponent(var);
        if (e == 0) continue;
        out.push_back({t.mono / x, t.coeff * e});
    }
    return Polynomial::from_terms(p.ring(), std::move(out));
}

Polynomial partial_derivative(const Polynomial& p, int var, int k) {
    if (k < 0) throw std::invalid_argument("negative derivative order");
    Polynomial r = p;
    for (int i = 0; i < k; ++i) r = partial_derivative(r, var);
    return r;
}

Polynomial substitute(const Polynomial& p, int var, const Polynomial& value) {
    check_same_ring(p, value);
    if (!p.ring().valid_var(var)) throw std::out_of_range("variable index out of range");
    std::vector<Polynomial> powers{Polynomial::constant(p.ring(), 1)};
    Polynomial result(p.ring());
    // Group terms by exponent of `var` to share the power computations.
    std::map<int, std::vector<Term>> by_power;
    for (const auto& t : p.terms()) {
        const int e = t.mono.exponent(var);
        by_power[e].push_back({t.mono / Monomial::variable(var, e), t.coeff});
    }
    for (auto& [e, terms] : by_power) {
        while (static_cast<int>(powers.size()) <= e) powers.push_back(mul(powers.back(), value));
        result += mul(Polynomial::from_terms(p.ring(), std::move(terms)), powers[e]);
    }
    return result;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& f) {
    check_same_ring(p, f);
    if (f.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial quotient(p.ring()), rest = p;
    const Term& lead = f.leading_term();
    while (!rest.is_zero()) {
        const Term& lt = rest.leading_term();
        if (!lead.mono.divides(lt.mono)) throw std::domain_error("polynomial division is not exact");
        const Monomial m = lt.mono / lead.mono;
        const Rational c = lt.coeff / lead.coeff;
        quotient += Polynomial::monomial(p.ring(), m, c);
        rest -= f.times_monomial(m, c);
    }
    return quotient;
}

}  // namespace psci
