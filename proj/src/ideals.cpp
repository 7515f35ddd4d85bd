#include "psci/ideals.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "psci/matrix.hpp"

namespace psci {

struct Ideal::State {
    RingSpec ring;
    std::vector<Polynomial> gens;
    std::function<GroebnerBasis()> compute;
    std::once_flag once;
    GroebnerBasis gb;
};

namespace {

void check_ring(const Polynomial& p, const RingSpec& ring) {
    if (!(p.ring() == ring)) throw RingMismatch("polynomial lives in a different ring");
}

void check_same_ring(const Ideal& I, const Ideal& J) {
    if (!(I.ring() == J.ring())) throw RingMismatch("ideals live in different rings");
}

// g / v^k, where every term of g is divisible by v^k.
Polynomial divide_by_power(const Polynomial& g, int var, int k) {
    if (k == 0) return g;
    const Monomial vk = Monomial::variable(var, k);
    std::vector<Term> terms;
    terms.reserve(g.size());
    for (const auto& t : g.terms()) terms.push_back({t.mono / vk, t.coeff});
    return Polynomial::from_sorted_terms(g.ring(), std::move(terms));
}

Polynomial drop_terms_with(const Polynomial& g, int var) {
    std::vector<Term> terms;
    for (const auto& t : g.terms())
        if (t.mono.exponent(var) == 0) terms.push_back(t);
    return Polynomial::from_sorted_terms(g.ring(), std::move(terms));
}

bool fast_last_variable(const RingSpec& ring, int var) { return !ring.aux && var == ring.last_var(); }

}  // namespace

Ideal::Ideal(const RingSpec& ring, std::vector<Polynomial> gens) : s_(std::make_shared<State>()) {
    s_->ring = ring;
    for (auto& g : gens) {
        check_ring(g, ring);
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw std::invalid_argument("ideal generators must be homogeneous: " + g.to_string());
        s_->gens.push_back(std::move(g));
    }
    s_->compute = [ring, gens = s_->gens] { return buchberger(ring, gens); };
}

Ideal Ideal::unit(const RingSpec& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal Ideal::from_groebner(GroebnerBasis gb) {
    auto s = std::make_shared<State>();
    s->ring = gb.ring;
    s->gens = gb.polys;
    s->gb = std::move(gb);
    std::call_once(s->once, [] {});
    return Ideal(std::move(s));
}

Ideal Ideal::with_strategy(const RingSpec& ring, std::vector<Polynomial> gens, std::function<GroebnerBasis()> compute) {
    Ideal out(ring, std::move(gens));
    out.s_->compute = std::move(compute);
    return out;
}

const RingSpec& Ideal::ring() const { return s_->ring; }
const std::vector<Polynomial>& Ideal::generators() const { return s_->gens; }

const GroebnerBasis& Ideal::gb() const {
    std::call_once(s_->once, [this] {
        s_->gb = s_->compute();
        s_->compute = nullptr;
    });
    return s_->gb;
}

std::vector<Polynomial> Ideal::groebner_basis() const {
    std::vector<Polynomial> out;
    for (const auto& g : gb().polys) out.push_back(g.primitive());
    return out;
}

Polynomial Ideal::normal_form(const Polynomial& p) const {
    check_ring(p, ring());
    return Reducer(gb().polys).reduce(p);
}

bool Ideal::contains(const Ideal& other) const {
    check_same_ring(*this, other);
    const Reducer r(gb().polys);
    for (const auto& g : other.gb().polys)
        if (!r.reduce(g).is_zero()) return false;
    return true;
}

int Ideal::non_artinian_variable() const {
    if (is_unit()) return -1;
    std::vector<bool> seen(ring().num_vars(), false);
    for (const auto& g : gb().polys) {
        const int v = g.leading_monomial().pure_power_var();
        if (v >= 0) seen[v] = true;
    }
    for (int v = 0; v < ring().num_vars(); ++v)
        if (!seen[v]) return v;
    return -1;
}

std::string Ideal::to_string() const {
    if (generators().empty()) return "(0)";
    std::string out = "(";
    for (std::size_t k = 0; k < generators().size(); ++k) {
        if (k) out += ", ";
        out += generators()[k].to_string();
    }
    return out + ")";
}

Polynomial normal_form(const Polynomial& p, const Ideal& I) { return I.normal_form(p); }

bool ideal_equal(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    return I.gb() == J.gb();
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal::with_strategy(I.ring(), std::move(gens), [I, J] { return extend_groebner(I.gb(), J.gb().polys); });
}

Ideal ideal_plus_variable(const Ideal& I, int var) {
    const RingSpec& ring = I.ring();
    if (!ring.valid_var(var)) throw std::out_of_range("variable index out of range");
    std::vector<Polynomial> gens = I.generators();
    const Polynomial v = Polynomial::variable(ring, var);
    gens.push_back(v);
    if (!fast_last_variable(ring, var))
        return Ideal::with_strategy(ring, std::move(gens), [I, v] { return extend_groebner(I.gb(), {v}); });
    // For the last variable of a graded reverse lex order, in(I + (v)) = in(I) + (v):
    // setting v = 0 in the basis elements whose leading monomial avoids v
    // gives a Groebner basis once v is added.
    return Ideal::with_strategy(ring, std::move(gens), [I, v, var] {
        if (I.is_unit()) return I.gb();
        std::vector<Polynomial> basis{v};
        for (const auto& g : I.gb().polys)
            if (g.leading_monomial().exponent(var) == 0) basis.push_back(drop_terms_with(g, var));
        return interreduce(I.ring(), std::move(basis));
    });
}

Ideal colon_by_variable_power(const Ideal& I, int var, int i) {
    const RingSpec& ring = I.ring();
    if (!ring.valid_var(var)) throw std::out_of_range("variable index out of range");
    if (i < 0) throw std::out_of_range("negative colon exponent");
    if (i == 0) return I;
    if (!fast_last_variable(ring, var)) return ideal_colon(I, Polynomial::monomial(ring, Monomial::variable(var, i)));
    // With v last in graded reverse lex, v^k dividing the leading monomial of a
    // homogeneous g means v^k divides g, and in(I : v^i) = in(I) : v^i.
    if (I.is_unit()) return I;
    std::vector<Polynomial> basis;
    for (const auto& g : I.gb().polys)
        basis.push_back(divide_by_power(g, var, std::min(i, g.leading_monomial().exponent(var))));
    return Ideal::from_groebner(interreduce(ring, std::move(basis)));
}

Ideal ideal_colon(const Ideal& I, const Polynomial& f) {
    check_ring(f, I.ring());
    if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
    if (f.is_constant() || I.is_unit()) return I;
    if (!f.is_homogeneous()) throw std::invalid_argument("colon needs a homogeneous polynomial");
    if (f.size() == 1) {
        const int v = f.leading_monomial().pure_power_var();
        if (v >= 0 && fast_last_variable(I.ring(), v)) return colon_by_variable_power(I, v, f.degree());
    }
    if (I.is_artinian()) return ideal_colon_linear(I, f);
    return ideal_colon_elimination(I, f);
}

Ideal ideal_colon_elimination(const Ideal& I, const Polynomial& f) {
    const RingSpec& ring = I.ring();
    check_ring(f, ring);
    if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
    if (f.is_constant() || I.is_unit()) return I;
    if (I.is_zero()) return I;
    const RingSpec aux = ring.with_aux();
    const Polynomial t = Polynomial::variable(aux, aux.t());
    const Polynomial fa = f.in_ring(aux);
    std::vector<Polynomial> gens;
    for (const auto& g : I.gb().polys) gens.push_back(mul(t, g.in_ring(aux)));
    gens.push_back(sub(fa, mul(t, fa)));
    const GroebnerBasis elim = buchberger(aux, gens);
    std::vector<Polynomial> quotients;
    for (const auto& h : elim.polys)
        if (!h.involves(aux.t())) quotients.push_back(exact_divide(h, fa).in_ring(ring));
    return Ideal(ring, std::move(quotients));
}

std::vector<Monomial> monomials_of_degree(const RingSpec& ring, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    const int nv = ring.num_vars();
    std::vector<int> exps(nv, 0);
    // Enumerate compositions of `degree` into nv parts.
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == nv - 1) {
            exps[var] = left;
            out.push_back(Monomial::from_exponents(exps));
            return;
        }
        for (int e = left; e >= 0; --e) {
            exps[var] = e;
            rec(var + 1, left - e);
        }
        exps[var] = 0;
    };
    rec(0, degree);
    const MonomialOrder ord = order_of(ring);
    std::sort(out.begin(), out.end(), [&](Monomial a, Monomial b) { return ord.greater(a, b); });
    return out;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int degree) {
    if (gb.is_unit()) return {};
    const std::vector<Monomial> leads = gb.leading_monomials();
    std::vector<Monomial> out;
    for (Monomial m : monomials_of_degree(gb.ring, degree)) {
        bool standard = true;
        for (Monomial l : leads)
            if (l.divides(m)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(m);
    }
    return out;
}

Ideal ideal_colon_linear(const Ideal& I, const Polynomial& f) {
    const RingSpec& ring = I.ring();
    check_ring(f, ring);
    if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
    if (f.is_constant() || I.is_unit()) return I;
    if (!f.is_homogeneous()) throw std::invalid_argument("colon needs a homogeneous polynomial");
    if (!I.is_artinian()) throw std::invalid_argument("linear colon needs an Artinian quotient");
    const int d = f.degree();
    const Reducer reducer(I.gb().polys);
    std::vector<Polynomial> kernel;
    for (int k = 0;; ++k) {
        const std::vector<Monomial> source = standard_monomials(I.gb(), k);
        if (source.empty()) break;
        const std::vector<Monomial> target = standard_monomials(I.gb(), k + d);
        if (target.empty()) {
            for (Monomial m : source) kernel.push_back(Polynomial::monomial(ring, m));
            continue;
        }
        std::unordered_map<std::uint64_t, std::size_t> row_of;
        for (std::size_t r = 0; r < target.size(); ++r) row_of[target[r].bits()] = r;
        RationalMatrix mat(target.size(), source.size());
        for (std::size_t c = 0; c < source.size(); ++c) {
            const Polynomial image = reducer.reduce(f.times_monomial(source[c]));
            for (const auto& t : image.terms()) mat.at(row_of.at(t.mono.bits()), c) = t.coeff;
        }
        for (const auto& v : nullspace(mat)) {
            std::vector<Term> terms;
            for (std::size_t c = 0; c < source.size(); ++c)
                if (v[c] != 0) terms.push_back({source[c], v[c]});
            kernel.push_back(Polynomial::from_sorted_terms(ring, std::move(terms)));
        }
    }
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), kernel.begin(), kernel.end());
    return Ideal::with_strategy(ring, std::move(gens), [I, kernel] { return extend_groebner(I.gb(), kernel); });
}

std::vector<Polynomial> minimal_generators(const Ideal& I) {
    if (I.is_zero()) return {};
    if (I.is_unit()) return {Polynomial::constant(I.ring(), 1)};
    const RingSpec& ring = I.ring();
    const GroebnerBasis& gb = I.gb();
    int top = 0;
    for (const auto& g : gb.polys) top = std::max(top, g.degree());
    // I_d = m I_{d-1} + span(basis elements of degree d). A basis of I_{d-1}
    // is {u - NF(u)} over non-standard monomials u of degree d-1.
    const Reducer reducer(gb.polys);
    std::vector<Polynomial> out;
    for (int d = 1; d <= top; ++d) {
        std::vector<const Polynomial*> fresh;
        for (const auto& g : gb.polys)
            if (g.degree() == d) fresh.push_back(&g);
        if (fresh.empty()) continue;
        const std::vector<Monomial> mons = monomials_of_degree(ring, d);
        std::unordered_map<std::uint64_t, std::size_t> col_of;
        for (std::size_t k = 0; k < mons.size(); ++k) col_of[mons[k].bits()] = k;
        std::vector<std::vector<Rational>> rows;
        auto push_row = [&](const Polynomial& p) {
            std::vector<Rational> row(mons.size());
            for (const auto& t : p.terms()) row[col_of.at(t.mono.bits())] = t.coeff;
            rows.push_back(std::move(row));
        };
        for (Monomial u : monomials_of_degree(ring, d - 1)) {
            const Polynomial up = Polynomial::monomial(ring, u);
            const Polynomial r = reducer.reduce(up);
            if (r == up) continue;
            const Polynomial elem = up - r;
            for (int v = 0; v < ring.num_vars(); ++v) push_row(elem.times_monomial(Monomial::variable(v)));
        }
        auto rank_of_rows = [&] {
            RationalMatrix m(rows.size(), mons.size());
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < mons.size(); ++c) m.at(r, c) = rows[r][c];
            return rank_exact(m);
        };
        std::size_t current = rows.empty() ? 0 : rank_of_rows();
        for (const Polynomial* g : fresh) {
            push_row(*g);
            const std::size_t next = rank_of_rows();
            if (next > current) {
                out.push_back(*g);
                current = next;
            } else {
                rows.pop_back();
            }
        }
    }
    return out;
}

InitialIdeal initial_ideal(const Ideal& I) {
    std::vector<Polynomial> leads;
    std::vector<bool> used(I.ring().num_vars(), false);
    bool ci = !I.is_unit();
    for (const auto& g : I.gb().polys) {
        const Monomial m = g.leading_monomial();
        leads.push_back(Polynomial::monomial(I.ring(), m));
        const int v = m.pure_power_var();
        if (v < 0 || used[v])
            ci = false;
        else
            used[v] = true;
    }
    return {Ideal::from_groebner(GroebnerBasis{I.ring(), std::move(leads)}), ci};
}

Ideal extend_ideal(const Ideal& I, const RingSpec& target) {
    const RingSpec& src = I.ring();
    if (target.nvars < src.nvars || (src.has_z && !target.has_z) || (src.has_z && target.nvars != src.nvars))
        throw RingMismatch("target ring does not contain the source ring");
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.in_ring(target));
    // Graded reverse lex restricted to the old variables is unchanged, so a
    // reduced basis stays reduced.
    return Ideal::with_strategy(target, std::move(gens), [I, target] {
        std::vector<Polynomial> polys;
        for (const auto& g : I.gb().polys) polys.push_back(g.in_ring(target));
        return GroebnerBasis{target, std::move(polys)};
    });
}

RingSpec ring_without_last_variable(const RingSpec& ring) {
    if (ring.aux) throw std::invalid_argument("contraction of an auxiliary ring");
    if (ring.has_z) return RingSpec(ring.nvars, false);
    if (ring.nvars < 2) throw std::invalid_argument("cannot drop the only variable");
    return RingSpec(ring.nvars - 1, false);
}

Ideal contract_last_variable(const Ideal& I) {
    const RingSpec target = ring_without_last_variable(I.ring());
    const int v = I.ring().last_var();
    const Ideal J = ideal_plus_variable(I, v);
    if (J.is_unit()) return Ideal::unit(target);
    std::vector<Polynomial> polys;
    for (const auto& g : J.gb().polys)
        if (!g.involves(v)) polys.push_back(g.in_ring(target));
    return Ideal::from_groebner(GroebnerBasis{target, std::move(polys)});
}

Ideal ideal_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("ideal file must be a JSON object");
    if (!j.contains("nvars") || !j["nvars"].is_number_integer())
        throw std::invalid_argument("ideal file needs an integer \"nvars\"");
    if (!j.contains("generators") || !j["generators"].is_array())
        throw std::invalid_argument("ideal file needs a \"generators\" array");
    bool has_z = false;
    if (j.contains("has_z")) {
        if (!j["has_z"].is_boolean()) throw std::invalid_argument("\"has_z\" must be a boolean");
        has_z = j["has_z"].get<bool>();
    }
    const RingSpec ring(j["nvars"].get<int>(), has_z);
    std::vector<Polynomial> gens;
    for (std::size_t k = 0; k < j["generators"].size(); ++k) {
        const auto& g = j["generators"][k];
        if (!g.is_string()) throw std::invalid_argument("generator " + std::to_string(k) + " is not a string");
        try {
            gens.push_back(parse_polynomial(g.get<std::string>(), ring));
        } catch (const ParseError& e) {
            throw std::invalid_argument("generator " + std::to_string(k) + ": " + e.what());
        }
    }
    return Ideal(ring, std::move(gens));
}

nlohmann::json ideal_to_json(const Ideal& I) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : I.generators()) gens.push_back(g.to_string());
    return {{"nvars", I.ring().nvars}, {"has_z", I.ring().has_z}, {"generators", gens}};
}

Ideal load_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open ideal file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return ideal_from_json(j);
}

}  // namespace psci
