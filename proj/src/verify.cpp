#include "psci/verify.hpp"

namespace psci {

namespace {

RingSpec ring_z(int n) { return RingSpec(n, true); }

void append_power_sums(std::vector<Polynomial>& gens, const RingSpec& ring, int from, int to) {
    for (int i = from; i <= to; ++i) gens.push_back(power_sum(ring, i));
}

void append_p_tilde(std::vector<Polynomial>& gens, const RingSpec& ring, int from, int to) {
    for (int i = from; i <= to; ++i) gens.push_back(p_tilde(ring, i));
}

void append_elementary(std::vector<Polynomial>& gens, const RingSpec& ring, int from, int to) {
    for (int i = from; i <= to; ++i) gens.push_back(e_signed(ring, i));
}

std::string range_text(int first, int last) {
    return "i = " + std::to_string(first) + ".." + std::to_string(last);
}

struct ExpectedRange {
    Ideal ideal;
    int first;
    int last;
};

struct ExpectedModule {
    Polynomial generator;  // e_{j-1}
    Ideal annihilator;     // J_j in K[x1..xn]
};

CheckNode check_chain(const CsmChain& ch, const std::vector<ExpectedRange>& expected, int unit_at) {
    CheckNode node = CheckNode::group("colon chain (I : z^i) + (z)");
    nlohmann::json observed = nlohmann::json::array();
    for (const auto& r : ch.ranges)
        observed.push_back({{"first", r.first}, {"last", r.last}, {"colength", r.colength}});
    node.data = {{"ranges", observed}, {"nilpotency_index", ch.p}};
    const std::size_t distinct = ch.ranges.size();
    node.check("number of distinct members", distinct == expected.size() + 1,
               std::to_string(distinct) + " observed, " + std::to_string(expected.size() + 1) + " expected");
    for (std::size_t k = 0; k < expected.size(); ++k) {
        const ExpectedRange& e = expected[k];
        const std::string name = "member " + std::to_string(k) + " on " + range_text(e.first, e.last);
        if (k >= distinct) {
            node.check(name, false, "chain too short");
            continue;
        }
        const ChainRange& r = ch.ranges[k];
        const bool same_ideal = ideal_equal(r.ideal, e.ideal);
        const bool same_range = r.first == e.first && r.last == e.last;
        std::string detail = same_range ? "" : "observed " + range_text(r.first, r.last);
        if (!same_ideal) detail += (detail.empty() ? "" : "; ") + std::string("ideal differs from ") + e.ideal.to_string();
        node.check(name, same_ideal && same_range, detail);
    }
    const bool unit_ok = ch.p == unit_at && !ch.ranges.empty() && ch.ranges.back().ideal.is_unit() &&
                         ch.ranges.back().first == unit_at;
    node.check("unit ideal from i = " + std::to_string(unit_at), unit_ok, "nilpotency index " + std::to_string(ch.p));
    bool increasing = true, strict = true;
    for (std::size_t k = 0; k + 1 < distinct; ++k) {
        increasing = increasing && ch.ranges[k + 1].ideal.contains(ch.ranges[k].ideal);
        strict = strict && ch.ranges[k + 1].colength < ch.ranges[k].colength;
    }
    node.check("inclusions hold", increasing);
    std::vector<long> colengths;
    for (const auto& r : ch.ranges) colengths.push_back(r.colength);
    node.check("inclusions are strict (colengths decrease)", strict, join_ints(colengths));
    return node;
}

CheckNode check_modules(const CsmChain& ch, const std::vector<ExpectedModule>& expected) {
    CheckNode node = CheckNode::group("central simple modules");
    const auto mods = central_simple_modules(ch);
    node.check("count", mods.size() == expected.size(),
               std::to_string(mods.size()) + " observed, " + std::to_string(expected.size()) + " expected");
    const RingSpec& big = ch.ideal.ring();
    for (std::size_t j = 0; j < std::min(mods.size(), expected.size()); ++j) {
        const ExpectedModule& e = expected[j];
        CheckNode u = CheckNode::group("U_" + std::to_string(j + 1));
        const CentralSimpleModule m = cyclic_presentation(mods[j].numerator, mods[j].denominator, e.generator);
        u.data = {{"generator", e.generator.to_string()},
                  {"annihilator", e.annihilator.to_string()},
                  {"graded_dims", m.graded_dims},
                  {"shift", m.shift}};
        u.check("numerator = denominator + (" + e.generator.to_string() + ")", m.presentation_ok);
        const Ideal want = ideal_plus_variable(extend_ideal(e.annihilator, big), big.z());
        u.check("(denominator : g) = J + (z) with J = " + e.annihilator.to_string(),
                ideal_equal(*m.annihilator, want));
        u.check("annihilator contains denominator", m.annihilator->contains(m.denominator));
        const std::vector<long> hj = hilbert_function(e.annihilator);
        u.check("Hilbert function equals that of R/J shifted by " + std::to_string(e.generator.degree()),
                m.graded_dims == hj && m.shift == e.generator.degree(),
                join_ints(m.graded_dims) + " from degree " + std::to_string(m.shift) + " vs " + join_ints(hj));
        node.add(std::move(u));
    }
    return node;
}

CheckNode check_annihilator_chain(int n, int a, int j_max) {
    CheckNode node = CheckNode::group("annihilators J_1 > J_2 > ... are regular sequences and nested");
    const RingSpec R(n, false);
    std::vector<Ideal> J;
    for (int j = 1; j <= j_max; ++j) {
        J.push_back(module_annihilator(R, a, j));
        const RegularSequenceCertificate cert = certify_regular_sequence(R, J.back().generators());
        node.check("J_" + std::to_string(j) + " regular", cert.regular,
                   "dim " + std::to_string(cert.dimension) + ", degree product " + std::to_string(cert.expected));
        std::vector<Polynomial> with_z;
        for (const auto& g : J.back().generators()) with_z.push_back(g.in_ring(ring_z(n)));
        with_z.push_back(Polynomial::variable(ring_z(n), ring_z(n).z()));
        node.check("J_" + std::to_string(j) + " + (z) regular", certify_regular_sequence(ring_z(n), with_z).regular);
    }
    for (int j = 1; j < j_max; ++j)
        node.check("J_" + std::to_string(j + 1) + " inside J_" + std::to_string(j),
                   J[j - 1].contains(J[j]));
    return node;
}

std::vector<ExpectedModule> expected_modules(int n, int a, int count) {
    const RingSpec R(n, false);
    std::vector<ExpectedModule> out;
    for (int j = 1; j <= count; ++j) out.push_back({e_signed(ring_z(n), j - 1), module_annihilator(R, a, j)});
    return out;
}

}  // namespace

Ideal power_sum_ideal(int n, int a) {
    if (n < 1 || a < 1) throw std::out_of_range("need n >= 1 and a >= 1");
    std::vector<Polynomial> gens;
    append_p_tilde(gens, ring_z(n), a, a + n);
    return Ideal(ring_z(n), gens);
}

Ideal mixed_ideal(int n, int a, int b) {
    if (n < 1 || a < 2 || b < 0 || b > n - 1) throw std::out_of_range("need n >= 1, a >= 2, 0 <= b <= n-1");
    std::vector<Polynomial> gens;
    append_p_tilde(gens, ring_z(n), a, a + b);
    for (int i = b + 2; i <= n + 1; ++i) gens.push_back(e_tilde(ring_z(n), i));
    return Ideal(ring_z(n), gens);
}

Ideal module_annihilator(const RingSpec& ring, int a, int j) {
    const int n = ring.nvars;
    if (j < 1 || j > n + 1) throw std::out_of_range("need 1 <= j <= n+1");
    std::vector<Polynomial> gens;
    append_power_sums(gens, ring, a - 1, a + j - 3);
    append_elementary(gens, ring, j, n);
    return Ideal(ring, gens);
}

Ideal power_chain_ideal(int n, int a, int k) {
    if (k < 0 || k > n) throw std::out_of_range("need 0 <= k <= n");
    const RingSpec r = ring_z(n);
    std::vector<Polynomial> gens;
    append_power_sums(gens, r, a, a + n - k - 1);
    append_elementary(gens, r, n + 1 - k, n);
    gens.push_back(Polynomial::variable(r, r.z()));
    return Ideal(r, gens);
}

Ideal mixed_chain_ideal(int n, int a, int b, int k) {
    if (k < 0 || k > b + 1) throw std::out_of_range("need 0 <= k <= b+1");
    const RingSpec r = ring_z(n);
    std::vector<Polynomial> gens;
    append_power_sums(gens, r, a, a + b - k);
    append_elementary(gens, r, b + 2 - k, n);
    gens.push_back(Polynomial::variable(r, r.z()));
    return Ideal(r, gens);
}

int mixed_chain_start(int n, int a, int b, int k) { return n - b + (k - 1) * a; }

CheckNode verify_complete_intersection(const std::string& name, const Ideal& I) {
    CheckNode node = CheckNode::group(name + " is a complete intersection");
    const auto cert = certify_regular_sequence(I.ring(), I.generators());
    node.check("dim R/I = product of degrees", cert.regular,
               "dim " + std::to_string(cert.dimension) + ", product " + std::to_string(cert.expected));
    if (cert.artinian) {
        const auto h = hilbert_function(I);
        node.check("Hilbert function symmetric", is_symmetric(h), join_ints(h));
    }
    return node;
}

CheckNode verify_filtration_identity(const CsmChain& ch) {
    long sum = 0;
    std::vector<long> terms;
    for (int i = 0; i < ch.p; ++i) {
        sum += ch.colengths[i];
        terms.push_back(ch.colengths[i]);
    }
    const long total = QuotientAlgebra(ch.ideal).dimension();
    CheckNode node = CheckNode::leaf("sum of colengths of the chain = dim R/I", sum == total,
                                     join_ints(terms) + " sums to " + std::to_string(sum) + ", dim " +
                                         std::to_string(total));
    node.data = {{"terms", terms}, {"sum", sum}, {"dimension", total}};
    return node;
}

CheckNode verify_newton(int n, int k_max, int m_max) {
    CheckNode node = CheckNode::group("Newton identities, n = " + std::to_string(n));
    for (int k = 1; k <= k_max; ++k) {
        const auto r = newton_check(n, k);
        node.check("k e_k + sum e_i p_{k-i} = 0, k = " + std::to_string(k), r.holds,
                   r.holds ? "" : "residual " + r.residual.to_string());
    }
    for (int m = n; m <= m_max; ++m) {
        const auto r = newton_vanishing_sum(n, m);
        node.check("sum_{i<=n} e_i p_{m-i} = 0, m = " + std::to_string(m), r.holds,
                   r.holds ? "" : "residual " + r.residual.to_string());
    }
    return node;
}

CheckNode verify_derivative_identities(DerivativeIdentity variant, int n, std::optional<int> b) {
    const bool full = variant == DerivativeIdentity::Full;
    const int size = full ? n : b.value_or(-1);
    std::string name = full ? "e Z u^(k) = f^(k+1)/(k+1), n = " + std::to_string(n)
                            : "e Z u^(k) = g^(k+1)/(k+1), n = " + std::to_string(n) + ", b = " + std::to_string(size);
    CheckNode node = CheckNode::group(name);
    for (int k = 2; k <= size - 1; ++k) {
        const auto r = derivative_identity_check(variant, n, b, k);
        node.check("k = " + std::to_string(k), r.holds, r.holds ? "" : "residual " + r.residual.to_string());
    }
    if (node.children.empty()) node.detail = "no k in range";
    return node;
}

CheckNode verify_chain_lemma(int n, int a, std::optional<int> b) {
    std::vector<ExpectedRange> expected;
    int unit_at = 0;
    Ideal I = b ? mixed_ideal(n, a, *b) : power_sum_ideal(n, a);
    if (!b && a == 1) {
        std::vector<Polynomial> gens;
        append_elementary(gens, ring_z(n), 1, n);
        gens.push_back(Polynomial::variable(ring_z(n), ring_z(n).z()));
        expected.push_back({Ideal(ring_z(n), gens), 0, n});
        unit_at = n + 1;
    } else if (!b) {
        for (int k = 0; k <= n; ++k) expected.push_back({power_chain_ideal(n, a, k), k * a, (k + 1) * a - 1});
        unit_at = (n + 1) * a;
    } else {
        expected.push_back({mixed_chain_ideal(n, a, *b, 0), 0, n - *b - 1});
        for (int k = 1; k <= *b + 1; ++k)
            expected.push_back({mixed_chain_ideal(n, a, *b, k), mixed_chain_start(n, a, *b, k),
                                mixed_chain_start(n, a, *b, k + 1) - 1});
        unit_at = mixed_chain_start(n, a, *b, *b + 2);
    }
    const CsmChain ch = csm_chain(I, I.ring().z());
    CheckNode node = check_chain(ch, expected, unit_at);
    node.name = "colon chain of " + I.to_string();
    return node;
}

CheckNode verify_theorem_3_1(int n, int a) {
    CheckNode node = CheckNode::group("power sums n = " + std::to_string(n) + ", a = " + std::to_string(a));
    const Ideal I = power_sum_ideal(n, a);
    node.data = {{"version", kVersion}, {"n", n}, {"a", a}, {"ideal", ideal_to_json(I)}};
    node.add(verify_complete_intersection("I", I));
    const CsmChain ch = csm_chain(I, I.ring().z());
    node.add(verify_chain_lemma(n, a));
    node.add(verify_filtration_identity(ch));
    const int s = a == 1 ? 1 : n + 1;
    node.add(check_modules(ch, expected_modules(n, a, s)));
    if (a >= 2) node.add(check_annihilator_chain(n, a, n + 1));
    node.add(verify_last_module(I, I.ring().z()));
    return node;
}

CheckNode verify_theorem_4_1(int n, int a, int b) {
    CheckNode node = CheckNode::group("mixed n = " + std::to_string(n) + ", a = " + std::to_string(a) +
                                      ", b = " + std::to_string(b));
    const Ideal I = mixed_ideal(n, a, b);
    node.data = {{"version", kVersion}, {"n", n}, {"a", a}, {"b", b}, {"ideal", ideal_to_json(I)}};
    node.add(verify_complete_intersection("I", I));
    const RingSpec r = ring_z(n);
    std::vector<Polynomial> gens;
    append_p_tilde(gens, r, a, a + b);
    append_elementary(gens, r, b + 1, n);
    node.check("I : z^(n-b) = (pt_a..pt_{a+b}, e_{b+1}..e_n)",
               ideal_equal(colon_by_variable_power(I, r.z(), n - b), Ideal(r, gens)));
    const CsmChain ch = csm_chain(I, r.z());
    node.add(verify_chain_lemma(n, a, b));
    node.add(verify_filtration_identity(ch));
    node.add(check_modules(ch, expected_modules(n, a, b + 2)));
    node.add(check_annihilator_chain(n, a, b + 2));
    node.add(verify_last_module(I, r.z()));
    return node;
}

CheckNode verify_generator_swap(BoundaryKind kind, int n, int a, std::optional<int> b) {
    const RingSpec r = ring_z(n);
    const Polynomial za = Polynomial::monomial(r, Monomial::variable(r.z(), a));
    if (a < 2) throw std::out_of_range("generator swap needs a >= 2");
    if (kind == BoundaryKind::F) {
        CheckNode node = CheckNode::group("z^a f^(k) replaces pt_{a+n-k}, n = " + std::to_string(n) +
                                          ", a = " + std::to_string(a));
        const Ideal I = power_sum_ideal(n, a);
        for (int k = 0; k <= n; ++k) {
            std::vector<Polynomial> tail;
            for (int l = k - 1; l >= 0; --l) tail.push_back(boundary_polynomial(BoundaryKind::F, n, std::nullopt, l));
            std::vector<Polynomial> lhs, rhs;
            append_p_tilde(lhs, r, a, a + n - k);
            append_p_tilde(rhs, r, a, a + n - k - 1);
            rhs.push_back(mul(za, boundary_polynomial(BoundaryKind::F, n, std::nullopt, k)));
            lhs.insert(lhs.end(), tail.begin(), tail.end());
            rhs.insert(rhs.end(), tail.begin(), tail.end());
            const Ideal Ik(r, lhs);
            CheckNode kn = CheckNode::group("k = " + std::to_string(k));
            kn.check("presentations agree", ideal_equal(Ik, Ideal(r, rhs)));
            kn.check("I : z^(" + std::to_string(k * a) + ") = I_k", ideal_equal(colon_by_variable_power(I, r.z(), k * a), Ik));
            node.add(std::move(kn));
        }
        node.check("I : z^" + std::to_string((n + 1) * a) + " is the unit ideal",
                   colon_by_variable_power(I, r.z(), (n + 1) * a).is_unit());
        return node;
    }
    if (!b || *b < 0 || *b >= n) throw std::out_of_range("g-swap needs 0 <= b < n");
    const int bb = *b;
    CheckNode node = CheckNode::group("z^a g^(k-1) replaces pt_{a+b+1-k}, n = " + std::to_string(n) +
                                      ", a = " + std::to_string(a) + ", b = " + std::to_string(bb));
    const Ideal I = mixed_ideal(n, a, bb);
    for (int k = 1; k <= bb + 1; ++k) {
        std::vector<Polynomial> tail;
        for (int l = k - 2; l >= 0; --l) tail.push_back(boundary_polynomial(BoundaryKind::G, n, bb, l));
        append_elementary(tail, r, bb + 1, n);
        std::vector<Polynomial> lhs, rhs;
        append_p_tilde(lhs, r, a, a + bb + 1 - k);
        append_p_tilde(rhs, r, a, a + bb - k);
        rhs.push_back(mul(za, boundary_polynomial(BoundaryKind::G, n, bb, k - 1)));
        lhs.insert(lhs.end(), tail.begin(), tail.end());
        rhs.insert(rhs.end(), tail.begin(), tail.end());
        const Ideal Ik(r, lhs);
        const int ck = mixed_chain_start(n, a, bb, k);
        CheckNode kn = CheckNode::group("k = " + std::to_string(k));
        kn.check("presentations agree", ideal_equal(Ik, Ideal(r, rhs)));
        kn.check("I : z^(" + std::to_string(ck) + ") = I_k", ideal_equal(colon_by_variable_power(I, r.z(), ck), Ik));
        node.add(std::move(kn));
    }
    const int top = mixed_chain_start(n, a, bb, bb + 2);
    node.check("I : z^" + std::to_string(top) + " is the unit ideal", colon_by_variable_power(I, r.z(), top).is_unit());
    return node;
}

CheckNode verify_colon_lemma(int n, int a, std::optional<int> s) {
    const RingSpec r = ring_z(n);
    const RingSpec R(n, false);
    const Polynomial z = Polynomial::variable(r, r.z());
    std::vector<Polynomial> J, Jp;
    Polynomial divisor(r);
    CheckNode node = CheckNode::group("");
    if (s) {
        if (*s < 0 || *s > n - 2) throw std::out_of_range("need 0 <= s <= n-2");
        node.name = "colon by e_" + std::to_string(*s + 1) + ", n = " + std::to_string(n) + ", a = " +
                    std::to_string(a) + ", s = " + std::to_string(*s);
        append_power_sums(J, r, a, a + *s);
        append_power_sums(Jp, r, a - 1, a + *s - 1);
        append_elementary(J, r, *s + 2, n);
        append_elementary(Jp, r, *s + 2, n);
        divisor = e_signed(r, *s + 1);
        // e_0 p_{a+s} + ... + e_{s+1} p_{a-1} lies in (e_{s+2}, ..., e_n).
        Polynomial sum(R);
        for (int i = 0; i <= *s + 1; ++i) sum += mul(e_signed(R, i), power_sum(R, a + *s - i));
        std::vector<Polynomial> tail;
        append_elementary(tail, R, *s + 2, n);
        // At a = 1 the last term is e_{s+1} p_0 = n e_{s+1}, and Newton's identity needs (s+1) e_{s+1}.
        if (a >= 2) node.check("sum_{i<=s+1} e_i p_{a+s-i} in (e_{s+2}..e_n)", Ideal(R, tail).contains(sum));
        std::vector<Polynomial> reg;
        append_power_sums(reg, r, a, a + *s - 1);
        append_elementary(reg, r, *s + 1, n);
        reg.push_back(z);
        if (a >= 2) node.check("p_a..p_{a+s-1}, e_{s+1}..e_n, z regular", certify_regular_sequence(r, reg).regular);
    } else {
        node.name = "colon by e_n, n = " + std::to_string(n) + ", a = " + std::to_string(a);
        append_power_sums(J, r, a, a + n - 1);
        append_power_sums(Jp, r, a - 1, a + n - 2);
        divisor = e_signed(r, n);
        Polynomial sum(R);
        for (int i = 0; i <= n; ++i) sum += mul(e_signed(R, i), power_sum(R, a + n - 1 - i));
        node.check("sum_{i<=n} e_i p_{a+n-1-i} = 0", sum.is_zero());
        std::vector<Polynomial> reg;
        append_power_sums(reg, r, a, a + n - 2);
        reg.push_back(e_signed(r, n));
        reg.push_back(z);
        if (a >= 2) node.check("p_a..p_{a+n-2}, e_n, z regular", certify_regular_sequence(r, reg).regular);
    }
    J.push_back(z);
    Jp.push_back(z);
    const Ideal JI(r, J), JpI(r, Jp);
    const Ideal colon = ideal_colon(JI, divisor);
    node.data = {{"J", JI.to_string()}, {"J_prime", JpI.to_string()}, {"divisor", divisor.to_string()}};
    node.check("J : e = J'", ideal_equal(colon, JpI));
    return node;
}

}  // namespace psci
