#include "psci/csm.hpp"

namespace psci {

int nilpotency_index(const QuotientAlgebra& A, const Polynomial& y) {
    if (y.is_zero() || !y.is_homogeneous() || y.degree() != 1) throw std::invalid_argument("y must be a linear form");
    Polynomial power = Polynomial::constant(A.ring(), 1);
    for (int p = 0;; ++p) {
        if (A.normal_form(power).is_zero()) return p;
        if (p > A.socle_degree()) throw std::logic_error("linear form is not nilpotent");
        power = A.normal_form(mul(power, y));
    }
}

CsmChain csm_chain(const Ideal& I, int var) {
    if (!I.ring().valid_var(var)) throw std::out_of_range("variable index out of range");
    if (const int v = I.non_artinian_variable(); v >= 0) throw NotArtinian(I.ring(), v);
    CsmChain ch{I, var, 0, {}, {}, {}};
    for (int i = 0;; ++i) {
        const Ideal colon = colon_by_variable_power(I, var, i);
        const Ideal member = ideal_plus_variable(colon, var);
        const long colength = member.is_unit() ? 0 : QuotientAlgebra(member).dimension();
        if (!ch.ranges.empty() && ideal_equal(ch.ranges.back().ideal, member)) {
            ch.ranges.back().last = i;
        } else {
            ch.ranges.push_back({member, i, i, colength});
        }
        ch.members.push_back(member);
        ch.colengths.push_back(colength);
        if (colon.is_unit()) {
            ch.p = i;
            break;
        }
    }
    return ch;
}

std::pair<std::vector<long>, int> quotient_dims(const Ideal& num, const Ideal& den) {
    const std::vector<long> hd = hilbert_function(den);
    const std::vector<long> hn = num.is_unit() ? std::vector<long>{} : hilbert_function(num);
    std::vector<long> dims;
    for (std::size_t d = 0; d < hd.size(); ++d) dims.push_back(hd[d] - (d < hn.size() ? hn[d] : 0));
    int shift = 0;
    while (!dims.empty() && dims.front() == 0) {
        dims.erase(dims.begin());
        ++shift;
    }
    while (!dims.empty() && dims.back() == 0) dims.pop_back();
    return {dims, shift};
}

std::vector<CentralSimpleModule> central_simple_modules(const CsmChain& chain) {
    const int s = static_cast<int>(chain.ranges.size()) - 1;
    std::vector<CentralSimpleModule> out;
    for (int j = 1; j <= s; ++j) {
        CentralSimpleModule u{j, chain.ranges[s + 1 - j].ideal, chain.ranges[s - j].ideal, {}, 0, {}, {}, false};
        std::tie(u.graded_dims, u.shift) = quotient_dims(u.numerator, u.denominator);
        out.push_back(std::move(u));
    }
    return out;
}

std::vector<CentralSimpleModule> central_simple_modules(const Ideal& I, int var) {
    return central_simple_modules(csm_chain(I, var));
}

CentralSimpleModule cyclic_presentation(const Ideal& num, const Ideal& den, const Polynomial& g) {
    CentralSimpleModule u{0, num, den, {}, 0, g, std::nullopt, false};
    std::tie(u.graded_dims, u.shift) = quotient_dims(num, den);
    const Ideal generated = ideal_sum(den, Ideal(den.ring(), {g}));
    u.presentation_ok = ideal_equal(generated, num);
    u.annihilator = ideal_colon(den, g);
    return u;
}

CheckNode verify_last_module(const Ideal& I, int var) {
    CheckNode node = CheckNode::group("last central simple module");
    const CsmChain ch = csm_chain(I, var);
    const auto mods = central_simple_modules(ch);
    const int s = static_cast<int>(mods.size());
    node.data = {{"ideal", I.to_string()}, {"s", s}, {"p", ch.p}};
    if (s == 0) {
        node.fail("the algebra is zero");
        return node;
    }
    const int q = ch.ranges.size() > 1 ? ch.ranges[1].first : 0;
    node.data["q"] = q;
    const CentralSimpleModule& last = mods.back();
    node.check("U_s = C_q / C_0",
               ideal_equal(last.numerator, ch.members[q]) && ideal_equal(last.denominator, ch.members[0]),
               "q = " + std::to_string(q));
    const Ideal top = colon_by_variable_power(I, var, q);
    if (top.is_unit()) {
        node.check("single module when (I : y^q) is the unit ideal", s == 1, "s = " + std::to_string(s));
        if (s == 1) {
            const auto [dims, shift] = quotient_dims(Ideal::unit(I.ring()), ch.members[0]);
            node.check("U_1 = R/(I + (y))", shift == 0 && dims == last.graded_dims);
        }
    } else {
        const auto rest = central_simple_modules(top, var);
        bool same = static_cast<int>(rest.size()) == s - 1;
        for (std::size_t j = 0; same && j < rest.size(); ++j)
            same = ideal_equal(rest[j].numerator, mods[j].numerator) &&
                   ideal_equal(rest[j].denominator, mods[j].denominator);
        node.check("modules of (I : y^q) are U_1..U_{s-1}", same,
                   std::to_string(rest.size()) + " modules vs s-1 = " + std::to_string(s - 1));
    }
    return node;
}

}  // namespace psci
