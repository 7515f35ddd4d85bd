#include <gtest/gtest.h>

#include <algorithm>

#include "psci/groebner.hpp"
#include "support.hpp"

using namespace psci;
using namespace psci::testing;

namespace {

bool is_reduced(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.polys.size(); ++i) {
        if (gb.polys[i].leading_coeff() != 1) return false;
        for (std::size_t j = 0; j < gb.polys.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : gb.polys[i].terms())
                if (gb.polys[j].leading_monomial().divides(t.mono)) return false;
        }
    }
    return true;
}

std::vector<Polynomial> random_generators(Gen& g, const RingSpec& r) {
    std::vector<Polynomial> gens;
    const int count = g.integer(1, 4);
    for (int k = 0; k < count; ++k) gens.push_back(g.homogeneous(r, g.integer(1, 3), g.integer(1, 4)));
    return gens;
}

}  // namespace

TEST(Groebner, RandomHomogeneousIdealsGiveReducedBases) {
    Gen g(31);
    for (int trial = 0; trial < 60; ++trial) {
        const RingSpec r(g.integer(2, 3), g.integer(0, 1) == 1);
        const auto gens = random_generators(g, r);
        const GroebnerBasis gb = buchberger(r, gens);
        EXPECT_TRUE(satisfies_buchberger_criterion(gb));
        EXPECT_TRUE(is_reduced(gb));
        const Reducer red(gb.polys);
        for (const auto& f : gens) EXPECT_TRUE(red.reduce(f).is_zero());
        for (std::size_t k = 1; k < gb.polys.size(); ++k)
            EXPECT_TRUE(order_of(r).greater(gb.polys[k - 1].leading_monomial(), gb.polys[k].leading_monomial()));
    }
}

TEST(Groebner, IndependentOfGeneratorOrderAndScaling) {
    Gen g(32);
    for (int trial = 0; trial < 40; ++trial) {
        const RingSpec r(3, false);
        auto gens = random_generators(g, r);
        const GroebnerBasis a = buchberger(r, gens);
        std::shuffle(gens.begin(), gens.end(), g.engine());
        for (auto& f : gens) f = f.scaled(Rational(-3, 2));
        EXPECT_EQ(buchberger(r, gens), a);
    }
}

TEST(Groebner, ExtensionMatchesFromScratch) {
    Gen g(33);
    for (int trial = 0; trial < 40; ++trial) {
        const RingSpec r(3, false);
        const auto first = random_generators(g, r), second = random_generators(g, r);
        std::vector<Polynomial> all = first;
        all.insert(all.end(), second.begin(), second.end());
        EXPECT_EQ(extend_groebner(buchberger(r, first), second), buchberger(r, all));
    }
}

TEST(Groebner, ReductionRemainderIsStandardAndCongruent) {
    Gen g(34);
    const RingSpec r(3, false);
    for (int trial = 0; trial < 40; ++trial) {
        const GroebnerBasis gb = buchberger(r, random_generators(g, r));
        const Polynomial f = g.polynomial(r, 4, 6);
        const Polynomial rem = Reducer(gb.polys).reduce(f);
        for (const auto& t : rem.terms())
            for (const auto& b : gb.polys) EXPECT_FALSE(b.leading_monomial().divides(t.mono));
        // f - rem lies in the ideal: reducing it gives zero.
        EXPECT_TRUE(Reducer(gb.polys).reduce(f - rem).is_zero());
    }
}

TEST(Groebner, KnownBases) {
    const RingSpec r(2, false);
    // (x1^2 + x2^2, x1*x2) adds x2^3.
    const GroebnerBasis gb = buchberger(r, {P("x1^2 + x2^2", r), P("x1*x2", r)});
    const std::vector<Polynomial> want{P("x2^3", r), P("x1^2 + x2^2", r), P("x1*x2", r)};
    std::vector<Polynomial> got = gb.polys;
    auto key = [](const Polynomial& p) { return p.to_string(); };
    std::sort(got.begin(), got.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
    std::vector<Polynomial> w = want;
    std::sort(w.begin(), w.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
    EXPECT_EQ(got, w);
    EXPECT_TRUE(buchberger(r, {P("x1", r), Polynomial::constant(r, 2)}).is_unit());
    EXPECT_TRUE(buchberger(r, {}).is_zero());
}

TEST(Groebner, EliminationOrderKeepsTFreePart) {
    // (t*x1, (1-t)*x2) in K[x1, x2, t]: the t-free part is (x1*x2), the intersection (x1) cap (x2).
    const RingSpec aux = RingSpec(2, false).with_aux();
    const Polynomial t = Polynomial::variable(aux, aux.t());
    const GroebnerBasis gb = buchberger(aux, {t * x(aux, 1), x(aux, 2) - t * x(aux, 2)});
    std::vector<Polynomial> free;
    for (const auto& p : gb.polys)
        if (!p.involves(aux.t())) free.push_back(p);
    ASSERT_EQ(free.size(), 1u);
    EXPECT_EQ(free[0], x(aux, 1) * x(aux, 2));
}
