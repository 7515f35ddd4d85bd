#include "psci/groebner.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace psci {

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(p.leading_monomial());
    return out;
}

// ---------------------------------------------------------------------------
// Reduction

namespace {

struct BitsGreater {
    MonomialOrder ord;
    bool operator()(std::uint64_t a, std::uint64_t b) const {
        return ord.greater(Monomial::from_bits(a), Monomial::from_bits(b));
    }
};

}  // namespace

Reducer::Reducer(const std::vector<Polynomial>& basis, int skip) {
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (static_cast<int>(k) != skip) basis_.push_back(&basis[k]);
    for (const auto* g : basis_) leads_.push_back(g->leading_monomial());
}

Reducer::Reducer(std::vector<const Polynomial*> basis) : basis_(std::move(basis)) {
    for (const auto* g : basis_) leads_.push_back(g->leading_monomial());
}

int Reducer::find_divisor(Monomial m) const {
    for (std::size_t i = 0; i < leads_.size(); ++i)
        if (leads_[i].divides(m)) return static_cast<int>(i);
    return -1;
}

Polynomial Reducer::reduce(const Polynomial& p) const {
    if (p.is_zero() || basis_.empty()) return p;
    const RingSpec& ring = p.ring();
    std::map<std::uint64_t, Rational, BitsGreater> work(BitsGreater{order_of(ring)});
    for (const auto& t : p.terms()) work.emplace_hint(work.end(), t.mono.bits(), t.coeff);
    std::vector<Term> rest;
    while (!work.empty()) {
        auto top = work.begin();
        const Monomial m = Monomial::from_bits(top->first);
        const int d = find_divisor(m);
        if (d < 0) {
            rest.push_back({m, std::move(top->second)});
            work.erase(top);
            continue;
        }
        const Rational c = top->second;  // basis elements are monic
        const Monomial q = m / leads_[d];
        work.erase(top);
        const auto& gterms = basis_[d]->terms();
        for (std::size_t k = 1; k < gterms.size(); ++k) {
            const std::uint64_t key = (gterms[k].mono * q).bits();
            auto [it, inserted] = work.try_emplace(key);
            it->second -= c * gterms[k].coeff;
            if (it->second == 0) work.erase(it);
        }
    }
    return Polynomial::from_sorted_terms(ring, std::move(rest));
}

// ---------------------------------------------------------------------------
// Buchberger

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Monomial lf = f.leading_monomial(), lg = g.leading_monomial();
    const Monomial l = lf.lcm(lg);
    return f.times_monomial(l / lf, Rational(1) / f.leading_coeff()) -
           g.times_monomial(l / lg, Rational(1) / g.leading_coeff());
}

namespace {

struct Pair {
    int i;
    int j;
    Monomial lcm;
    int sugar;
};

class Buchberger {
public:
    explicit Buchberger(const RingSpec& ring) : ring_(ring), ord_(order_of(ring)) {}

    void seed_basis(const std::vector<Polynomial>& basis) {
        for (const auto& g : basis) {
            polys_.push_back(g.monic());
            leads_.push_back(g.leading_monomial());
            sugar_.push_back(g.degree());
            active_.push_back(true);
        }
    }

    GroebnerBasis run(std::vector<Polynomial> gens) {
        std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
        std::stable_sort(gens.begin(), gens.end(),
                         [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
        std::size_t next_gen = 0;
        while (!unit_ && (next_gen < gens.size() || !pairs_.empty())) {
            const std::size_t best = select_pair();
            const int pair_sugar = pairs_.empty() ? std::numeric_limits<int>::max() : pairs_[best].sugar;
            if (next_gen < gens.size() && gens[next_gen].degree() <= pair_sugar) {
                const Polynomial& g = gens[next_gen++];
                insert(reduce_active(g), g.degree());
                continue;
            }
            const Pair p = pairs_[best];
            pairs_[best] = pairs_.back();
            pairs_.pop_back();
            const Polynomial s = s_polynomial(polys_[p.i], polys_[p.j]);
            insert(reduce_active(s), p.sugar);
        }
        if (unit_) return GroebnerBasis{ring_, {Polynomial::constant(ring_, 1)}};
        std::vector<Polynomial> basis;
        for (std::size_t k = 0; k < polys_.size(); ++k)
            if (active_[k]) basis.push_back(polys_[k]);
        return interreduce(ring_, std::move(basis));
    }

private:
    std::size_t select_pair() const {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            const Pair& a = pairs_[k];
            const Pair& b = pairs_[best];
            if (a.sugar < b.sugar || (a.sugar == b.sugar && ord_.compare(a.lcm, b.lcm) < 0)) best = k;
        }
        return best;
    }

    Polynomial reduce_active(const Polynomial& p) {
        std::vector<const Polynomial*> active;
        for (std::size_t k = 0; k < polys_.size(); ++k)
            if (active_[k]) active.push_back(&polys_[k]);
        return Reducer(std::move(active)).reduce(p);
    }

    void insert(const Polynomial& reduced, int sugar) {
        if (reduced.is_zero()) return;
        if (reduced.is_constant()) {
            unit_ = true;
            return;
        }
        const int h = static_cast<int>(polys_.size());
        polys_.push_back(reduced.monic());
        leads_.push_back(reduced.leading_monomial());
        sugar_.push_back(std::max(sugar, reduced.degree()));
        active_.push_back(true);
        update(h);
    }

    int pair_sugar(int i, int j, Monomial l) const {
        return std::max(sugar_[i] + (l / leads_[i]).degree(), sugar_[j] + (l / leads_[j]).degree());
    }

    // Gebauer-Moeller installation of the new element h.
    void update(int h) {
        const Monomial lh = leads_[h];
        std::vector<Pair> candidates;
        for (int g = 0; g < h; ++g)
            if (active_[g]) {
                const Monomial l = leads_[g].lcm(lh);
                candidates.push_back({g, h, l, pair_sugar(g, h, l)});
            }
        std::vector<Pair> kept;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const Pair& p = candidates[c];
            const bool coprime = leads_[p.i].coprime(lh);
            bool dominated = false;
            if (!coprime) {
                for (std::size_t o = c + 1; o < candidates.size() && !dominated; ++o)
                    dominated = candidates[o].lcm.divides(p.lcm);
                for (std::size_t o = 0; o < kept.size() && !dominated; ++o) dominated = kept[o].lcm.divides(p.lcm);
            }
            if (coprime || !dominated) kept.push_back(p);
        }
        std::erase_if(kept, [&](const Pair& p) { return leads_[p.i].coprime(lh); });

        std::erase_if(pairs_, [&](const Pair& p) {
            if (!lh.divides(p.lcm)) return false;
            return !(leads_[p.i].lcm(lh) == p.lcm) && !(leads_[p.j].lcm(lh) == p.lcm);
        });
        pairs_.insert(pairs_.end(), kept.begin(), kept.end());

        for (int g = 0; g < h; ++g)
            if (active_[g] && lh.divides(leads_[g])) active_[g] = false;
    }

    RingSpec ring_;
    MonomialOrder ord_;
    std::vector<Polynomial> polys_;
    std::vector<Monomial> leads_;
    std::vector<int> sugar_;
    std::vector<bool> active_;
    std::vector<Pair> pairs_;
    bool unit_ = false;
};

}  // namespace

GroebnerBasis buchberger(const RingSpec& ring, const std::vector<Polynomial>& gens) {
    for (const auto& g : gens)
        if (!(g.ring() == ring)) throw RingMismatch("generator lives in a different ring");
    return Buchberger(ring).run(gens);
}

GroebnerBasis extend_groebner(const GroebnerBasis& base, const std::vector<Polynomial>& extra) {
    if (base.is_unit()) return base;
    for (const auto& g : extra)
        if (!(g.ring() == base.ring)) throw RingMismatch("generator lives in a different ring");
    Buchberger b(base.ring);
    b.seed_basis(base.polys);
    return b.run(extra);
}

GroebnerBasis interreduce(const RingSpec& ring, std::vector<Polynomial> basis) {
    std::erase_if(basis, [](const Polynomial& g) { return g.is_zero(); });
    for (const auto& g : basis)
        if (g.is_constant()) return GroebnerBasis{ring, {Polynomial::constant(ring, 1)}};
    const MonomialOrder ord = order_of(ring);
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Polynomial> minimal;
    for (auto& g : basis) {
        const Monomial lg = g.leading_monomial();
        const bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                           [&](const Polynomial& k) { return k.leading_monomial().divides(lg); });
        if (!redundant) minimal.push_back(g.monic());
    }
    // Tail reduction: leading terms are untouched since the basis is minimal.
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        Polynomial r = Reducer(minimal, static_cast<int>(k)).reduce(minimal[k]);
        minimal[k] = r.monic();
    }
    std::reverse(minimal.begin(), minimal.end());
    return GroebnerBasis{ring, std::move(minimal)};
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
    const Reducer r(basis.polys);
    for (std::size_t i = 0; i < basis.polys.size(); ++i)
        for (std::size_t j = i + 1; j < basis.polys.size(); ++j)
            if (!r.reduce(s_polynomial(basis.polys[i], basis.polys[j])).is_zero()) return false;
    return true;
}

}  // namespace psci
