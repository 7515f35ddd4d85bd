#ifndef PSCI_IDEALS_HPP
#define PSCI_IDEALS_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "psci/groebner.hpp"

namespace psci {

/*
 * Homogeneous ideal over a RingSpec.
 *
 * Copies share state: the reduced Groebner basis is computed at most once,
 * on first use, and is then visible to every copy (thread-safe).
 */
class Ideal {
public:
    /// Zero generators are dropped; nonzero ones must be homogeneous.
    Ideal(const RingSpec& ring, std::vector<Polynomial> gens);
    explicit Ideal(const RingSpec& ring) : Ideal(ring, {}) {}

    static Ideal unit(const RingSpec& ring);
    /// Wraps a basis already known to be reduced.
    static Ideal from_groebner(GroebnerBasis gb);
    /// Generators as given, basis supplied lazily by `compute`.
    static Ideal with_strategy(const RingSpec& ring, std::vector<Polynomial> gens,
                               std::function<GroebnerBasis()> compute);

    const RingSpec& ring() const;
    const std::vector<Polynomial>& generators() const;
    /// Reduced basis with monic elements (the canonical internal form).
    const GroebnerBasis& gb() const;
    /// Reduced basis scaled to primitive integer elements with positive
    /// leading coefficients.
    std::vector<Polynomial> groebner_basis() const;

    bool is_unit() const { return gb().is_unit(); }
    bool is_zero() const { return gb().is_zero(); }
    Polynomial normal_form(const Polynomial& p) const;
    bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }
    /// True when `other` is a subset of this ideal.
    bool contains(const Ideal& other) const;
    /// Index of a variable with no pure power among the leading monomials,
    /// or -1 when R/I is Artinian.
    int non_artinian_variable() const;
    bool is_artinian() const { return non_artinian_variable() < 0; }

    /// "(g1, g2, ...)" using the original generators.
    std::string to_string() const;

private:
    struct State;
    explicit Ideal(std::shared_ptr<State> s) : s_(std::move(s)) {}
    std::shared_ptr<State> s_;
};

Polynomial normal_form(const Polynomial& p, const Ideal& I);
/// Same reduced Groebner basis. Throws RingMismatch across rings.
bool ideal_equal(const Ideal& I, const Ideal& J);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
/// I + (v) for a single variable v.
Ideal ideal_plus_variable(const Ideal& I, int var);

/*
 * (I : f) = {g : g f in I}. A constant f gives I back; f = 0 throws.
 * Dispatches to colon_by_variable_power for powers of the last variable,
 * to the linear-algebra route when R/I is Artinian, and to elimination
 * otherwise.
 */
Ideal ideal_colon(const Ideal& I, const Polynomial& f);
/// Intersection with (f) via an auxiliary variable t, then division by f.
Ideal ideal_colon_elimination(const Ideal& I, const Polynomial& f);
/// Degree by degree kernel of multiplication by f on R/I; needs R/I Artinian.
Ideal ideal_colon_linear(const Ideal& I, const Polynomial& f);
/// (I : var^i). For the last variable this divides basis elements directly.
Ideal colon_by_variable_power(const Ideal& I, int var, int i);

/// A minimal homogeneous generating set, chosen among the reduced basis
/// elements degree by degree. Its size is the minimal number of generators.
std::vector<Polynomial> minimal_generators(const Ideal& I);

struct InitialIdeal {
    Ideal ideal;
    /// Minimal generators are powers of pairwise distinct variables.
    bool monomial_ci = false;
};
InitialIdeal initial_ideal(const Ideal& I);

/// Standard monomials of the given degree (not divisible by any leading
/// monomial), descending in the monomial order.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int degree);
/// All monomials of the given degree in the ring's variables, descending.
std::vector<Monomial> monomials_of_degree(const RingSpec& ring, int degree);

/// The same ideal in a larger ring (x_i and z keep their roles).
Ideal extend_ideal(const Ideal& I, const RingSpec& target);
/// The elimination ideal (I + (v)) cap K[other variables] for the last
/// variable v, read in the ring without v: K[x1..xn] from K[x1..xn,z], or
/// K[x1..x(n-1)] from K[x1..xn].
Ideal contract_last_variable(const Ideal& I);
RingSpec ring_without_last_variable(const RingSpec& ring);

/// {"nvars", "has_z", "generators": [...]}.
Ideal ideal_from_json(const nlohmann::json& j);
nlohmann::json ideal_to_json(const Ideal& I);
Ideal load_ideal_file(const std::string& path);

}  // namespace psci

#endif  // PSCI_IDEALS_HPP
