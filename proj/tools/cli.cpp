#include "cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <ostream>
#include <sstream>

#include "psci/csm.hpp"
#include "psci/lefschetz.hpp"
#include "psci/tree.hpp"
#include "psci/verify.hpp"

namespace psci::cli {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;

struct Config {
    std::string format = "text";
    bool json = false;
    bool fail_fast = false;
    bool check_top_degree = false;
    std::uint64_t seed = 1;
    std::uint64_t modular_prime = 0;
    int max_tries = 20;

    std::optional<int> n, a, b, m, s, kmax, mmax;
    int n_max = 3, a_max = 4, e_max = 3;
    std::string ideal_file;
    std::string member;
    std::string y;
    std::string var;
    std::string family = "F";
    std::vector<std::string> roots;
    bool predicted = false;

    std::string out_format() const { return json ? "json" : format; }
    VerifyOptions verify_options() const {
        VerifyOptions o;
        o.fail_fast = fail_fast;
        o.seed = seed;
        o.max_tries = max_tries;
        o.slp.check_top_degree = check_top_degree;
        if (modular_prime) o.slp.modular_prime = modular_prime;
        return o;
    }
    nlohmann::json params(const std::string& command) const {
        nlohmann::json p = nlohmann::json::object();
        if (command == "tree" || command == "thm53") {
            p["n_max"] = n_max;
            p["a_max"] = a_max;
        }
        if (command == "tree") {
            p["family"] = family;
            if (family == "monomial") p["e_max"] = e_max;
        }
        auto put = [&](const char* k, const std::optional<int>& v) {
            if (v) p[k] = *v;
        };
        put("n", n), put("a", a), put("b", b), put("m", m), put("s", s), put("kmax", kmax), put("mmax", mmax);
        if (!ideal_file.empty()) p["ideal_file"] = ideal_file;
        if (!member.empty()) p["member"] = member;
        if (!y.empty()) p["y"] = y;
        p["fail_fast"] = fail_fast;
        p["check_top_degree"] = check_top_degree;
        if (modular_prime) p["modular_prime"] = modular_prime;
        return p;
    }
};

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

int need(const std::optional<int>& v, const char* flag) {
    if (!v) throw InvalidInput(std::string("missing required option --") + flag);
    return *v;
}

std::vector<int> parse_triple(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw InvalidInput("expected n,a,m but got '" + text + "'");
        }
    }
    if (out.size() != 3) throw InvalidInput("expected n,a,m but got '" + text + "'");
    return out;
}

// The ideal an ad-hoc command works on: a file, a family member, or a power-sum ideal.
Ideal subject_ideal(const Config& c) {
    if (!c.ideal_file.empty()) return load_ideal_file(c.ideal_file);
    if (!c.member.empty()) {
        const auto t = parse_triple(c.member);
        return family_member(t[0], t[1], t[2]).ideal;
    }
    const int n = need(c.n, "n"), a = need(c.a, "a");
    return c.b ? mixed_ideal(n, a, *c.b) : power_sum_ideal(n, a);
}

int variable_index(const RingSpec& ring, const std::string& name) {
    if (name.empty()) return ring.last_var();
    const Polynomial v = parse_polynomial(name, ring);
    if (v.terms().size() != 1 || v.degree() != 1 || v.leading_coeff() != 1)
        throw InvalidInput("'" + name + "' is not a ring variable");
    const Monomial m = v.leading_monomial();
    for (int k = 0; k < ring.num_vars(); ++k)
        if (m.exponent(k) == 1) return k;
    throw InvalidInput("'" + name + "' is not a ring variable");
}

void emit(std::ostream& out, const Config& c, const std::string& command, const CheckNode& report,
          const std::optional<Ideal>& ideal = std::nullopt) {
    if (c.out_format() == "json") {
        nlohmann::json j = {{"tool", "psci"}, {"version", kVersion}, {"command", command},
                            {"params", c.params(command)}, {"seed", c.seed}, {"pass", report.pass},
                            {"checks", report.count_leaves()}, {"failures", report.count_failures()}};
        if (ideal) j["ideal"] = ideal_to_json(*ideal);
        j["report"] = to_json(report);
        out << j.dump(2) << "\n";
        return;
    }
    out << "psci " << kVersion << " " << command << " (seed " << c.seed << ")\n";
    if (ideal) out << "ideal " << ideal->to_string() << "\n";
    out << to_text(report);
    out << (report.pass ? "PASS" : "FAIL") << ": " << report.count_leaves() - report.count_failures() << "/"
        << report.count_leaves() << " checks";
    if (!report.pass) out << "; first failure: " << report.first_failure();
    out << "\n";
}

int verdict(const CheckNode& r) { return r.pass ? kPass : kFail; }

CheckNode slp_report(const Config& c, const Ideal& I) {
    const QuotientAlgebra A(I);
    const VerifyOptions o = c.verify_options();
    CheckNode root = CheckNode::group("strong Lefschetz property of R/I");
    root.data = {{"hilbert", hilbert_function(A)}};
    if (!c.y.empty()) {
        const Polynomial y = parse_polynomial(c.y, I.ring());
        if (!y.is_homogeneous() || y.degree() != 1) throw InvalidInput("--y must be a linear form");
        const LefschetzReport r = slp_check_algebra(A, y, o.slp);
        CheckNode leaf = CheckNode::leaf("all ranks maximal for " + y.to_string(), r.holds,
                                         std::to_string(r.pairs_checked) + " maps checked");
        leaf.data = to_json(r);
        root.add(std::move(leaf));
        return root;
    }
    const auto found = find_lefschetz_element(A, o.max_tries, o.seed, o.slp);
    if (!found) {
        root.check("strong Lefschetz element found", false, "none among " + std::to_string(o.max_tries) + " candidates");
        return root;
    }
    CheckNode leaf = CheckNode::leaf("strong Lefschetz element found", true,
                                     found->linear_form.to_string() + " on try " + std::to_string(found->tries));
    leaf.data = to_json(*found);
    root.add(std::move(leaf));
    return root;
}

CheckNode csm_report(const Config& c, const Ideal& I) {
    const int var = variable_index(I.ring(), c.var);
    const std::string vname = I.ring().var_name(var);
    const CsmChain chain = csm_chain(I, var);
    CheckNode root = CheckNode::group("central simple modules w.r.t. " + vname);
    nlohmann::json ranges = nlohmann::json::array();
    for (const auto& r : chain.ranges)
        ranges.push_back({{"first", r.first}, {"last", r.last}, {"colength", r.colength}, {"ideal", r.ideal.to_string()}});
    root.data = {{"variable", vname}, {"nilpotency", chain.p}, {"ranges", ranges}};
    root.add(verify_filtration_identity(chain));
    for (const auto& u : central_simple_modules(chain)) {
        CheckNode node = CheckNode::group("U_" + std::to_string(u.index));
        node.data = {{"numerator", u.numerator.to_string()}, {"denominator", u.denominator.to_string()},
                     {"graded_dims", u.graded_dims}, {"shift", u.shift}};
        node.check("nonzero", !u.graded_dims.empty(), "dims " + join_ints(u.graded_dims) + " from degree " +
                                                          std::to_string(u.shift));
        node.check("symmetric", is_symmetric(u.graded_dims));
        root.add(std::move(node));
    }
    root.add(verify_last_module(I, var));
    return root;
}

CheckNode hilbert_report(const Ideal& I) {
    CheckNode root = CheckNode::group("Hilbert function of R/I");
    const auto h = hilbert_function(I);
    root.data = {{"hilbert", h}, {"dimension", total_dimension(h)}};
    root.check("Artinian", true, join_ints(h) + ", dim " + std::to_string(total_dimension(h)));
    root.check("symmetric", is_symmetric(h));
    return root;
}

std::function<std::vector<TreeEntry>(int)> tree_level(const Config& c) {
    if (c.family == "monomial") return [e = c.e_max](int n) { return monomial_family(n, e); };
    if (c.family == "F") return [a = c.a_max](int n) { return family_F_generators(n, a); };
    throw InvalidInput("unknown family '" + c.family + "' (expected F or monomial)");
}

int run_tree(const Config& c, std::ostream& out) {
    const auto level = tree_level(c);
    if (c.out_format() == "dot" || (c.out_format() == "json" && !c.roots.empty())) {
        const Graph g = family_graph(level(c.n_max), c.n_max > 1 ? level(c.n_max - 1) : std::vector<TreeEntry>{});
        out << export_graph(g, c.out_format());
        return kPass;
    }
    const std::string name = (c.family == "F" ? "family F, a <= " + std::to_string(c.a_max)
                                              : "monomial family, exponents <= " + std::to_string(c.e_max)) +
                             ", n <= " + std::to_string(c.n_max);
    const CheckNode r = verify_tree_conditions(name, c.n_max, level, c.verify_options());
    emit(out, c, "tree", r);
    return verdict(r);
}

int run_thm53(const Config& c, std::ostream& out) {
    if (!c.roots.empty()) {
        std::vector<FamilyMember> roots;
        for (const auto& r : c.roots) {
            const auto t = parse_triple(r);
            roots.push_back(family_member(t[0], t[1], t[2]));
        }
        const std::string fmt = c.out_format() == "text" ? "dot" : c.out_format();
        out << export_graph(csm_diagram(roots, !c.predicted), fmt);
        return kPass;
    }
    const CheckNode r = verify_theorem_5_3(c.n_max, c.a_max, c.verify_options());
    emit(out, c, "thm53", r);
    return verdict(r);
}

void add_common(CLI::App* sub, Config& c) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_flag("--json", c.json, "Same as --format json");
    sub->add_flag("--fail-fast", c.fail_fast, "Stop at the first failing job");
    sub->add_flag("--check-top-degree", c.check_top_degree, "Also check x y^c : A_0 -> A_c");
    sub->add_option("--seed", c.seed, "Seed for random linear forms");
    sub->add_option("--modular-prime", c.modular_prime, "Prime for the rank prefilter (at most 2^62)")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 62));
    sub->add_option("--max-tries", c.max_tries, "Linear forms to try")->check(CLI::PositiveNumber);
}

void add_subject(CLI::App* sub, Config& c) {
    sub->add_option("--ideal", c.ideal_file, "JSON ideal file")->check(CLI::ExistingFile);
    sub->add_option("--member", c.member, "Family member n,a,m");
    sub->add_option("--n", c.n, "Number of x variables");
    sub->add_option("--a", c.a, "Lowest power-sum degree");
    sub->add_option("--b", c.b, "Number of extra power sums");
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Complete intersections generated by power sums: exact verification tool", "psci"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Config c;
    std::function<int()> action;

    auto* newton = app.add_subcommand("newton", "Newton identities and the vanishing sums");
    add_common(newton, c);
    newton->add_option("--n", c.n)->required();
    newton->add_option("--kmax", c.kmax)->required();
    newton->add_option("--mmax", c.mmax, "Largest m for the vanishing sum (default 2n)");
    newton->callback([&] {
        action = [&] {
            const CheckNode r = verify_newton(*c.n, *c.kmax, c.mmax.value_or(-1));
            emit(out, c, "newton", r);
            return verdict(r);
        };
    });

    auto* identity = app.add_subcommand("identity", "Matrix identities for z-derivatives of the boundary polynomials");
    add_common(identity, c);
    identity->add_option("--n", c.n)->required();
    identity->add_option("--b", c.b, "Check the truncated family g^(k) instead");
    identity->callback([&] {
        action = [&] {
            const auto variant = c.b ? DerivativeIdentity::Truncated : DerivativeIdentity::Full;
            const CheckNode r = verify_derivative_identities(variant, *c.n, c.b);
            emit(out, c, "identity", r);
            return verdict(r);
        };
    });

    auto* thm31 = app.add_subcommand("thm31", "Chain and central simple modules of (pt_a, ..., pt_{a+n})");
    add_common(thm31, c);
    thm31->add_option("--n", c.n)->required();
    thm31->add_option("--a", c.a)->required();
    thm31->callback([&] {
        action = [&] {
            const CheckNode r = verify_theorem_3_1(*c.n, *c.a);
            emit(out, c, "thm31", r, power_sum_ideal(*c.n, *c.a));
            return verdict(r);
        };
    });

    auto* thm41 = app.add_subcommand("thm41", "Chain and central simple modules of the mixed ideals");
    add_common(thm41, c);
    thm41->add_option("--n", c.n)->required();
    thm41->add_option("--a", c.a)->required();
    thm41->add_option("--b", c.b)->required();
    thm41->callback([&] {
        action = [&] {
            const CheckNode r = verify_theorem_4_1(*c.n, *c.a, *c.b);
            emit(out, c, "thm41", r, mixed_ideal(*c.n, *c.a, *c.b));
            return verdict(r);
        };
    });

    auto* swap = app.add_subcommand("swap", "Generator swaps by z^a times a boundary polynomial");
    add_common(swap, c);
    swap->add_option("--n", c.n)->required();
    swap->add_option("--a", c.a)->required();
    swap->add_option("--b", c.b, "Use the mixed ideals and g^(k)");
    swap->callback([&] {
        action = [&] {
            const CheckNode r = verify_generator_swap(c.b ? BoundaryKind::G : BoundaryKind::F, *c.n, *c.a, c.b);
            emit(out, c, "swap", r);
            return verdict(r);
        };
    });

    auto* chain = app.add_subcommand("chain", "Colon chain members and exponent ranges");
    add_common(chain, c);
    chain->add_option("--n", c.n)->required();
    chain->add_option("--a", c.a)->required();
    chain->add_option("--b", c.b);
    chain->callback([&] {
        action = [&] {
            const CheckNode r = verify_chain_lemma(*c.n, *c.a, c.b);
            emit(out, c, "chain", r);
            return verdict(r);
        };
    });

    auto* colon = app.add_subcommand("colon-lemma", "Colon by a signed elementary polynomial");
    add_common(colon, c);
    colon->add_option("--n", c.n)->required();
    colon->add_option("--a", c.a)->required();
    colon->add_option("--s", c.s, "0 <= s <= n-2; omit for the pure power-sum case");
    colon->callback([&] {
        action = [&] {
            const CheckNode r = verify_colon_lemma(*c.n, *c.a, c.s);
            emit(out, c, "colon-lemma", r);
            return verdict(r);
        };
    });

    auto* slp = app.add_subcommand("slp", "Strong Lefschetz property of R/I");
    add_common(slp, c);
    add_subject(slp, c);
    slp->add_option("--y", c.y, "Linear form to test; search when omitted");
    slp->callback([&] {
        action = [&] {
            const Ideal I = subject_ideal(c);
            const CheckNode r = slp_report(c, I);
            emit(out, c, "slp", r, I);
            return verdict(r);
        };
    });

    auto* csm = app.add_subcommand("csm", "Central simple modules of R/I with respect to a variable");
    add_common(csm, c);
    add_subject(csm, c);
    csm->add_option("--var", c.var, "Variable (default: the last one)");
    csm->callback([&] {
        action = [&] {
            const Ideal I = subject_ideal(c);
            const CheckNode r = csm_report(c, I);
            emit(out, c, "csm", r, I);
            return verdict(r);
        };
    });

    auto* tree = app.add_subcommand("tree", "Binary tree conditions on a bounded family");
    add_common(tree, c);
    tree->add_option("--family", c.family, "F or monomial");
    tree->add_option("--n-max", c.n_max)->check(CLI::Range(1, 6));
    tree->add_option("--a-max", c.a_max)->check(CLI::Range(1, 8));
    tree->add_option("--e-max", c.e_max, "Largest exponent of the monomial family")->check(CLI::Range(1, 8));
    tree->callback([&] { action = [&] { return run_tree(c, out); }; });

    auto* thm53 = app.add_subcommand("thm53", "SLP and central simple module arrows of the family A_n(a, m)");
    add_common(thm53, c);
    thm53->add_option("--n-max", c.n_max)->check(CLI::Range(1, 6));
    thm53->add_option("--a-max", c.a_max)->check(CLI::Range(1, 10));
    thm53->add_option("--root", c.roots, "Draw the arrow diagram below n,a,m (repeatable)");
    thm53->add_flag("--predicted", c.predicted, "Draw arrows from the closed formula instead of computing them");
    thm53->callback([&] { action = [&] { return run_thm53(c, out); }; });

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of R/I");
    add_common(hilbert, c);
    add_subject(hilbert, c);
    hilbert->callback([&] {
        action = [&] {
            const Ideal I = subject_ideal(c);
            const CheckNode r = hilbert_report(I);
            emit(out, c, "hilbert", r, I);
            return verdict(r);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInvalid;
    }
    if (c.out_format() == "dot" && !app.got_subcommand("tree") && !app.got_subcommand("thm53")) {
        err << "error: --format dot is only available for tree and thm53\n";
        return kInvalid;
    }
    try {
        return action();
    } catch (const NotArtinian& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }
}

}  // namespace psci::cli
