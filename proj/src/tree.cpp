#include "psci/tree.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "psci/lefschetz.hpp"
#include "psci/symfun.hpp"
#include "psci/verify.hpp"

namespace psci {

namespace {

std::string subscript(int k) {
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string out;
    for (char c : std::to_string(k)) out += digits[c - '0'];
    return out;
}

std::string hilbert_key(const std::vector<long>& h) { return join_ints(h); }

int last_var(const Ideal& I) { return I.ring().last_var(); }

// Index of entries by Hilbert function, for matching children against a family.
class FamilyIndex {
public:
    explicit FamilyIndex(const std::vector<TreeEntry>& entries) : entries_(entries) {
        for (std::size_t k = 0; k < entries.size(); ++k)
            by_hf_[hilbert_key(hilbert_function(entries[k].ideal))].push_back(k);
    }
    const TreeEntry* find(const Ideal& I) const {
        if (I.is_unit() || !I.is_artinian()) return nullptr;
        auto it = by_hf_.find(hilbert_key(hilbert_function(I)));
        if (it == by_hf_.end()) return nullptr;
        for (std::size_t k : it->second)
            if (entries_[k].ideal.ring() == I.ring() && ideal_equal(entries_[k].ideal, I)) return &entries_[k];
        return nullptr;
    }

private:
    const std::vector<TreeEntry>& entries_;
    std::map<std::string, std::vector<std::size_t>> by_hf_;
};

}  // namespace

std::string family_label(int n, int a, int m) { return subscript(n) + std::to_string(a) + subscript(m); }

std::string FamilyMember::label() const { return family_label(n, a, m); }

FamilyMember family_member(int n, int a, int m) {
    const bool valid = n >= 1 && ((a == 1 && m == n) || (a >= 2 && m >= 1 && m <= n));
    if (!valid) throw std::out_of_range("A_n(a, m) needs a >= 2 and 1 <= m <= n, or (a, m) = (1, n)");
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, Ideal> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find({n, a, m}); it != cache.end()) return {n, a, m, it->second};
    }
    const RingSpec R(n, false);
    std::vector<Polynomial> gens;
    if (a == 1) {
        for (int i = 1; i <= n; ++i) gens.push_back(e_signed(R, i));
    } else {
        for (int i = a; i <= a + m - 1; ++i) gens.push_back(power_sum(R, i));
        for (int i = m + 1; i <= n; ++i) gens.push_back(e_signed(R, i));
    }
    Ideal I(R, gens);
    std::lock_guard<std::mutex> lock(mu);
    return {n, a, m, cache.emplace(std::make_tuple(n, a, m), I).first->second};
}

std::vector<FamilyMember> family_members(int n, int a_max) {
    std::vector<FamilyMember> out{family_member(n, 1, n)};
    for (int a = 2; a <= a_max; ++a)
        for (int m = 1; m <= n; ++m) out.push_back(family_member(n, a, m));
    return out;
}

std::string TreeEntry::label() const {
    std::string s(1, kind);
    s += std::to_string(n);
    if (kind == 'M') {
        s += "(";
        for (std::size_t k = 0; k < exponents.size(); ++k) s += (k ? "," : "") + std::to_string(exponents[k]);
        return s + ")";
    }
    s += "(a=" + std::to_string(a);
    if (kind == 'C') s += ",b=" + std::to_string(b);
    return s + ";i=" + std::to_string(i) + ")";
}

std::vector<TreeEntry> family_F_generators(int n, int a_max) {
    const RingSpec R(n, false);
    const int xn = R.last_var();
    std::vector<TreeEntry> out;
    for (int a = 1; a <= a_max; ++a) {
        std::vector<Polynomial> gens;
        for (int i = a; i <= a + n - 1; ++i) gens.push_back(power_sum(R, i));
        const Ideal base(R, gens);
        for (int i = 0; i <= a * n - 1; ++i) out.push_back({'B', n, a, 0, i, {}, colon_by_variable_power(base, xn, i)});
    }
    for (int a = 2; a <= a_max; ++a)
        for (int b = 1; b <= n - 1; ++b) {
            std::vector<Polynomial> gens;
            for (int i = a; i <= a + b - 1; ++i) gens.push_back(power_sum(R, i));
            for (int i = b + 1; i <= n; ++i) gens.push_back(e_signed(R, i));
            const Ideal base(R, gens);
            for (int i = 0; i <= (a - 1) * b + n - 1; ++i)
                out.push_back({'C', n, a, b, i, {}, colon_by_variable_power(base, xn, i)});
        }
    return out;
}

std::vector<TreeEntry> monomial_family(int n, int e_max) {
    const RingSpec R(n, false);
    std::vector<TreeEntry> out;
    std::vector<int> exps(n, 1);
    for (;;) {
        std::vector<Polynomial> gens;
        for (int v = 0; v < n; ++v) gens.push_back(Polynomial::monomial(R, Monomial::variable(v, exps[v])));
        out.push_back({'M', n, 0, 0, 0, exps, Ideal(R, gens)});
        int v = n - 1;
        while (v >= 0 && exps[v] == e_max) exps[v--] = 1;
        if (v < 0) break;
        ++exps[v];
    }
    return out;
}

TreeNode children(const Ideal& I) {
    TreeNode node{I, std::nullopt, std::nullopt};
    const int v = last_var(I);
    if (!I.contains(Polynomial::variable(I.ring(), v))) node.left = colon_by_variable_power(I, v, 1);
    if (I.ring().has_z || I.ring().nvars >= 2) node.right = contract_last_variable(I);
    return node;
}

CheckNode exact_sequence_check(const Ideal& I) {
    const int v = last_var(I);
    const std::vector<long> h = hilbert_function(I);
    const Ideal left = colon_by_variable_power(I, v, 1);
    const std::vector<long> hl = left.is_unit() ? std::vector<long>{} : hilbert_function(left);
    const std::vector<long> hr = hilbert_function(ideal_plus_variable(I, v));
    bool ok = true;
    const std::size_t top = std::max({h.size(), hl.size() + 1, hr.size()});
    auto at = [](const std::vector<long>& x, std::size_t d) { return d < x.size() ? x[d] : 0L; };
    for (std::size_t d = 0; d < top; ++d) {
        const long shifted = d == 0 ? 0 : at(hl, d - 1);
        ok = ok && at(h, d) == shifted + at(hr, d);
    }
    CheckNode node = CheckNode::leaf("exact sequence", ok, join_ints(h) + " = shift" + join_ints(hl) + " + " + join_ints(hr));
    node.data = {{"quotient", h}, {"left", hl}, {"right", hr}};
    return node;
}

CheckNode verify_tree_conditions(const std::string& name, int n_max,
                                 const std::function<std::vector<TreeEntry>(int)>& level, const VerifyOptions& opts) {
    CheckNode root = CheckNode::group(name);
    root.data = {{"n_max", n_max}};
    std::vector<std::vector<TreeEntry>> levels(n_max + 1);
    for (int n = 1; n <= n_max; ++n) levels[n] = level(n);
    std::vector<std::unique_ptr<FamilyIndex>> index(n_max + 1);
    for (int n = 1; n <= n_max; ++n) index[n] = std::make_unique<FamilyIndex>(levels[n]);
    for (int n = 1; n <= n_max; ++n) {
        CheckNode lev = CheckNode::group("level " + std::to_string(n) + " (" + std::to_string(levels[n].size()) + " members)");
        std::vector<std::function<CheckNode()>> jobs;
        for (const auto& e : levels[n]) {
            jobs.push_back([&, n, e] {
                CheckNode node = CheckNode::group(e.label());
                node.data = {{"ideal", e.ideal.to_string()}};
                const auto mingens = minimal_generators(e.ideal);
                const bool ci = static_cast<int>(mingens.size()) == n &&
                                certify_regular_sequence(e.ideal.ring(), mingens).regular;
                node.check("generated by a regular sequence of length n", ci,
                           std::to_string(mingens.size()) + " minimal generators");
                node.add(exact_sequence_check(e.ideal));
                const TreeNode t = children(e.ideal);
                if (t.left) {
                    const TreeEntry* hit = index[n]->find(*t.left);
                    node.check("(ii) left child in the family", hit != nullptr, hit ? hit->label() : "no match");
                } else {
                    node.check("(ii) no left child: x_n in I", true);
                }
                if (n >= 2) {
                    const TreeEntry* hit = index[n - 1]->find(*t.right);
                    node.check("(i) right child in the level below", hit != nullptr, hit ? hit->label() : "no match");
                }
                return node;
            });
        }
        for (auto& c : run_jobs(jobs, opts)) lev.add(std::move(c));
        root.add(std::move(lev));
        if (opts.fail_fast && !root.pass) break;
    }
    return root;
}

Graph family_graph(const std::vector<TreeEntry>& entries, const std::vector<TreeEntry>& lower) {
    Graph g;
    const FamilyIndex same(entries), below(lower);
    auto add_nodes = [&](const std::vector<TreeEntry>& list) {
        for (const auto& e : list) g.nodes.push_back({e.label(), e.ideal.to_string(), hilbert_function(e.ideal)});
    };
    add_nodes(entries);
    add_nodes(lower);
    for (const auto& e : entries) {
        const TreeNode t = children(e.ideal);
        if (t.left)
            if (const TreeEntry* hit = same.find(*t.left)) g.edges.push_back({e.label(), hit->label(), "left", 0});
        if (t.right && !lower.empty())
            if (const TreeEntry* hit = below.find(*t.right)) g.edges.push_back({e.label(), hit->label(), "right", 0});
    }
    return g;
}

std::vector<FamilyMember> predicted_csm_targets(const FamilyMember& f) {
    if (f.n < 2) return {};
    if (f.a == 1) return {family_member(f.n - 1, 1, f.n - 1)};
    const int count = f.m == f.n ? f.n : f.m + 1;
    std::vector<FamilyMember> out;
    for (int j = 1; j <= count; ++j) {
        if (j == 1 || f.a - 1 == 1)
            out.push_back(family_member(f.n - 1, 1, f.n - 1));
        else
            out.push_back(family_member(f.n - 1, f.a - 1, j - 1));
    }
    return out;
}

std::vector<CsmArrow> csm_arrows(const FamilyMember& f) {
    std::vector<CsmArrow> out;
    if (f.n < 2) return out;
    const Ideal& I = f.ideal;
    const int v = last_var(I);
    const std::vector<FamilyMember> candidates = family_members(f.n - 1, std::max(f.a, 2));
    for (const auto& u : central_simple_modules(I, v)) {
        CsmArrow arrow;
        arrow.index = u.index;
        arrow.graded_dims = u.graded_dims;
        arrow.shift = u.shift;
        Polynomial g = Polynomial::constant(I.ring(), 1);
        if (!u.numerator.is_unit()) {
            for (const auto& h : u.numerator.gb().polys)
                if (h.degree() == u.shift && !u.denominator.contains(h)) {
                    g = h;
                    break;
                }
        }
        const CentralSimpleModule cyc = cyclic_presentation(u.numerator, u.denominator, g);
        arrow.cyclic = cyc.presentation_ok && u.graded_dims.size() > 0 && u.graded_dims[0] == 1;
        const Ideal ann = contract_last_variable(*cyc.annihilator);
        const std::vector<long> h = ann.is_unit() ? std::vector<long>{} : hilbert_function(ann);
        arrow.hilbert_matches = h == u.graded_dims;
        for (const auto& c : candidates)
            if (hilbert_function(c.ideal) == h && ideal_equal(c.ideal, ann)) {
                arrow.target = c;
                break;
            }
        out.push_back(std::move(arrow));
    }
    return out;
}

Graph csm_diagram(const std::vector<FamilyMember>& roots, bool engine) {
    Graph g;
    std::map<std::string, bool> seen;
    std::vector<FamilyMember> queue = roots;
    for (std::size_t k = 0; k < queue.size(); ++k) {
        const FamilyMember f = queue[k];
        if (seen[f.label()]) continue;
        seen[f.label()] = true;
        g.nodes.push_back({f.label(), f.ideal.to_string(), hilbert_function(f.ideal)});
        std::vector<std::optional<FamilyMember>> targets;
        if (engine) {
            for (const auto& a : csm_arrows(f)) targets.push_back(a.target);
        } else {
            for (const auto& t : predicted_csm_targets(f)) targets.push_back(t);
        }
        for (std::size_t j = 0; j < targets.size(); ++j) {
            const std::string to = targets[j] ? targets[j]->label() : "?";
            g.edges.push_back({f.label(), to, "csm", static_cast<int>(j + 1)});
            if (targets[j]) queue.push_back(*targets[j]);
        }
    }
    return g;
}

CheckNode verify_theorem_5_3(int n_max, int a_max, const VerifyOptions& opts) {
    CheckNode root = CheckNode::group("family A_n, n <= " + std::to_string(n_max) + ", a <= " + std::to_string(a_max));
    root.data = {{"version", kVersion}, {"n_max", n_max}, {"a_max", a_max}, {"seed", opts.seed}};
    std::vector<FamilyMember> members;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& f : family_members(n, a_max)) members.push_back(f);
    std::vector<std::function<CheckNode()>> jobs;
    for (const auto& f : members)
        jobs.push_back([f, &opts] {
            CheckNode node = CheckNode::group(f.label());
            node.data = {{"ideal", ideal_to_json(f.ideal)}};
            node.add(verify_complete_intersection(f.label(), f.ideal));
            const QuotientAlgebra A(f.ideal);
            const auto found = find_lefschetz_element(A, opts.max_tries, opts.seed, opts.slp);
            if (found) {
                CheckNode slp = CheckNode::leaf("strong Lefschetz element found", true,
                                                found->linear_form.to_string() + " on try " + std::to_string(found->tries));
                slp.data = to_json(*found);
                node.add(std::move(slp));
            } else {
                node.check("strong Lefschetz element found", false,
                           "none among " + std::to_string(opts.max_tries) + " candidates");
            }
            if (f.n >= 2) {
                CheckNode arrows = CheckNode::group("central simple modules w.r.t. x_n");
                const auto got = csm_arrows(f);
                const auto want = predicted_csm_targets(f);
                arrows.check("count", got.size() == want.size(),
                             std::to_string(got.size()) + " observed, " + std::to_string(want.size()) + " predicted");
                for (std::size_t j = 0; j < std::min(got.size(), want.size()); ++j) {
                    const auto& a = got[j];
                    const bool ok = a.cyclic && a.hilbert_matches && a.target && a.target->label() == want[j].label();
                    arrows.check("U_" + std::to_string(j + 1) + " = " + want[j].label(), ok,
                                 a.target ? "identified as " + a.target->label() : "not identified");
                }
                node.add(std::move(arrows));
            }
            return node;
        });
    for (auto& c : run_jobs(jobs, opts)) root.add(std::move(c));
    return root;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string export_graph(const Graph& g, const std::string& format) {
    if (format == "json") {
        nlohmann::json nodes = nlohmann::json::array(), edges = nlohmann::json::array();
        for (const auto& n : g.nodes) nodes.push_back({{"label", n.label}, {"ideal", n.ideal}, {"hilbert", n.hilbert}});
        for (const auto& e : g.edges) {
            nlohmann::json j = {{"from", e.from}, {"to", e.to}, {"kind", e.kind}};
            if (e.kind == "csm") j["index"] = e.index;
            edges.push_back(j);
        }
        return nlohmann::json{{"nodes", nodes}, {"edges", edges}}.dump(2) + "\n";
    }
    if (format != "dot") throw std::invalid_argument("unknown graph format '" + format + "'");
    std::ostringstream os;
    os << "digraph tree {\n";
    for (const auto& n : g.nodes) os << "  \"" << dot_escape(n.label) << "\";\n";
    for (const auto& e : g.edges) {
        os << "  \"" << dot_escape(e.from) << "\" -> \"" << dot_escape(e.to) << "\" [label=\"";
        os << (e.kind == "csm" ? "U" + std::to_string(e.index) : e.kind) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace psci
