#ifndef PSCI_TREE_HPP
#define PSCI_TREE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "psci/csm.hpp"

namespace psci {

/*
 * The family A_n(a, m) in K[x1..xn]:
 *   (p_a, ..., p_{a+m-1}, e_{m+1}, ..., e_n)  for a >= 2, 1 <= m <= n,
 *   (e_1, ..., e_n)                            for (a, m) = (1, n).
 */
struct FamilyMember {
    int n = 1;
    int a = 1;
    int m = 1;
    Ideal ideal;
    std::string label() const;  ///< subscript notation, e.g. "₃6₂"
};

FamilyMember family_member(int n, int a, int m);
/// All members with a <= a_max: A_n(1, n) first, then a = 2.. by m.
std::vector<FamilyMember> family_members(int n, int a_max);
std::string family_label(int n, int a, int m);

/*
 * Members of the families B_n and C_n:
 *   B: (p_a, ..., p_{a+n-1}) : x_n^i,                     a >= 1, 0 <= i <= an-1,
 *   C: (p_a, ..., p_{a+b-1}, e_{b+1}, ..., e_n) : x_n^i,  a >= 2, 1 <= b <= n-1,
 *                                                          0 <= i <= (a-1)b+n-1.
 * Monomial entries (x1^a1, ..., xn^an) use kind 'M'.
 */
struct TreeEntry {
    char kind = 'B';
    int n = 1;
    int a = 1;
    int b = 0;
    int i = 0;
    std::vector<int> exponents;  ///< kind 'M' only
    Ideal ideal;
    std::string label() const;
};

std::vector<TreeEntry> family_F_generators(int n, int a_max);
std::vector<TreeEntry> monomial_family(int n, int e_max);

/// Left child (I : v) unless v is in I; right child the contraction of
/// I + (v) when a smaller ring exists. v is the last variable.
struct TreeNode {
    Ideal ideal;
    std::optional<Ideal> left;
    std::optional<Ideal> right;
};
TreeNode children(const Ideal& I);

/// HF_{R/I}(d) = HF_{R/(I:v)}(d-1) + HF_{R/(I+(v))}(d) for all d, v the last variable.
CheckNode exact_sequence_check(const Ideal& I);

/// Conditions (i) and (ii) of a binary tree of complete intersections, on
/// the bounded families produced by `level(n)` for n = 1..n_max.
CheckNode verify_tree_conditions(const std::string& name, int n_max,
                                 const std::function<std::vector<TreeEntry>(int)>& level, const VerifyOptions& opts);

struct GraphNode {
    std::string label;  ///< unique within a graph; edges refer to it
    std::string ideal;
    std::vector<long> hilbert;
};
struct GraphEdge {
    std::string from;
    std::string to;
    std::string kind;  ///< "left", "right" or "csm"
    int index = 0;     ///< j for csm edges
};
struct Graph {
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
};

/// Left/right edges between members of a bounded family (targets that fall
/// outside the enumeration are left out).
Graph family_graph(const std::vector<TreeEntry>& entries, const std::vector<TreeEntry>& lower);

/*
 * Central simple modules of (A_n(a, m), x_n) identified with members of
 * A_{n-1}: each module is presented cyclically (generator chosen from its
 * lowest degree), its annihilator is contracted to K[x1..x(n-1)] and
 * matched by Hilbert function and ideal equality.
 */
struct CsmArrow {
    int index = 0;  ///< j
    std::optional<FamilyMember> target;
    std::vector<long> graded_dims;
    int shift = 0;
    bool cyclic = false;
    bool hilbert_matches = false;
};
std::vector<CsmArrow> csm_arrows(const FamilyMember& member);

/// Targets predicted by the structure theorems, U_1 first.
std::vector<FamilyMember> predicted_csm_targets(const FamilyMember& member);

/// Engine arrows from the given roots down to level 1.
Graph csm_diagram(const std::vector<FamilyMember>& roots, bool engine = true);

/*
 * Every member of A_n, n <= n_max, a <= a_max, is a complete intersection
 * with a Lefschetz element, and its modules land on the predicted members
 * of A_{n-1}.
 */
CheckNode verify_theorem_5_3(int n_max, int a_max, const VerifyOptions& opts);

std::string export_graph(const Graph& g, const std::string& format);

}  // namespace psci

#endif  // PSCI_TREE_HPP
