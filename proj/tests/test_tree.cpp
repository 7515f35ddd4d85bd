#include <gtest/gtest.h>

#include <set>

#include "psci/symfun.hpp"
#include "psci/tree.hpp"
#include "psci/verify.hpp"
#include "support.hpp"

using namespace psci;
using namespace psci::testing;

namespace {

std::vector<std::string> arrow_targets(int n, int a, int m) {
    std::vector<std::string> out;
    for (const auto& arrow : csm_arrows(family_member(n, a, m)))
        out.push_back(arrow.target ? arrow.target->label() : "?");
    return out;
}

}  // namespace

TEST(Family, Members) {
    const FamilyMember e = family_member(2, 1, 2);
    EXPECT_EQ(hilbert_function(e.ideal), (std::vector<long>{1, 1}));
    EXPECT_EQ(total_dimension(hilbert_function(family_member(3, 3, 3).ideal)), 60);
    const RingSpec r(3, false);
    EXPECT_TRUE(ideal_equal(family_member(3, 2, 1).ideal, Ideal(r, {power_sum(r, 2), e_signed(r, 2), e_signed(r, 3)})));
    EXPECT_THROW(family_member(3, 1, 2), std::out_of_range);
    EXPECT_THROW(family_member(3, 2, 4), std::out_of_range);
    EXPECT_THROW(family_member(3, 2, 0), std::out_of_range);
    EXPECT_EQ(family_member(3, 6, 2).label(), "₃6₂");
    EXPECT_EQ(family_label(12, 10, 11), "₁₂10₁₁");
    EXPECT_EQ(family_members(2, 3).size(), 5u);
}

TEST(Family, MembersAreCompleteIntersections) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& f : family_members(n, 4)) {
            const auto cert = certify_regular_sequence(f.ideal.ring(), f.ideal.generators());
            EXPECT_TRUE(cert.regular) << f.label();
            EXPECT_TRUE(is_symmetric(hilbert_function(f.ideal)));
        }
}

TEST(FamilyF, Enumeration) {
    // n = 1: (x1^a) : x1^i = (x1^(a-i)).
    const RingSpec r1(1, false);
    for (const auto& e : family_F_generators(1, 4)) {
        ASSERT_EQ(e.kind, 'B');
        EXPECT_TRUE(ideal_equal(e.ideal, Ideal(r1, {Polynomial::monomial(r1, Monomial::variable(0, e.a - e.i))})));
    }
    const RingSpec r(2, false);
    bool saw_b = false, saw_c = false;
    for (const auto& e : family_F_generators(2, 2)) {
        if (e.kind == 'B' && e.a == 2 && e.i == 0) {
            saw_b = true;
            EXPECT_TRUE(ideal_equal(e.ideal, Ideal(r, {power_sum(r, 2), power_sum(r, 3)})));
        }
        if (e.kind == 'C' && e.a == 2 && e.b == 1 && e.i == 1) {
            saw_c = true;
            EXPECT_TRUE(ideal_equal(e.ideal, ideal_colon_elimination(Ideal(r, {power_sum(r, 2), e_signed(r, 2)}), x(r, 2))));
        }
    }
    EXPECT_TRUE(saw_b && saw_c);
    // B_2 has 2a members per a, C_2 has (a-1)+2 per a >= 2.
    EXPECT_EQ(family_F_generators(2, 3).size(), 2u + 4u + 6u + 3u + 4u);
}

TEST(FamilyF, LeftChildOfACenteredMemberIsTheNextColon) {
    for (const auto& e : family_F_generators(2, 2))
        if (e.kind == 'B' && e.a == 2 && e.i == 1) {
            const TreeNode t = children(e.ideal);
            ASSERT_TRUE(t.left.has_value());
            const RingSpec r(2, false);
            const Ideal next = colon_by_variable_power(Ideal(r, {power_sum(r, 2), power_sum(r, 3)}), 1, 2);
            EXPECT_TRUE(ideal_equal(*t.left, next));
        }
}

TEST(Children, Examples) {
    const RingSpec r(2, false), r1(1, false);
    const TreeNode t = children(Ideal(r, {P("x1^2", r), P("x2^2", r)}));
    ASSERT_TRUE(t.left && t.right);
    EXPECT_TRUE(ideal_equal(*t.left, Ideal(r, {P("x1^2", r), P("x2", r)})));
    EXPECT_TRUE(ideal_equal(*t.right, Ideal(r1, {P("x1^2", r1)})));
    const TreeNode p = children(Ideal(r, {power_sum(r, 2), power_sum(r, 3)}));
    EXPECT_TRUE(ideal_equal(*p.right, Ideal(r1, {P("x1^2", r1)})));
    const TreeNode leafish = children(Ideal(r, {P("x1^3", r), P("x2", r)}));
    EXPECT_FALSE(leafish.left.has_value());
    EXPECT_FALSE(children(Ideal(r1, {P("x1^2", r1)})).right.has_value());
}

TEST(ExactSequence, Examples) {
    const RingSpec r(2, false);
    const CheckNode c = exact_sequence_check(Ideal(r, {P("x1^2", r), P("x2^2", r)}));
    EXPECT_TRUE(c.pass);
    EXPECT_EQ(c.data["left"], nlohmann::json({1, 1}));
    EXPECT_EQ(c.data["right"], nlohmann::json({1, 1}));
    const CheckNode z = exact_sequence_check(power_sum_ideal(2, 2));
    EXPECT_TRUE(z.pass);
    long left = 0, right = 0;
    for (long v : z.data["left"].get<std::vector<long>>()) left += v;
    for (long v : z.data["right"].get<std::vector<long>>()) right += v;
    EXPECT_EQ(left, 18);
    EXPECT_EQ(right, 6);
    const CheckNode deg = exact_sequence_check(Ideal(r, {P("x1^3", r), P("x2", r)}));
    EXPECT_TRUE(deg.pass);
    EXPECT_TRUE(deg.data["left"].empty());
}

TEST(TreeConditions, MonomialAndPowerSumFamilies) {
    VerifyOptions o;
    EXPECT_TRUE(verify_tree_conditions("monomial", 3, [](int n) { return monomial_family(n, 3); }, o).pass);
    EXPECT_TRUE(verify_tree_conditions("F", 2, [](int n) { return family_F_generators(n, 3); }, o).pass);
}

TEST(TreeConditions, DetectsAFamilyThatIsNotClosed) {
    // Only the members with i = 0: left children fall outside.
    auto level = [](int n) {
        std::vector<TreeEntry> keep;
        for (auto& e : family_F_generators(n, 2))
            if (e.i == 0) keep.push_back(e);
        return keep;
    };
    const CheckNode r = verify_tree_conditions("truncated", 2, level, VerifyOptions{});
    EXPECT_FALSE(r.pass);
    EXPECT_NE(r.first_failure().find("(ii)"), std::string::npos);
}

TEST(CsmArrows, ExampleThreeSixThree) {
    EXPECT_EQ(arrow_targets(3, 6, 3), (std::vector<std::string>{"₂1₂", "₂5₁", "₂5₂"}));
    EXPECT_EQ(arrow_targets(3, 6, 2), arrow_targets(3, 6, 3));
}

TEST(CsmArrows, TwoParameterFamiliesCollapse) {
    for (int m = 1; m <= 3; ++m)
        for (const auto& t : arrow_targets(4, 2, m)) EXPECT_EQ(t, "₃1₃");
    EXPECT_EQ(arrow_targets(4, 1, 4), std::vector<std::string>{"₃1₃"});
    EXPECT_EQ(arrow_targets(3, 1, 3), std::vector<std::string>{"₂1₂"});
    EXPECT_EQ(arrow_targets(2, 1, 2), std::vector<std::string>{"₁1₁"});
    EXPECT_TRUE(csm_arrows(family_member(1, 3, 1)).empty());
}

TEST(CsmArrows, EngineAgreesWithPrediction) {
    for (int n = 2; n <= 3; ++n)
        for (const auto& f : family_members(n, 5)) {
            const auto got = csm_arrows(f);
            const auto want = predicted_csm_targets(f);
            ASSERT_EQ(got.size(), want.size()) << f.label();
            for (std::size_t j = 0; j < got.size(); ++j) {
                ASSERT_TRUE(got[j].target.has_value()) << f.label();
                EXPECT_EQ(got[j].target->label(), want[j].label()) << f.label() << " U_" << j + 1;
                EXPECT_TRUE(got[j].cyclic);
                EXPECT_TRUE(got[j].hilbert_matches);
            }
        }
}

TEST(Export, DotAndJson) {
    Graph single;
    single.nodes.push_back({"₂1₂", "(e1, e2)", {1, 1}});
    EXPECT_EQ(export_graph(single, "dot"), "digraph tree {\n  \"₂1₂\";\n}\n");
    EXPECT_EQ(export_graph(Graph{}, "dot"), "digraph tree {\n}\n");
    const nlohmann::json empty = nlohmann::json::parse(export_graph(Graph{}, "json"));
    EXPECT_TRUE(empty["nodes"].empty() && empty["edges"].empty());
    EXPECT_THROW(export_graph(single, "svg"), std::invalid_argument);

    const Graph g = csm_diagram({family_member(3, 6, 3)});
    const nlohmann::json j = nlohmann::json::parse(export_graph(g, "json"));
    std::set<std::string> labels;
    for (const auto& n : j["nodes"]) labels.insert(n["label"].get<std::string>());
    EXPECT_EQ(labels, (std::set<std::string>{"₃6₃", "₂1₂", "₂5₁", "₂5₂", "₁1₁", "₁4₁"}));
    for (const auto& e : j["edges"]) {
        EXPECT_EQ(e["kind"], "csm");
        EXPECT_TRUE(labels.count(e["to"].get<std::string>()));
    }
    EXPECT_EQ(export_graph(g, "dot"), export_graph(csm_diagram({family_member(3, 6, 3)}), "dot"));
}

TEST(Export, FamilyGraphEdges) {
    const Graph g = family_graph(family_F_generators(2, 2), family_F_generators(1, 2));
    int left = 0, right = 0;
    for (const auto& e : g.edges) (e.kind == "left" ? left : right)++;
    EXPECT_GT(left, 0);
    EXPECT_EQ(right, static_cast<int>(family_F_generators(2, 2).size()));
}

TEST(FamilyGrid, SmallGrid) {
    VerifyOptions o;
    const CheckNode r = verify_theorem_5_3(2, 3, o);
    EXPECT_TRUE(r.pass) << r.first_failure();
}
