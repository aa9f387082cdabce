#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "mgdom/dominate.hpp"
#include "mgdom/graph.hpp"
#include "mgdom/solve.hpp"
#include "mgdom/theorems.hpp"
#include "mgdom/transform.hpp"

using namespace mgdom;

namespace {

int count_verdict(const std::vector<TheoremReport>& rows, Verdict v) {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(),
                                          [&](const TheoremReport& r) { return r.verdict == v; }));
}

bool all_match_or_na(const std::vector<TheoremReport>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const TheoremReport& r) {
        return r.verdict == Verdict::Match || r.verdict == Verdict::NotApplicable;
    });
}

}  // namespace

TEST_CASE("claim ids round-trip") {
    for (TheoremId id : {TheoremId::T34_cycle, TheoremId::T45_mid_path, TheoremId::O32_chain,
                         TheoremId::C56_no_strong_support}) {
        const auto parsed = parse_theorem_id(theorem_id_name(id));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == id);
    }
    CHECK_FALSE(parse_theorem_id("T99_unknown").has_value());
    CHECK(std::string(verdict_name(Verdict::Match)) == "match");
    CHECK(std::string(verdict_name(Verdict::Mismatch)) == "mismatch");
    CHECK(std::string(verdict_name(Verdict::NotApplicable)) == "not_applicable");
    CHECK(std::string(verdict_name(Verdict::BudgetExceeded)) == "budget_exceeded");
}

TEST_CASE("closed-form value tables") {
    const int mid_cycle[] = {2, 2, 4, 4, 4, 4, 6, 6, 6, 6};  // n = 3..12
    for (int n = 3; n <= 12; ++n)
        CHECK(formula_value(TheoremId::T44_mid_cycle, n) == mid_cycle[n - 3]);

    const int mid_path[] = {2, 2, 4, 4, 4, 4, 6, 6, 6, 6, 8, 8};  // n = 2..13
    for (int n = 2; n <= 13; ++n)
        CHECK(formula_value(TheoremId::T45_mid_path, n) == mid_path[n - 2]);

    const int base_cycle[] = {2, 2, 2, 4, 4, 4, 4, 4, 6, 6};  // n = 3..12
    for (int n = 3; n <= 12; ++n)
        CHECK(formula_value(TheoremId::T34_cycle, n) == base_cycle[n - 3]);

    const int base_path[] = {2, 2, 2, 4, 4, 4, 4, 4, 6, 6, 6};  // n = 2..12
    for (int n = 2; n <= 12; ++n)
        CHECK(formula_value(TheoremId::T34_path, n) == base_path[n - 2]);

    CHECK(formula_value(TheoremId::T34_complete, 7) == 2);
    CHECK(formula_value(TheoremId::T34_bipartite, 2, 3) == 2);
    CHECK(formula_value(TheoremId::P43_bipartite, 1, 1) == 2);
    CHECK(formula_value(TheoremId::P42_maxdeg, 0) == 2);
    CHECK(formula_value(TheoremId::P57_join, 0) == 2);
    CHECK(formula_value(TheoremId::P46_friendship, 2) == 2);
    CHECK(formula_value(TheoremId::T47_double_star, 3, 2) == 4);
    CHECK(formula_value(TheoremId::C55_strong_support, 4) == 8);
    CHECK(formula_value(TheoremId::C56_no_strong_support, 3) == 6);

    CHECK_THROWS_AS(formula_value(TheoremId::T34_cycle, 2), std::invalid_argument);
    CHECK_THROWS_AS(formula_value(TheoremId::T45_mid_path, 1), std::invalid_argument);
    CHECK_THROWS_AS(formula_value(TheoremId::T47_double_star, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(formula_value(TheoremId::P46_friendship, 1), std::invalid_argument);
    CHECK_THROWS_AS(formula_value(TheoremId::T35_bounds, 5), std::invalid_argument);
    CHECK_THROWS_AS(formula_value(TheoremId::L52_deletion, 5), std::invalid_argument);
}

TEST_CASE("hand-built witnesses are feasible at exactly the closed-form size") {
    for (int n = 3; n <= 13; ++n) {
        const VertexSet w = witness_middle_cycle(n);
        const MiddleGraph mg(generate({Family::Cycle, n}));
        CHECK(w.count() == formula_value(TheoremId::T44_mid_cycle, n));
        CHECK(check(mg.graph(), w, DominationKind::PairedDisjunctive).satisfied);
    }
    for (int n = 2; n <= 14; ++n) {
        const VertexSet w = witness_middle_path(n);
        const MiddleGraph mg(generate({Family::Path, n}));
        CHECK(w.count() == formula_value(TheoremId::T45_mid_path, n));
        CHECK(check(mg.graph(), w, DominationKind::PairedDisjunctive).satisfied);
    }
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= n; ++m) {
            const VertexSet w = witness_middle_double_star(n, m);
            const MiddleGraph mg(generate({Family::DoubleStar, n, m}));
            CHECK(w.count() == 4);
            CHECK(check(mg.graph(), w, DominationKind::PairedDisjunctive).satisfied);
        }
    CHECK_THROWS_AS(witness_middle_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(witness_middle_path(1), std::invalid_argument);
    CHECK_THROWS_AS(witness_middle_double_star(1, 0), std::invalid_argument);
}

TEST_CASE("two-edge-vertex certificate exists exactly when the value is 2") {
    std::vector<Graph> pool;
    for (int n = 2; n <= 6; ++n) pool.push_back(generate({Family::Complete, n}));
    for (int q = 2; q <= 4; ++q) pool.push_back(generate({Family::Star, q}));
    for (int h = 3; h <= 4; ++h) pool.push_back(generate({Family::Wheel, h}));
    for (int k = 2; k <= 3; ++k) pool.push_back(generate({Family::Friendship, k}));
    for (int n = 3; n <= 7; ++n) pool.push_back(generate({Family::Cycle, n}));
    for (int n = 2; n <= 7; ++n) pool.push_back(generate({Family::Path, n}));
    pool.push_back(generate({Family::DoubleStar, 2, 2}));
    Rng rng(61);
    for (int i = 0; i < 8; ++i) pool.push_back(random_connected_graph(rng, 3 + i % 5, 0.4));

    for (const Graph& base : pool) {
        const MiddleGraph mg(base);
        const auto cert = two_subdivision_certificate(mg);
        const auto r = minimum(mg.graph(), DominationKind::PairedDisjunctive);
        REQUIRE(r.status == SolveStatus::Optimal);
        if (degree_profile(base).max_degree >= 2) {
            CHECK(cert.has_value() == (r.value == 2));
        } else {
            // With no vertex of degree 2 there is no pair of incident base
            // edges to scan, yet the minimum can still be 2 through a mixed
            // pair: M(K_2) is a path on three vertices.
            CHECK_FALSE(cert.has_value());
        }
        if (cert) {
            CHECK(cert->v1 < cert->v2);
            CHECK(cert->s1 == mg.subdivision_index(cert->u, cert->v1));
            CHECK(cert->s2 == mg.subdivision_index(cert->u, cert->v2));
            VertexSet d(mg.graph().order());
            d.add(cert->s1);
            d.add(cert->s2);
            CHECK(check(mg.graph(), d, DominationKind::PairedDisjunctive).satisfied);
        }
    }
}

TEST_CASE("tree profile knowns") {
    const auto p2 = tree_profile(generate({Family::Path, 2}));
    CHECK(p2.leaf_count == 2);
    CHECK(p2.strong_support_count == 0);
    CHECK(p2.bound_general == 4);
    CHECK(p2.bound_leaf == 4);
    CHECK(p2.is_star);
    CHECK(p2.no_strong_supports);
    CHECK_FALSE(p2.every_leaf_on_strong_support);
    // Its two leaves are adjacent without sharing a support.
    CHECK_FALSE(p2.leaf_pairs_separated);

    const auto p5 = tree_profile(generate({Family::Path, 5}));
    CHECK(p5.leaf_count == 2);
    CHECK(p5.strong_support_count == 0);
    CHECK(p5.no_strong_supports);
    CHECK(p5.bound_general == 4);
    CHECK(p5.diameter == 4);
    CHECK_FALSE(p5.is_star);
    CHECK(p5.supports.to_vector() == std::vector<int>{1, 3});
    CHECK(p5.leaf_pairs_separated);  // ends are at distance 4

    // P_4: the two end leaves are at distance 3 on distinct supports.
    CHECK_FALSE(tree_profile(generate({Family::Path, 4})).leaf_pairs_separated);

    const auto star3 = tree_profile(generate({Family::Star, 3}));
    CHECK(star3.leaf_count == 3);
    CHECK(star3.strong_support_count == 1);
    CHECK(star3.strong_support_degree_excess == 2);
    CHECK(star3.bound_strong == 2);
    CHECK(star3.bound_leaf == 6);
    CHECK(star3.bound_general == 4);  // max(2, 2*1 + 2*(3-2))
    CHECK(star3.every_leaf_on_strong_support);
    CHECK(star3.is_star);
    CHECK(star3.leaf_pairs_separated);  // all leaves share the hub

    // Two strong supports with two leaves each, joined through a center.
    const Graph spider(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
    const auto sp = tree_profile(spider);
    CHECK(sp.leaf_count == 4);
    CHECK(sp.strong_support_count == 2);
    CHECK(sp.strong_supports.to_vector() == std::vector<int>{1, 2});
    CHECK(sp.strong_support_degree_excess == 4);
    CHECK(sp.bound_general == 4);  // max(2, 4 + 2*(4-4))
    CHECK(sp.bound_strong == 4);
    CHECK(sp.every_leaf_on_strong_support);
    CHECK_FALSE(sp.is_star);
    CHECK(sp.diameter == 4);
    // Same-support pairs share, cross pairs sit at distance 4.
    CHECK(sp.leaf_pairs_separated);

    const auto ds = tree_profile(generate({Family::DoubleStar, 2, 2}));
    CHECK(ds.strong_support_count == 2);
    CHECK(ds.bound_general == 4);
    CHECK(ds.every_leaf_on_strong_support);
    CHECK_FALSE(ds.is_star);
    // The two centers are adjacent, so cross leaves sit at distance 3.
    CHECK_FALSE(ds.leaf_pairs_separated);

    CHECK_THROWS_AS(tree_profile(generate({Family::Cycle, 4})), std::invalid_argument);
    CHECK_THROWS_AS(tree_profile(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
    CHECK_THROWS_AS(tree_profile(generate({Family::Complete, 4})), std::invalid_argument);
}

TEST_CASE("inequality chains agree with the exhaustive reference on a 6-cycle") {
    const Graph c6 = generate({Family::Cycle, 6});
    const auto cc = check_inequalities(c6);
    CHECK(cc.all_optimal);
    CHECK(cc.disjunctive == brute_force_oracle(c6, DominationKind::Disjunctive).value);
    CHECK(cc.total_disjunctive ==
          brute_force_oracle(c6, DominationKind::TotalDisjunctive).value);
    CHECK(cc.paired == brute_force_oracle(c6, DominationKind::Paired).value);
    CHECK(cc.paired_disjunctive ==
          brute_force_oracle(c6, DominationKind::PairedDisjunctive).value);
    CHECK(cc.chain_ok);
    CHECK(cc.total_chain_ok);
    CHECK(cc.bounds_ok);
}

TEST_CASE("verification suites pass on reduced ranges") {
    VerifyOptions o;

    o.max_n = 8;
    CHECK(all_match_or_na(verify_theorem(TheoremId::T34_cycle, o)));
    CHECK(verify_theorem(TheoremId::T34_cycle, o).size() == 6);
    CHECK(all_match_or_na(verify_theorem(TheoremId::T34_path, o)));
    o.max_n = 4;
    CHECK(all_match_or_na(verify_theorem(TheoremId::T34_complete, o)));
    o.max_n = 2;
    CHECK(all_match_or_na(verify_theorem(TheoremId::T34_bipartite, o)));

    o.max_n = 6;
    CHECK(all_match_or_na(verify_theorem(TheoremId::T44_mid_cycle, o)));
    o.max_n = 7;
    CHECK(all_match_or_na(verify_theorem(TheoremId::T45_mid_path, o)));
    o.max_n = 2;
    CHECK(all_match_or_na(verify_theorem(TheoremId::T47_double_star, o)));
    CHECK(verify_theorem(TheoremId::T47_double_star, o).size() == 3);
    o.max_n = 2;
    CHECK(all_match_or_na(verify_theorem(TheoremId::P43_bipartite, o)));
    CHECK(all_match_or_na(verify_theorem(TheoremId::P46_friendship, o)));
    o.max_n = 3;
    CHECK(all_match_or_na(verify_theorem(TheoremId::C55_strong_support, o)));
    CHECK(all_match_or_na(verify_theorem(TheoremId::C56_no_strong_support, o)));

    VerifyOptions rs;
    rs.samples = 3;
    CHECK(all_match_or_na(verify_theorem(TheoremId::L51_sd_restriction, rs)));
    CHECK(verify_theorem(TheoremId::L51_sd_restriction, rs).size() == 3);
    CHECK(all_match_or_na(verify_theorem(TheoremId::L52_deletion, rs)));
    rs.samples = 5;
    CHECK(all_match_or_na(verify_theorem(TheoremId::T53_path_bound, rs)));
    rs.samples = 8;
    const auto tree_rows = verify_theorem(TheoremId::T54_tree_bound, rs);
    CHECK(tree_rows.size() == 8);
    CHECK(count_verdict(tree_rows, Verdict::Mismatch) == 0);
    CHECK(count_verdict(tree_rows, Verdict::BudgetExceeded) == 0);

    rs.samples = 2;
    const auto cert_rows = verify_theorem(TheoremId::T41_certificate, rs);
    CHECK(count_verdict(cert_rows, Verdict::Mismatch) == 0);
    // P_2 has one base edge, so no two incident ones.
    const auto p2_row = std::find_if(cert_rows.begin(), cert_rows.end(),
                                     [](const TheoremReport& r) { return r.instance == "P_2"; });
    REQUIRE(p2_row != cert_rows.end());
    CHECK(p2_row->verdict == Verdict::NotApplicable);
}

TEST_CASE("inequality campaign groups rows by claim") {
    VerifyOptions o;
    o.samples = 2;
    const auto rows = verify_inequalities(o);
    REQUIRE(rows.size() == 12);  // 2 samples x {G, M(G)} x 3 claims
    for (int i = 0; i < 4; ++i) CHECK(rows[i].id == TheoremId::T35_bounds);
    for (int i = 4; i < 8; ++i) CHECK(rows[i].id == TheoremId::O31_chain);
    for (int i = 8; i < 12; ++i) CHECK(rows[i].id == TheoremId::O32_chain);
    CHECK(all_match_or_na(rows));
    // The middle-graph rows are labeled as such and follow their base row.
    CHECK(rows[1].instance == "M(" + rows[0].instance + ")");

    // Filtering through verify_theorem keeps only the requested claim.
    const auto only35 = verify_theorem(TheoremId::T35_bounds, o);
    REQUIRE(only35.size() == 4);
    for (const auto& r : only35) CHECK(r.id == TheoremId::T35_bounds);
    const auto only32 = verify_theorem(TheoremId::O32_chain, o);
    REQUIRE(only32.size() == 4);
    for (const auto& r : only32) CHECK(r.id == TheoremId::O32_chain);
}

TEST_CASE("CSV report format") {
    TheoremReport a;
    a.id = TheoremId::T34_bipartite;
    a.instance = "K_{2,3}";
    a.expected = "= 2";
    a.solver_value = 2;
    a.verdict = Verdict::Match;
    a.millis = 7;
    a.witness = "{0 5}";

    TheoremReport b;
    b.id = TheoremId::T54_tree_bound;
    b.instance = "quote\"inside";
    b.expected = ">= 4";
    b.solver_value = -1;
    b.verdict = Verdict::NotApplicable;
    b.millis = 0;
    b.witness = "";

    const std::string csv = reports_to_csv({a, b});
    CHECK(csv ==
          "theorem_id,instance,expected,solver_value,verdict,millis,witness\n"
          "T34_bipartite,\"K_{2,3}\",= 2,2,match,7,{0 5}\n"
          "T54_tree_bound,\"quote\"\"inside\",>= 4,,not_applicable,0,\n");

    // Two identical campaign runs serialize identically once timing is zeroed.
    VerifyOptions o;
    o.samples = 2;
    auto r1 = verify_inequalities(o);
    auto r2 = verify_inequalities(o);
    for (auto& r : r1) r.millis = 0;
    for (auto& r : r2) r.millis = 0;
    CHECK(reports_to_csv(r1) == reports_to_csv(r2));
}
