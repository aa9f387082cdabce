#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "mgdom/graph.hpp"
#include "mgdom/vertex_set.hpp"

using namespace mgdom;

TEST_CASE("VertexSet basics") {
    VertexSet s(70);
    CHECK(s.count() == 0);
    s.add(0);
    s.add(69);
    s.add(33);
    CHECK(s.count() == 3);
    CHECK(s.contains(33));
    CHECK_FALSE(s.contains(34));
    s.remove(33);
    CHECK_FALSE(s.contains(33));
    CHECK(s.to_vector() == std::vector<int>{0, 69});
    CHECK(s.to_string() == "{0 69}");

    std::vector<int> seen;
    s.for_each([&](int v) { seen.push_back(v); });
    CHECK(seen == std::vector<int>{0, 69});

    CHECK_THROWS_AS(s.add(70), std::out_of_range);
    CHECK_THROWS_AS(s.contains(-1), std::out_of_range);

    VertexSet t(70);
    t.add(0);
    CHECK(t.is_subset_of(s));
    CHECK_FALSE(s.is_subset_of(t));
    CHECK((s & t).to_vector() == std::vector<int>{0});
    CHECK((s | t) == s);
    CHECK((s - t).to_vector() == std::vector<int>{69});

    VertexSet u(70);
    for (int v = 0; v < 70; ++v) u.add(v);
    CHECK(u.count() == 70);
    u.clear();
    CHECK(u == VertexSet(70));
    CHECK(u.empty());

    CHECK(VertexSet(4, {2, 0}).to_vector() == std::vector<int>{0, 2});
    CHECK_THROWS_AS(VertexSet(-1), std::invalid_argument);

    VertexSet other(3);
    CHECK_THROWS_AS(s |= other, std::invalid_argument);
}

TEST_CASE("Graph construction normalizes and validates") {
    Graph g(4, {{2, 1}, {0, 1}, {2, 3}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.degree(2) == 2);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 3));

    CHECK_THROWS_WITH_AS(Graph(2, {{0, 2}}), doctest::Contains("outside 0.."),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph(2, {{1, 1}}), doctest::Contains("self-loop"),
                         std::invalid_argument);
    // A duplicate must be caught even when written in the opposite orientation.
    CHECK_THROWS_WITH_AS(Graph(3, {{0, 1}, {1, 0}}), doctest::Contains("duplicate edge"),
                         std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
}

namespace {
long long expected_edges(Family f, int p1, int p2) {
    switch (f) {
        case Family::Path: return p1 - 1;
        case Family::Cycle: return p1;
        case Family::Complete: return static_cast<long long>(p1) * (p1 - 1) / 2;
        case Family::CompleteBipartite: return static_cast<long long>(p1) * p2;
        case Family::Star: return p1;
        case Family::Wheel: return 2LL * p1;
        case Family::DoubleStar: return p1 + p2 + 1;
        case Family::Friendship: return 3LL * p1;
    }
    return -1;
}
}  // namespace

TEST_CASE("family generators: sizes and exact small instances") {
    for (int n = 1; n <= 8; ++n) CHECK(generate({Family::Path, n}).size() == expected_edges(Family::Path, n, 0));
    for (int n = 3; n <= 8; ++n) CHECK(generate({Family::Cycle, n}).size() == n);
    for (int n = 1; n <= 8; ++n) CHECK(generate({Family::Complete, n}).size() == expected_edges(Family::Complete, n, 0));
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            CHECK(generate({Family::CompleteBipartite, m, n}).size() == m * n);
    for (int q = 1; q <= 6; ++q) CHECK(generate({Family::Star, q}).size() == q);
    for (int h = 3; h <= 6; ++h) CHECK(generate({Family::Wheel, h}).size() == 2 * h);
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= n; ++m)
            CHECK(generate({Family::DoubleStar, n, m}).size() == n + m + 1);
    for (int k = 1; k <= 4; ++k) CHECK(generate({Family::Friendship, k}).size() == 3 * k);

    const Graph p3 = generate({Family::Path, 3});
    CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

    const Graph c4 = generate({Family::Cycle, 4});
    CHECK(c4.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    const Graph k23 = generate({Family::CompleteBipartite, 2, 3});
    CHECK(k23.order() == 5);
    for (int u : {0, 1})
        for (int v : {2, 3, 4}) CHECK(k23.has_edge(u, v));
    CHECK_FALSE(k23.has_edge(0, 1));

    const Graph star3 = generate({Family::Star, 3});
    CHECK(star3.degree(0) == 3);
    for (int v = 1; v <= 3; ++v) CHECK(star3.degree(v) == 1);

    const Graph w3 = generate({Family::Wheel, 3});  // hub 0, triangle rim 1..3
    CHECK(w3.order() == 4);
    CHECK(w3.degree(0) == 3);
    CHECK(w3.has_edge(1, 2));
    CHECK(w3.has_edge(2, 3));
    CHECK(w3.has_edge(1, 3));

    const Graph ds21 = generate({Family::DoubleStar, 2, 1});
    CHECK(ds21.order() == 5);
    CHECK(ds21.has_edge(0, 1));
    CHECK(ds21.degree(0) == 3);  // center 0 carries two leaves
    CHECK(ds21.degree(1) == 2);  // center 1 carries one leaf

    const Graph f2 = generate({Family::Friendship, 2});
    CHECK(f2.order() == 5);
    CHECK(f2.degree(0) == 4);
    CHECK(f2.has_edge(1, 2));
    CHECK(f2.has_edge(3, 4));
    CHECK_FALSE(f2.has_edge(2, 3));

    CHECK_THROWS_AS(generate({Family::Path, 0}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::Cycle, 2}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::CompleteBipartite, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::Wheel, 2}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::DoubleStar, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::Friendship, 0}), std::invalid_argument);
}

TEST_CASE("family names round-trip") {
    for (Family f : {Family::Path, Family::Cycle, Family::Complete, Family::CompleteBipartite,
                     Family::Star, Family::Wheel, Family::DoubleStar, Family::Friendship}) {
        const auto parsed = parse_family(family_name(f));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == f);
    }
    CHECK_FALSE(parse_family("pentagon").has_value());
}

TEST_CASE("Rng is deterministic and in range") {
    Rng a(123), b(123), c(124);
    bool diverged = false;
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next_u64();
        CHECK(x == b.next_u64());
        diverged |= (x != c.next_u64());
    }
    CHECK(diverged);

    Rng r(7);
    for (int i = 0; i < 1000; ++i) {
        const auto v = r.next_below(13);
        CHECK(v < 13);
        const int d = r.next_int(-3, 3);
        CHECK(d >= -3);
        CHECK(d <= 3);
        const double u = r.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    CHECK(mix_seed(1, 2) != mix_seed(1, 3));
    CHECK(mix_seed(1, 2) == mix_seed(1, 2));
}

TEST_CASE("random_tree spans all labeled trees") {
    Rng rng(99);
    for (int n = 1; n <= 9; ++n) {
        const Graph t = random_tree(rng, n);
        CHECK(t.order() == n);
        CHECK(t.size() == n - 1);
        CHECK(is_connected(t));
    }
    // Cayley: 4^2 = 16 labeled trees on 4 vertices; a uniform sampler must
    // hit every one of them comfortably within 2000 draws.
    std::set<std::vector<Edge>> shapes;
    Rng rng2(5);
    for (int i = 0; i < 2000; ++i) shapes.insert(random_tree(rng2, 4).edges());
    CHECK(shapes.size() == 16);
}

TEST_CASE("random graph generators honor their contracts") {
    Rng rng(11);
    const Graph t = random_connected_graph(rng, 8, 0.0);
    CHECK(t.size() == 7);  // p=0 leaves the spanning tree alone
    const Graph k = random_connected_graph(rng, 6, 1.0);
    CHECK(k.size() == 15);  // p=1 fills in every pair
    for (int i = 0; i < 50; ++i) {
        const Graph g = random_connected_graph(rng, 2 + i % 7, 0.4);
        CHECK(is_connected(g));
    }
    for (int i = 0; i < 50; ++i) {
        const Graph g = random_isolate_free_graph(rng, 2 + i % 7, 0.3);
        CHECK(degree_profile(g).min_degree >= 1);
    }
    CHECK_THROWS_AS(random_isolate_free_graph(rng, 1, 0.3), std::invalid_argument);
}

TEST_CASE("distances, diameter, connectivity, degree profile") {
    const Graph p5 = generate({Family::Path, 5});
    const auto dist = distances_from(p5, 0);
    CHECK(dist == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(diameter(p5) == 4);
    CHECK(diameter(generate({Family::Cycle, 6})) == 3);
    CHECK(diameter(generate({Family::Star, 4})) == 2);

    Graph two_parts(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(two_parts));
    CHECK(distances_from(two_parts, 0)[3] == kUnreachable);
    CHECK_THROWS_AS(diameter(two_parts), std::invalid_argument);

    const auto prof = degree_profile(Graph(4, {{0, 1}, {1, 2}}));
    CHECK(prof.degrees == std::vector<int>{1, 2, 1, 0});
    CHECK(prof.min_degree == 0);
    CHECK(prof.max_degree == 2);
    CHECK(prof.leaves.to_vector() == std::vector<int>{0, 2});
    CHECK(prof.isolated.to_vector() == std::vector<int>{3});
}

TEST_CASE("edge list parsing and serialization") {
    const Graph p3 = generate({Family::Path, 3});
    CHECK(serialize_edge_list(p3) == "3 2\n0 1\n1 2\n");

    std::istringstream round(serialize_edge_list(p3));
    CHECK(parse_edge_list(round) == p3);

    // Comments, blank lines and stray spacing are tolerated.
    std::istringstream messy("# a path\n\n 3 2 \n0 1\n\n# interior comment\n1 2\n");
    CHECK(parse_edge_list(messy) == p3);

    auto expect_error = [](const std::string& text, const std::string& needle) {
        std::istringstream in(text);
        try {
            parse_edge_list(in);
            FAIL_CHECK("expected parse failure for: " << text);
        } catch (const std::exception& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("", "missing header");
    expect_error("x y\n", "line 1");
    expect_error("3\n", "line 1");
    expect_error("3 2\n0 1\n", "declared 2 edges but found 1");
    expect_error("3 1\n0 1\n1 2\n", "line 3");
    expect_error("3 2\n0 1\n1 0 9\n", "line 3");
    expect_error("3 2\n1 0\n1 2\n", "u < v");
    expect_error("3 2\n0 1\n0 1\n", "duplicate");
    expect_error("2 1\n0 7\n", "line 2");
    expect_error("-2 0\n", "vertex count");
}
