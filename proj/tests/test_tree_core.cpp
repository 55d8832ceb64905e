#include <doctest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "steiner/rng.hpp"
#include "steiner/tree.hpp"

using namespace steiner;

TEST_CASE("build_tree: path and star shapes") {
    Tree path = build_tree({{1, 2}, {2, 3}});
    CHECK(path.n() == 3);
    CHECK(path.parent(1) == 2);
    CHECK(path.parent(2) == 3);
    CHECK(path.depth(3) == 0);
    CHECK(path.depth(1) == 2);

    Tree star = build_tree({{1, 4}, {2, 4}, {3, 4}});
    CHECK(star.n() == 4);
    CHECK(star.parent(1) == 4);
    CHECK(star.parent(2) == 4);
    CHECK(star.parent(3) == 4);
    CHECK(star.depth(4) == 0);
}

TEST_CASE("build_tree: invalid input diagnostics") {
    CHECK_THROWS_WITH_AS(build_tree({{1, 2}, {1, 2}}),
                         doctest::Contains("duplicate edge {1,2}"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_tree({{1, 1}}), doctest::Contains("self-loop"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_tree({{1, 3}, {1, 4}, {3, 4}}),
                         doctest::Contains("cycle"), std::invalid_argument);
    // vertex 2 is mentioned nowhere, so the max label implies a gap
    CHECK_THROWS_WITH_AS(build_tree({{1, 3}}), doctest::Contains("vertex 2"),
                         std::invalid_argument);
    CHECK_THROWS_AS(build_tree({{0, 1}}), std::invalid_argument);
}

TEST_CASE("build_tree: single vertex") {
    Tree t = build_tree({});
    CHECK(t.n() == 1);
    CHECK(t.depth(1) == 0);
    CHECK(steiner_distance(t, {1, 1}) == 0);
}

TEST_CASE("random_tree: tiny cases and validity") {
    CHECK(random_tree(1, 7).n() == 1);
    Tree t2 = random_tree(2, 123);
    CHECK(t2.n() == 2);
    CHECK(t2.edges().size() == 1);

    // every decode passes the validating constructor; spot-check n = 8
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Tree t = random_tree(8, seed);
        CHECK(t.n() == 8);
        CHECK(t.edges().size() == 7);
    }
    // determinism
    CHECK(random_tree(8, 42).edges() == random_tree(8, 42).edges());
}

TEST_CASE("random_tree: prufer decode is uniform over labeled trees at n=4") {
    // 16 labeled trees on 4 vertices; all appear over many seeds
    std::set<std::vector<std::pair<int, int>>> seen;
    for (uint64_t seed = 0; seed < 4000; ++seed) {
        auto edges = random_tree(4, seed).edges();
        std::vector<std::pair<int, int>> canon;
        for (auto [u, v] : edges) canon.emplace_back(std::min(u, v), std::max(u, v));
        std::sort(canon.begin(), canon.end());
        seen.insert(canon);
    }
    CHECK(seen.size() == 16);
}

TEST_CASE("steiner_distance: examples") {
    Tree path = build_tree({{1, 2}, {2, 3}});
    CHECK(steiner_distance(path, {1, 3}) == 2);
    CHECK(steiner_distance(path, {2, 2, 2}) == 0);

    Tree star = build_tree({{1, 4}, {2, 4}, {3, 4}});
    CHECK(steiner_distance(star, {1, 2, 3}) == 3);
    CHECK(steiner_distance(star, {1, 2}) == 2);

    CHECK_THROWS_AS(steiner_distance(path, {}), std::invalid_argument);
    CHECK_THROWS_AS(steiner_distance(path, {4}), std::out_of_range);
}

TEST_CASE("steiner_distance: pairwise agrees with LCA distance") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Tree t = random_tree(9, seed);
        for (int u = 1; u <= 9; ++u)
            for (int v = 1; v <= 9; ++v)
                CHECK(steiner_distance(t, {u, v}) == oracle::lca_pair_distance(t, u, v));
    }
}

TEST_CASE("steiner_distance: multiset support invariance and monotonicity") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.uniform_int(2, 8);
        Tree t = random_tree(n, rng.next());
        int sz = rng.uniform_int(1, n);
        std::vector<int> verts;
        for (int i = 0; i < sz; ++i) verts.push_back(rng.uniform_int(1, n));
        int base = steiner_distance(t, verts);
        // repetition never changes the value
        std::vector<int> doubled = verts;
        doubled.insert(doubled.end(), verts.begin(), verts.end());
        CHECK(steiner_distance(t, doubled) == base);
        // growing the multiset never shrinks the value
        verts.push_back(rng.uniform_int(1, n));
        CHECK(steiner_distance(t, verts) >= base);
    }
}

TEST_CASE("steiner_distance: equals brute-force subtree enumeration for n <= 8") {
    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        int n = rng.uniform_int(2, 8);
        Tree t = random_tree(n, rng.next());
        int sz = rng.uniform_int(1, 4);
        std::vector<int> verts;
        for (int i = 0; i < sz; ++i) verts.push_back(rng.uniform_int(1, n));
        CHECK(steiner_distance(t, verts) == oracle::brute_force_steiner(t, verts));
    }
}

TEST_CASE("edge_cuts: path and star examples") {
    Tree path = build_tree({{1, 2}, {2, 3}});
    auto cuts = edge_cuts(path);
    REQUIRE(cuts.size() == 2);
    CHECK(cuts[0].side_a == std::vector<int>{2, 3});
    CHECK(cuts[0].side_b == std::vector<int>{1});
    CHECK(cuts[0].a_vec == RatVec{0, 1, 1});
    CHECK(cuts[1].side_a == std::vector<int>{3});
    CHECK(cuts[1].side_b == std::vector<int>{1, 2});

    Tree star = build_tree({{1, 4}, {2, 4}, {3, 4}});
    auto scuts = edge_cuts(star);
    REQUIRE(scuts.size() == 3);
    CHECK(scuts[0].a_centered ==
          RatVec{Rat(-3, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)});
}

TEST_CASE("edge_cuts: invariants on random trees") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        int n = rng.uniform_int(2, 9);
        Tree t = random_tree(n, rng.next());
        for (const EdgeCut& cut : edge_cuts(t)) {
            CHECK(vec_sum(cut.a_centered) == 0);
            CHECK(cut.side_a.size() + cut.side_b.size() == static_cast<size_t>(n));
            // root on the A side, the cut vertex on the B side
            CHECK(std::count(cut.side_a.begin(), cut.side_a.end(), n) == 1);
            CHECK(std::count(cut.side_b.begin(), cut.side_b.end(), cut.edge_index) == 1);
        }
        // S(U) = number of separating cuts, cross-checked by brute force
        std::vector<int> verts;
        int sz = rng.uniform_int(1, 4);
        for (int i = 0; i < sz; ++i) verts.push_back(rng.uniform_int(1, n));
        int separating = 0;
        for (const EdgeCut& cut : edge_cuts(t)) {
            bool in_a = false, in_b = false;
            for (int v : verts) {
                if (std::count(cut.side_a.begin(), cut.side_a.end(), v)) in_a = true;
                else in_b = true;
            }
            if (in_a && in_b) separating++;
        }
        CHECK(separating == oracle::brute_force_steiner(t, verts));
    }
}

TEST_CASE("tree text and prufer round trips") {
    Tree t = parse_tree_text("1 2\n\n2 3\n");
    CHECK(t.n() == 3);
    CHECK(t.parent(1) == 2);
    Tree u = parse_tree_text(t.to_text());
    CHECK(u.edges() == t.edges());

    Tree p = parse_prufer("4 4");  // star with center 4
    CHECK(p.n() == 4);
    CHECK(p.parent(1) == 4);
    CHECK(parse_prufer("").n() == 2);

    CHECK_THROWS_AS(parse_tree_text("1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_prufer("9"), std::invalid_argument);
}

TEST_CASE("built-in tree shapes") {
    CHECK(path_tree(5).depth(1) == 4);
    CHECK(star_tree(5).depth(1) == 1);
    Tree cat = caterpillar_tree(7);
    CHECK(cat.n() == 7);
    CHECK(cat.edges().size() == 6);
    Tree broom = broom_tree(7);
    CHECK(broom.n() == 7);
    CHECK(broom.edges().size() == 6);
}
