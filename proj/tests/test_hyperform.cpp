#include <doctest.h>

#include <sstream>

#include "generators.hpp"
#include "steiner/hypermatrix.hpp"
#include "steiner/rng.hpp"
#include "steiner/tree.hpp"
#include "steiner/tree_bases.hpp"

using namespace steiner;

TEST_CASE("steiner_hypermatrix: one-edge tree at order 3") {
    Tree k2 = build_tree({{1, 2}});
    Hypermatrix m = steiner_hypermatrix(k2, 3);
    CHECK(m.at({1, 1, 1}) == 0);
    CHECK(m.at({2, 2, 2}) == 0);
    int mixed = 0;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int c = 1; c <= 2; ++c)
                if (m.at({a, b, c}) == 1) mixed++;
    CHECK(mixed == 6);
}

TEST_CASE("steiner_hypermatrix: path distance matrix and star entry") {
    Tree path = build_tree({{1, 2}, {2, 3}});
    Hypermatrix d = steiner_hypermatrix(path, 2);
    CHECK(d.at({1, 1}) == 0);
    CHECK(d.at({1, 2}) == 1);
    CHECK(d.at({1, 3}) == 2);
    CHECK(d.at({2, 3}) == 1);

    Tree star = build_tree({{1, 4}, {2, 4}, {3, 4}});
    CHECK(steiner_hypermatrix(star, 3).at({1, 2, 3}) == 3);
    CHECK(is_symmetric(steiner_hypermatrix(star, 3)));
}

TEST_CASE("steiner_hypermatrix: entry cap") {
    Tree t = star_tree(10);
    CHECK_THROWS_AS(steiner_hypermatrix(t, 9, 1000), std::length_error);
}

TEST_CASE("identity_hypermatrix") {
    Hypermatrix i32 = identity_hypermatrix(3, 2);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) CHECK(i32.at({a, b}) == (a == b ? 1 : 0));

    Hypermatrix padded = identity_hypermatrix(4, 4, true);
    for (int j = 1; j <= 4; ++j)
        CHECK(padded.at({j, j, j, j}) == (j <= 3 ? 1 : 0));
    Rat nonzero = 0;
    for (size_t f = 0; f < padded.size(); ++f) nonzero += abs(padded.flat_at(f));
    CHECK(nonzero == 3);

    Hypermatrix i23 = identity_hypermatrix(2, 3);
    CHECK(i23.at({1, 1, 1}) == 1);
    CHECK(i23.at({2, 2, 2}) == 1);
    CHECK(i23.at({1, 2, 1}) == 0);
}

TEST_CASE("eval_multilinear: reference values") {
    Tree path = build_tree({{1, 2}, {2, 3}});
    Hypermatrix d = steiner_hypermatrix(path, 2);
    RatVec ones = ones_vec(3);
    CHECK(eval_multilinear(d, {ones, ones}) == 8);

    CHECK(eval_multilinear(d, {zero_vec(3), ones}) == 0);

    Tree k2 = build_tree({{1, 2}});
    Hypermatrix m = steiner_hypermatrix(k2, 3);
    RatVec ones2 = ones_vec(2);
    CHECK(eval_multilinear(m, {ones2, ones2, ones2}) == 6);

    CHECK_THROWS_AS(eval_multilinear(d, {ones}), std::invalid_argument);
    CHECK_THROWS_AS(eval_multilinear(d, {ones, ones_vec(2)}), std::invalid_argument);
}

TEST_CASE("eval_multilinear: direct and contracted paths agree exactly") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int k = rng.uniform_int(2, 4);
        int n = rng.uniform_int(2, 4);
        Hypermatrix a = testgen::random_symmetric(rng, k, n);
        std::vector<RatVec> xs;
        for (int j = 0; j < k; ++j) xs.push_back(rng.rat_vec(static_cast<size_t>(n)));
        CHECK(eval_multilinear(a, xs) == eval_multilinear_contracted(a, xs));
    }
}

TEST_CASE("eval_multilinear is symmetric in its arguments for symmetric a") {
    Rng rng(12);
    Hypermatrix a = testgen::random_symmetric(rng, 3, 3);
    RatVec x = rng.rat_vec(3), y = rng.rat_vec(3), z = rng.rat_vec(3);
    Rat ref = eval_multilinear(a, {x, y, z});
    CHECK(eval_multilinear(a, {z, x, y}) == ref);
    CHECK(eval_multilinear(a, {y, z, x}) == ref);
}

TEST_CASE("eval_gradient: examples and Euler contraction") {
    Tree k2 = build_tree({{1, 2}});
    Hypermatrix m2 = steiner_hypermatrix(k2, 2);
    CHECK(eval_gradient(m2, {Rat(1), Rat(0)}) == RatVec{0, 1});
    CHECK(eval_gradient(m2, zero_vec(2)) == zero_vec(2));

    Tree path = build_tree({{1, 2}, {2, 3}});
    Hypermatrix d = steiner_hypermatrix(path, 2);
    CHECK(eval_gradient(d, ones_vec(3)) == RatVec{3, 2, 3});

    Rng rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        int k = rng.uniform_int(2, 5);
        Hypermatrix a = testgen::random_symmetric(rng, k, 3);
        RatVec x = rng.rat_vec(3);
        CHECK(dot(x, eval_gradient(a, x)) == eval_kform(a, x));
    }
}

TEST_CASE("mode_transform: identity and congruence") {
    Rng rng(14);
    Hypermatrix a = testgen::random_symmetric(rng, 3, 3);
    CHECK(mode_transform(a, RatMat::identity(3)) == a);

    // k = 2 is the ordinary congruence P^T A P
    Hypermatrix m = testgen::random_symmetric(rng, 2, 3);
    RatMat p(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) p.at(i, j) = Rat(rng.uniform_int(-4, 4));
    Hypermatrix got = mode_transform(m, p);
    RatMat mm(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) mm.at(i, j) = m.at({i + 1, j + 1});
    RatMat want = mat_mul(transpose(p), mat_mul(mm, p));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(got.at({i + 1, j + 1}) == want.at(i, j));
}

TEST_CASE("mode_transform: defining property on random instances") {
    Rng rng(15);
    Tree k2 = build_tree({{1, 2}});
    Hypermatrix m = steiner_hypermatrix(k2, 3);
    RatMat p(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) p.at(i, j) = Rat(rng.uniform_int(-9, 9));
    Hypermatrix b = mode_transform(m, p);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<RatVec> xs{rng.rat_vec(2), rng.rat_vec(2), rng.rat_vec(2)};
        std::vector<RatVec> pxs;
        for (const RatVec& x : xs) pxs.push_back(mat_vec(p, x));
        CHECK(eval_multilinear(b, xs) == eval_multilinear(m, pxs));
    }
}

TEST_CASE("mode_transform: rectangular change of dimension") {
    Rng rng(16);
    Hypermatrix a = testgen::random_symmetric(rng, 3, 3);
    RatMat p(3, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) p.at(i, j) = Rat(rng.uniform_int(-3, 3));
    Hypermatrix b = mode_transform(a, p);
    CHECK(b.dim() == 2);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<RatVec> xs{rng.rat_vec(2), rng.rat_vec(2), rng.rat_vec(2)};
        std::vector<RatVec> pxs;
        for (const RatVec& x : xs) pxs.push_back(mat_vec(p, x));
        CHECK(eval_multilinear(b, xs) == eval_multilinear(a, pxs));
    }
}

TEST_CASE("mode_transform: zeta then mobius returns the original") {
    Rng rng(17);
    for (int trial = 0; trial < 6; ++trial) {
        int n = rng.uniform_int(2, 4);
        int k = rng.uniform_int(2, 3);
        Tree t = random_tree(n, rng.next());
        Hypermatrix m = steiner_hypermatrix(t, k);
        Hypermatrix round = mode_transform(mode_transform(m, zeta_matrix(t)), mobius_matrix(t));
        CHECK(round == m);
    }
}

TEST_CASE("polarize: classical k = 2 identity and collapse") {
    Rng rng(18);
    Hypermatrix a = testgen::random_symmetric(rng, 2, 4);
    RatVec x = rng.rat_vec(4), y = rng.rat_vec(4);
    RatVec xy = vec_add(x, y);
    Rat expect = (eval_kform(a, xy) - eval_kform(a, x) - eval_kform(a, y)) / 2;
    CHECK(polarize(a, {x, y}) == expect);

    Hypermatrix b = testgen::random_symmetric(rng, 4, 3);
    RatVec v = rng.rat_vec(3);
    CHECK(polarize(b, {v, v, v, v}) == eval_kform(b, v));
}

TEST_CASE("polarize: alternating-sum example on the one-edge tree") {
    Tree k2 = build_tree({{1, 2}});
    Hypermatrix m = steiner_hypermatrix(k2, 3);
    RatVec e1{1, 0}, e2{0, 1};
    CHECK(polarize(m, {e1, e1, e2}) == 1);
}

TEST_CASE("polarize equals eval_multilinear on random instances") {
    Rng rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        int k = rng.uniform_int(2, 5);
        int n = rng.uniform_int(2, 4);
        Hypermatrix a = testgen::random_symmetric(rng, k, n);
        std::vector<RatVec> xs;
        for (int j = 0; j < k; ++j) xs.push_back(rng.rat_vec(static_cast<size_t>(n), -4, 4));
        CHECK(polarize(a, xs) == eval_multilinear(a, xs));
    }
}

TEST_CASE("hypermatrix serialization") {
    Rng rng(20);
    Hypermatrix a = testgen::random_symmetric(rng, 3, 3);
    a.at({1, 2, 3}) = Rat(5, 7);
    a.at({1, 3, 2}) = Rat(5, 7);
    a.at({2, 1, 3}) = Rat(5, 7);
    a.at({2, 3, 1}) = Rat(5, 7);
    a.at({3, 1, 2}) = Rat(5, 7);
    a.at({3, 2, 1}) = Rat(5, 7);
    std::stringstream ss;
    write_hypermatrix(ss, a);
    CHECK(read_hypermatrix(ss) == a);

    // loader rejects asymmetric data unless told otherwise
    Hypermatrix bad(2, 2);
    bad.at({1, 2}) = 1;
    std::stringstream s2;
    write_hypermatrix(s2, bad);
    CHECK_THROWS_AS(read_hypermatrix(s2), std::invalid_argument);
    std::stringstream s3;
    write_hypermatrix(s3, bad);
    CHECK(read_hypermatrix(s3, false) == bad);
}
