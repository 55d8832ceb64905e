#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "steiner/matrix.hpp"
#include "steiner/rng.hpp"

using namespace steiner;

namespace {

RatMat random_mat(Rng& rng, int rows, int cols, int lo = -6, int hi = 6) {
    RatMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(rng.uniform_int(lo, hi));
    return m;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(rat_from_string("3/6") == Rat(1, 2));
    CHECK(rat_to_string(Rat(-4, 2)) == "-2");
    CHECK(rat_to_string(Rat(5, 3)) == "5/3");
    CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
    CHECK(rat_pow(Rat(-2, 3), 3) == Rat(-8, 27));
}

TEST_CASE("bareiss determinant matches Laplace expansion") {
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.uniform_int(1, 5);
        RatMat m = random_mat(rng, n, n);
        CHECK(det(m) == oracle::laplace_det(m));
    }
}

TEST_CASE("determinant with rational entries") {
    RatMat m(2, 2);
    m.at(0, 0) = Rat(1, 2);
    m.at(0, 1) = Rat(1, 3);
    m.at(1, 0) = Rat(1, 5);
    m.at(1, 1) = Rat(1, 7);
    CHECK(det(m) == Rat(1, 14) - Rat(1, 15));
}

TEST_CASE("determinant needing a row swap") {
    RatMat m(3, 3);
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(2, 2) = 1;
    CHECK(det(m) == -1);
}

TEST_CASE("inverse: random nonsingular matrices") {
    Rng rng(17);
    int done = 0;
    while (done < 25) {
        int n = rng.uniform_int(1, 6);
        RatMat m = random_mat(rng, n, n);
        if (det(m) == 0) continue;
        done++;
        CHECK(mat_mul(m, inverse(m)) == RatMat::identity(n));
    }
    RatMat z(2, 2);
    CHECK_THROWS_AS(inverse(z), std::domain_error);
}

TEST_CASE("rank") {
    Rng rng(23);
    RatMat m(3, 4);
    for (int j = 0; j < 4; ++j) {
        m.at(0, j) = Rat(j);
        m.at(1, j) = Rat(2 * j);  // dependent row
        m.at(2, j) = Rat(j * j);
    }
    CHECK(rank(m) == 2);
    CHECK(rank(RatMat::identity(5)) == 5);
    CHECK(rank(RatMat(3, 3)) == 0);
}

TEST_CASE("leading principal minors") {
    RatMat m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 3;
    auto minors = leading_principal_minors(m);
    REQUIRE(minors.size() == 2);
    CHECK(minors[0] == 2);
    CHECK(minors[1] == 5);
}

TEST_CASE("matrix serialization round trip") {
    Rng rng(54);
    RatMat m = random_mat(rng, 3, 3);
    m.at(1, 2) = Rat(7, 3);
    std::stringstream ss;
    write_matrix(ss, m);
    CHECK(read_matrix(ss) == m);

    RatMat rect = random_mat(rng, 2, 4);
    std::stringstream s2;
    write_matrix(s2, rect);
    CHECK(read_matrix(s2) == rect);
}
