#pragma once

#include "steiner/matrix.hpp"
#include "steiner/tree.hpp"

namespace steiner {

// The tree-derived change-of-basis matrices. Everything is exact; all
// constructions follow the global convention that the root is vertex n and
// A(e_j) is the root-side component.

// (n-1) x n; row j is the centered indicator a_centered of edge cut j.
RatMat p_matrix(const Tree& t);

// p_matrix with an appended all-ones row; square and invertible.
RatMat p_prime_matrix(const Tree& t);

// Closed-form inverse of p_prime_matrix: column j < n is the incidence
// column of edge {j, parent(j)} oriented towards the root side (-1 at row j,
// +1 at row parent(j)); last column is ones/n. Verified P' * X = I in tests.
RatMat p_prime_inverse(const Tree& t);

// Zeta matrix of the tree poset rooted at n: Z[x][y] = 1 iff x lies on the
// path from y to the root (ancestor-or-self).
RatMat zeta_matrix(const Tree& t);

// Mobius matrix: inverse of zeta. 1 on the diagonal, -1 at (x, y) when x is
// the parent of y, 0 otherwise; satisfies Z * mobius = I exactly.
RatMat mobius_matrix(const Tree& t);

// A = (2/n) J - I: reflection fixing the all-ones vector and negating its
// orthogonal complement. Involutive, symmetric, orthogonal.
RatMat reflection_matrix(int n);

}  // namespace steiner
