#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "steiner/hypermatrix.hpp"
#include "steiner/matrix.hpp"
#include "steiner/rational.hpp"

namespace steiner {

inline constexpr size_t kDefaultMacaulayCap = 2000;

// n homogeneous forms of a common degree in n variables, stored densely over
// a shared monomial list (exponent vectors in lexicographic descending
// order, so for two variables the first coefficient is the pure power of
// the first variable).
struct PolySystem {
    int nvars = 0;
    int degree = 0;
    std::vector<std::vector<int>> monomials;
    std::vector<std::vector<Rat>> forms;  // forms[a][monomial index]
};

// All exponent vectors of the given total degree, lexicographically
// descending.
std::vector<std::vector<int>> monomials_of_degree(int nvars, int degree);

// Number of degree-d monomials in n variables, C(d + n - 1, n - 1).
Int monomial_count(int nvars, int degree);

// The gradient system of the k-form: form a is the slice map component
// x -> (A x^{k-1})_a expanded symbolically, i.e. the coefficient of x^m is
// the multinomial weight of m times the entry at any tuple realizing m.
PolySystem gradient_system(const Hypermatrix& a);

// Exact evaluation of one form; cross-checks against eval_gradient.
Rat evaluate_form(const PolySystem& sys, int a, const RatVec& x);

// Multiply form `a` by c (used by scaling-law tests).
PolySystem scale_form(const PolySystem& sys, int a, const Rat& c);

// Substitute x -> B x into every form. For det(B) = 1 the resultant is
// unchanged (it picks up det(B)^(degree^nvars) in general).
PolySystem substitute(const PolySystem& sys, const RatMat& b);

// Classical Sylvester resultant of two binary forms given by coefficient
// vectors in descending powers of the first variable. Throws on a zero
// form.
Rat sylvester_resultant(const std::vector<Rat>& f, const std::vector<Rat>& g);
Rat sylvester_resultant(const PolySystem& sys);  // nvars == 2

// The Macaulay matrix at total degree d = n(m-1) + 1: rows and columns are
// indexed by the degree-d monomials; the row of a monomial g is the
// expansion of (g / x_i^m) * f_i, where i is the first variable with
// exponent >= m in g. The minor keeps the rows and columns of monomials
// divisible by x_i^m for at least two i.
struct MacaulaySystem {
    int nvars = 0;
    int form_degree = 0;
    int total_degree = 0;
    std::vector<std::vector<int>> monomials;
    std::vector<int> row_form;
    std::vector<int> nonreduced;
    RatMat matrix;
};

MacaulaySystem build_macaulay(const PolySystem& sys, size_t cap = kDefaultMacaulayCap);

// Macaulay's quotient det(full)/det(minor). When the minor is singular the
// system is retried under a deterministic unimodular change of variables
// (which leaves the resultant unchanged); persistent degeneracy throws.
Rat macaulay_resultant(const PolySystem& sys, uint64_t seed = 0,
                       int max_retries = 8, size_t cap = kDefaultMacaulayCap);

// Symmetric hyperdeterminant: the resultant of the gradient system, with
// the Sylvester fast path at dimension 2. Dimension 1 returns the lone
// gradient coefficient.
Rat hyperdet(const Hypermatrix& a, uint64_t seed = 0,
             size_t cap = kDefaultMacaulayCap);

}  // namespace steiner
