#pragma once

#include <cstdint>
#include <vector>

#include "steiner/hypermatrix.hpp"
#include "steiner/rational.hpp"
#include "steiner/tree.hpp"

namespace steiner {

// Per-edge decomposition of the diagonal k-form: with alpha_e = c . a_e and
// C = sum of c, the form equals the sum over edges of
// C^k - alpha_e^k - (C - alpha_e)^k.
struct EdgeSumReport {
    Rat c_total;              // C
    std::vector<Rat> alphas;  // per edge, indexed by edge_index - 1
    std::vector<Rat> terms;
    Rat total;
};

EdgeSumReport edge_sum_form(const Tree& t, int k, const RatVec& c);

// -2 * sum_e (a'_e . c)^k for even k and c with coordinate sum 0.
// Rejects vectors with nonzero coordinate sum.
Rat diagonal_form_even(const Tree& t, int k, const RatVec& c);

// Direct evaluation of the diagonal k-form for odd k on the zero-sum
// hyperplane; the value is always exactly 0 and callers assert it.
Rat odd_k_vanishing(const Tree& t, int k, const RatVec& c, size_t cap = kDefaultEntryCap);

struct CndReport {
    int trials = 0;
    bool has_max = false;
    Rat max_value;          // largest diagonal-form value seen (still < 0)
    bool all_negative = true;
    // per sampled c, some edge has alpha_e != 0 (the degree argument)
    bool certificate_all = true;
};

// Samples random nonzero rational c with zero coordinate sum and evaluates
// the even-k diagonal form; all values must be strictly negative.
CndReport cnd_witness_search(const Tree& t, int k, int trials, uint64_t seed);

// The tree-independent hypermatrix of the near-diagonalization: entry at i
// is (-1)^(t-1) when the coordinates all lie in {w, n} for a single w < n
// appearing t times with 1 <= t <= k-1; 0 otherwise.
Hypermatrix u_hypermatrix(int n, int k);

// u_hypermatrix minus twice the padded identity (the even-k target).
Hypermatrix near_diagonal_target(int n, int k);

struct NearDiagonalReport {
    Rat lhs;  // M(x_1,...,x_k)
    Rat rhs;  // target(Z x_1,..., Z x_k)
    bool equal = false;
    bool even_branch = false;
};

// Checks M(x_1,...,x_k) against the transformed target with inputs Z x_i;
// even k uses u - 2*(padded identity), odd k uses u alone.
NearDiagonalReport near_diagonal_check(const Tree& t, int k,
                                       const std::vector<RatVec>& xs);

struct PsdConeReport {
    bool form_nonneg = false;    // M(c,...,c) >= 0
    bool norm_condition = false; // sum_e alpha^k + sum_e (1-alpha)^k <= n-1
    bool boundary = false;       // norm sum equals n-1 exactly
    Rat form_value;
    Rat norm_sum;
};

// Membership test for the positive-semidefinite cone slice at coordinate
// sum 1 (even k). The two booleans agree by the edge-sum identity.
PsdConeReport psd_cone_membership(const Tree& t, int k, const RatVec& c,
                                  size_t cap = kDefaultEntryCap);

}  // namespace steiner
