#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "steiner/hypermatrix.hpp"
#include "steiner/matrix.hpp"
#include "steiner/tree.hpp"

namespace steiner {

// H-eigenpair candidate: A x^{k-1} = lambda x^{[k-1]} entrywise, with x
// normalized in the k-norm. Floats live only here.
struct EigenPair {
    double lambda = 0;
    std::vector<double> x;
    double residual = 0;  // max-norm of A x^{k-1} - lambda x^{[k-1]}
    int iterations = 0;
    double shift = 0;
};

// Closed-form spectrum of the order-k Steiner hypermatrix of the one-edge
// tree: lambda_j = (1 + e^{2 pi i j/(k-1)})^{k-1} - 1 for j = 0..k-2 (all
// real), plus -1 with multiplicity k-1.
std::vector<std::complex<double>> k2_closed_eigenvalues(int k);

struct K2Census {
    int k = 0;
    std::vector<std::complex<double>> lambdas;  // the k-1 closed-form values
    int minus_one_multiplicity = 0;
    int positives = 0;  // sign census over real parts, including the -1s
    int negatives = 0;
    int zeros = 0;
    int sign_product = 0;  // 0 when degenerate
    bool degenerate = false;
};

K2Census k2_sign_census(int k, double tol = 1e-9);

// A k-form with the reflection (2/n)J - I composed into a subset of modes.
// eval is lazy; realize() produces the explicit (generally non-symmetric)
// hypermatrix, which must agree on evaluations.
class ReflectedForm {
public:
    ReflectedForm(Hypermatrix base, std::vector<int> mask);

    const Hypermatrix& base() const { return base_; }
    const std::vector<int>& mask() const { return mask_; }
    const RatMat& reflection() const { return reflection_; }

    Rat eval(const std::vector<RatVec>& xs) const;
    Hypermatrix realize() const;

private:
    Hypermatrix base_;
    std::vector<int> mask_;  // 1-based modes composed with the reflection
    RatMat reflection_;
};

ReflectedForm reflected_form(const Hypermatrix& m, const std::vector<int>& mask);

struct DefiniteReport {
    std::vector<Rat> d_leading_minors;
    bool d_positive_definite = false;
    Rat det_c;
    Rat det_m;          // det(C)/det(A)
    int sign_det_m = 0;
    bool sign_matches_parity = false;  // sign == (-1)^(n-1)
};

// k = 2 chain: D = MA + AM positive definite by exact leading minors, and
// the sign of det(M) derived through det(C).
DefiniteReport definite_check_k2(const Tree& t);

// Multistart shifted fixed-point iteration for H-eigenpairs,
// x <- normalize( (A x^{k-1} + alpha x^{[k-1]})^{[1/(k-1)]} ),
// with the shift doubled whenever the Rayleigh quotient decreases.
// Alternate starts run on the negated tensor to reach low eigenvalues.
// Only pairs with residual < tol are returned; no completeness claim.
std::vector<EigenPair> h_eigen_search(const Hypermatrix& a, int starts, uint64_t seed,
                                      double tol = 1e-10, int max_iter = 2000,
                                      const std::vector<std::vector<double>>& extra_starts = {},
                                      double dedup_radius = 1e-8);

struct QuarticReport {
    int trials = 0;
    bool identity_all_exact = true;  // (C1+C3)(x,..) == 2M(x_par,..) - 2M(x_perp,..)
    bool all_positive = true;
    bool has_min = false;
    Rat min_value;
};

// Exact sampling check that C1 + C3 is a positive definite quartic form.
QuarticReport quartic_positivity_check(const Tree& t, int trials, uint64_t seed);

}  // namespace steiner
