#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "steiner/matrix.hpp"
#include "steiner/rational.hpp"
#include "steiner/tree.hpp"

namespace steiner {

inline constexpr size_t kDefaultEntryCap = 10'000'000;

// Dense order-k, dimension-n array of exact rationals, row-major in
// lexicographic index order. Construction paths that promise full symmetry
// validate it; general (non-symmetric) contents are allowed, which the
// reflected forms in the spectra module rely on.
class Hypermatrix {
public:
    Hypermatrix(int order, int dim, size_t cap = kDefaultEntryCap);

    int order() const { return k_; }
    int dim() const { return n_; }
    size_t size() const { return a_.size(); }

    // idx: k vertex labels in 1..n
    Rat& at(const std::vector<int>& idx) { return a_[flat(idx)]; }
    const Rat& at(const std::vector<int>& idx) const { return a_[flat(idx)]; }

    Rat& flat_at(size_t i) { return a_[i]; }
    const Rat& flat_at(size_t i) const { return a_[i]; }

    size_t flat(const std::vector<int>& idx) const;

    bool operator==(const Hypermatrix& o) const {
        return k_ == o.k_ && n_ == o.n_ && a_ == o.a_;
    }

private:
    int k_ = 0, n_ = 0;
    std::vector<Rat> a_;
};

// Entry at i equals the Steiner distance of the coordinates of i.
Hypermatrix steiner_hypermatrix(const Tree& t, int k, size_t cap = kDefaultEntryCap);

// Ones exactly on the diagonal (i,...,i); with pad_zero_last, only for
// i < n, leaving an all-zero last slice.
Hypermatrix identity_hypermatrix(int n, int k, bool pad_zero_last = false);

// Direct summation over all n^k index tuples (the reference path).
Rat eval_multilinear(const Hypermatrix& a, const std::vector<RatVec>& xs);
// Same value via k successive single-mode contractions; must agree exactly.
Rat eval_multilinear_contracted(const Hypermatrix& a, const std::vector<RatVec>& xs);
// Diagonal k-form a(x,...,x).
Rat eval_kform(const Hypermatrix& a, const RatVec& x);

// Component a of the slice map x -> A x^{k-1} (no scalar k).
RatVec eval_gradient(const Hypermatrix& a, const RatVec& x);

// Contract a single mode (1-based) with a square matrix p:
// out[..., j, ...] = sum_i a[..., i, ...] * p(i, j).
Hypermatrix mode_apply(const Hypermatrix& a, const RatMat& p, int mode);

// Result r satisfies r(x_1,...,x_k) = a(P x_1,..., P x_k) for all inputs;
// p has a.dim() rows and may change the dimension.
Hypermatrix mode_transform(const Hypermatrix& a, const RatMat& p);

// Thomas polarization: (1/k!) * sum over S subseteq [k] of (-1)^{k-|S|}
// applied to the diagonal form at sum_{i in S} x_i. Equals eval_multilinear
// exactly for symmetric a.
Rat polarize(const Hypermatrix& a, const std::vector<RatVec>& xs);

bool is_symmetric(const Hypermatrix& a);

// Text format: header "k n", then the n^k entries in lexicographic index
// order as exact rationals.
void write_hypermatrix(std::ostream& os, const Hypermatrix& a);
Hypermatrix read_hypermatrix(std::istream& is, bool validate_symmetry = true,
                             size_t cap = kDefaultEntryCap);

}  // namespace steiner
