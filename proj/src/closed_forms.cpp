#include "steiner/closed_forms.hpp"

#include <stdexcept>

#include "steiner/rng.hpp"
#include "steiner/tree_bases.hpp"

namespace steiner {

EdgeSumReport edge_sum_form(const Tree& t, int k, const RatVec& c) {
    int n = t.n();
    if (n < 2) throw std::invalid_argument("edge_sum_form: requires n >= 2");
    if (k < 2) throw std::invalid_argument("edge_sum_form: requires k >= 2");
    if (static_cast<int>(c.size()) != n)
        throw std::invalid_argument("edge_sum_form: vector length mismatch");
    EdgeSumReport rep;
    rep.c_total = vec_sum(c);
    Rat ck = rat_pow(rep.c_total, k);
    rep.total = 0;
    for (const EdgeCut& cut : edge_cuts(t)) {
        Rat alpha = dot(c, cut.a_vec);
        Rat term = ck - rat_pow(alpha, k) - rat_pow(rep.c_total - alpha, k);
        rep.total += term;
        rep.alphas.push_back(std::move(alpha));
        rep.terms.push_back(std::move(term));
    }
    return rep;
}

Rat diagonal_form_even(const Tree& t, int k, const RatVec& c) {
    int n = t.n();
    if (n < 2) throw std::invalid_argument("diagonal_form_even: requires n >= 2");
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("diagonal_form_even: k must be even and >= 2");
    if (static_cast<int>(c.size()) != n)
        throw std::invalid_argument("diagonal_form_even: vector length mismatch");
    if (vec_sum(c) != 0)
        throw std::invalid_argument("diagonal_form_even: coordinate sum must be 0");
    Rat s = 0;
    for (const EdgeCut& cut : edge_cuts(t)) {
        s += rat_pow(dot(c, cut.a_centered), k);
    }
    return Rat(-2) * s;
}

Rat odd_k_vanishing(const Tree& t, int k, const RatVec& c, size_t cap) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("odd_k_vanishing: k must be odd and >= 3");
    if (vec_sum(c) != 0)
        throw std::invalid_argument("odd_k_vanishing: coordinate sum must be 0");
    Hypermatrix m = steiner_hypermatrix(t, k, cap);
    return eval_kform(m, c);
}

CndReport cnd_witness_search(const Tree& t, int k, int trials, uint64_t seed) {
    if (t.n() < 2) throw std::invalid_argument("cnd_witness_search: requires n >= 2");
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("cnd_witness_search: k must be even");
    CndReport rep;
    rep.trials = trials;
    std::vector<EdgeCut> cuts = edge_cuts(t);
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(split_seed(seed, static_cast<uint64_t>(trial)));
        RatVec c = rng.zero_sum_vec(static_cast<size_t>(t.n()));
        Rat value = diagonal_form_even(t, k, c);
        if (!rep.has_max || value > rep.max_value) {
            rep.max_value = value;
            rep.has_max = true;
        }
        if (value >= 0) rep.all_negative = false;
        bool some_alpha_nonzero = false;
        for (const EdgeCut& cut : cuts) {
            if (dot(c, cut.a_vec) != 0) {
                some_alpha_nonzero = true;
                break;
            }
        }
        if (!some_alpha_nonzero) rep.certificate_all = false;
    }
    return rep;
}

Hypermatrix u_hypermatrix(int n, int k) {
    if (n < 2) throw std::invalid_argument("u_hypermatrix: requires n >= 2");
    if (k < 2) throw std::invalid_argument("u_hypermatrix: requires k >= 2");
    Hypermatrix u(k, n);
    std::vector<int> digits(k, 0);  // 0-based vertex labels
    for (size_t f = 0; f < u.size(); ++f) {
        int w = -1;
        int t = 0;
        bool supported = true;
        for (int d : digits) {
            if (d == n - 1) continue;  // the root coordinate
            if (w < 0) w = d;
            if (d != w) {
                supported = false;
                break;
            }
            t++;
        }
        if (supported && t >= 1 && t <= k - 1) {
            u.flat_at(f) = (t % 2 == 1) ? 1 : -1;
        }
        for (int p = k - 1; p >= 0; --p) {
            if (++digits[p] < n) break;
            digits[p] = 0;
        }
    }
    return u;
}

Hypermatrix near_diagonal_target(int n, int k) {
    Hypermatrix w = u_hypermatrix(n, k);
    Hypermatrix pad = identity_hypermatrix(n, k, /*pad_zero_last=*/true);
    for (size_t i = 0; i < w.size(); ++i) w.flat_at(i) -= Rat(2) * pad.flat_at(i);
    return w;
}

NearDiagonalReport near_diagonal_check(const Tree& t, int k,
                                       const std::vector<RatVec>& xs) {
    int n = t.n();
    if (n < 2) throw std::invalid_argument("near_diagonal_check: requires n >= 2");
    NearDiagonalReport rep;
    rep.even_branch = (k % 2 == 0);
    Hypermatrix m = steiner_hypermatrix(t, k);
    rep.lhs = eval_multilinear(m, xs);
    Hypermatrix target = rep.even_branch ? near_diagonal_target(n, k) : u_hypermatrix(n, k);
    RatMat z = zeta_matrix(t);
    std::vector<RatVec> zxs;
    zxs.reserve(xs.size());
    for (const RatVec& x : xs) zxs.push_back(mat_vec(z, x));
    rep.rhs = eval_multilinear(target, zxs);
    rep.equal = (rep.lhs == rep.rhs);
    return rep;
}

PsdConeReport psd_cone_membership(const Tree& t, int k, const RatVec& c, size_t cap) {
    int n = t.n();
    if (n < 2) throw std::invalid_argument("psd_cone_membership: requires n >= 2");
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("psd_cone_membership: k must be even");
    if (vec_sum(c) != 1)
        throw std::invalid_argument("psd_cone_membership: coordinate sum must be 1");
    PsdConeReport rep;
    // the norm side uses the uncentered indicators: with sum(c) = 1 the
    // edge-sum identity reads M(c,...,c) = (n-1) - sum alpha^k - sum (1-alpha)^k
    rep.norm_sum = 0;
    for (const EdgeCut& cut : edge_cuts(t)) {
        Rat alpha = dot(c, cut.a_vec);
        rep.norm_sum += rat_pow(alpha, k) + rat_pow(Rat(1) - alpha, k);
    }
    Rat bound(n - 1);
    rep.norm_condition = rep.norm_sum <= bound;
    rep.boundary = rep.norm_sum == bound;
    // evaluate the form directly when the dense hypermatrix fits
    bool dense_ok = true;
    double entries = 1;
    for (int i = 0; i < k; ++i) {
        entries *= n;
        if (entries > static_cast<double>(cap)) {
            dense_ok = false;
            break;
        }
    }
    if (dense_ok) {
        Hypermatrix m = steiner_hypermatrix(t, k, cap);
        rep.form_value = eval_kform(m, c);
    } else {
        rep.form_value = edge_sum_form(t, k, c).total;
    }
    rep.form_nonneg = rep.form_value >= 0;
    return rep;
}

}  // namespace steiner
