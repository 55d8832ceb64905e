#include "steiner/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "steiner/rng.hpp"
#include "steiner/tree_bases.hpp"

namespace steiner {

std::vector<std::complex<double>> k2_closed_eigenvalues(int k) {
    if (k < 2) throw std::invalid_argument("k2_closed_eigenvalues: k must be >= 2");
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<size_t>(k - 1));
    for (int j = 0; j <= k - 2; ++j) {
        double theta = 2.0 * M_PI * j / (k - 1);
        std::complex<double> base(1.0 + std::cos(theta), std::sin(theta));
        std::complex<double> lam(1.0, 0.0);
        for (int e = 0; e < k - 1; ++e) lam *= base;
        out.push_back(lam - 1.0);
    }
    return out;
}

K2Census k2_sign_census(int k, double tol) {
    K2Census census;
    census.k = k;
    census.lambdas = k2_closed_eigenvalues(k);
    census.minus_one_multiplicity = k - 1;
    census.negatives = k - 1;  // the -1 block
    for (const auto& lam : census.lambdas) {
        if (std::abs(lam) < tol) {
            census.zeros++;
        } else if (lam.real() > 0) {
            census.positives++;
        } else {
            census.negatives++;
        }
    }
    census.degenerate = census.zeros > 0;
    census.sign_product = census.degenerate ? 0 : (census.negatives % 2 ? -1 : 1);
    return census;
}

ReflectedForm::ReflectedForm(Hypermatrix base, std::vector<int> mask)
    : base_(std::move(base)), mask_(std::move(mask)), reflection_(reflection_matrix(base_.dim())) {
    std::sort(mask_.begin(), mask_.end());
    for (int m : mask_) {
        if (m < 1 || m > base_.order())
            throw std::invalid_argument("reflected_form: mode out of range");
    }
    if (std::adjacent_find(mask_.begin(), mask_.end()) != mask_.end())
        throw std::invalid_argument("reflected_form: repeated mode");
}

Rat ReflectedForm::eval(const std::vector<RatVec>& xs) const {
    std::vector<RatVec> ys = xs;
    for (int m : mask_) ys.at(static_cast<size_t>(m - 1)) = mat_vec(reflection_, ys.at(static_cast<size_t>(m - 1)));
    return eval_multilinear(base_, ys);
}

Hypermatrix ReflectedForm::realize() const {
    Hypermatrix out = base_;
    for (int m : mask_) out = mode_apply(out, reflection_, m);
    return out;
}

ReflectedForm reflected_form(const Hypermatrix& m, const std::vector<int>& mask) {
    return ReflectedForm(m, mask);
}

DefiniteReport definite_check_k2(const Tree& t) {
    int n = t.n();
    if (n < 2) throw std::invalid_argument("definite_check_k2: requires n >= 2");
    RatMat m(n, n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            Rat d(steiner_distance(t, {u, v}));
            m.at(u - 1, v - 1) = d;
            m.at(v - 1, u - 1) = d;
        }
    RatMat a = reflection_matrix(n);
    RatMat c = mat_mul(m, a);
    RatMat d = mat_add(c, transpose(c));  // MA + AM

    DefiniteReport rep;
    rep.d_leading_minors = leading_principal_minors(d);
    rep.d_positive_definite = true;
    for (const Rat& minor : rep.d_leading_minors) {
        if (minor <= 0) rep.d_positive_definite = false;
    }
    rep.det_c = det(c);
    Rat det_a = det(a);  // (-1)^(n-1)
    rep.det_m = rep.det_c / det_a;
    rep.sign_det_m = rep.det_m > 0 ? 1 : (rep.det_m < 0 ? -1 : 0);
    int parity = (n % 2 == 1) ? 1 : -1;
    rep.sign_matches_parity = rep.sign_det_m == parity;
    return rep;
}

namespace {

struct DoubleTensor {
    int k = 0, n = 0;
    std::vector<double> a;

    std::vector<double> gradient(const std::vector<double>& x) const {
        std::vector<double> buf = a;
        size_t rows = buf.size();
        for (int t = 0; t < k - 1; ++t) {
            rows /= static_cast<size_t>(n);
            std::vector<double> next(rows, 0.0);
            for (size_t r = 0; r < rows; ++r) {
                double s = 0;
                const double* row = &buf[r * static_cast<size_t>(n)];
                for (int i = 0; i < n; ++i) s += row[i] * x[static_cast<size_t>(i)];
                next[r] = s;
            }
            buf = std::move(next);
        }
        return buf;
    }
};

double knorm(const std::vector<double>& x, int k) {
    double s = 0;
    for (double v : x) s += std::pow(std::abs(v), k);
    return std::pow(s, 1.0 / k);
}

void normalize_k(std::vector<double>& x, int k) {
    double nrm = knorm(x, k);
    if (nrm > 0)
        for (double& v : x) v /= nrm;
}

double signed_root(double y, int r) {  // r odd
    return y < 0 ? -std::pow(-y, 1.0 / r) : std::pow(y, 1.0 / r);
}

struct IterationResult {
    bool converged = false;
    EigenPair pair;
};

IterationResult run_start(const DoubleTensor& tensor, std::vector<double> x,
                          double shift0, double tol, int max_iter) {
    int k = tensor.k, n = tensor.n;
    if (knorm(x, k) < 1e-12) return {};
    normalize_k(x, k);
    double shift = shift0;
    auto rayleigh = [&](const std::vector<double>& v, const std::vector<double>& g) {
        double s = 0;
        for (int i = 0; i < n; ++i) s += v[static_cast<size_t>(i)] * g[static_cast<size_t>(i)];
        return s;  // ||v||_k = 1
    };
    std::vector<double> g = tensor.gradient(x);
    double lambda = rayleigh(x, g);
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        std::vector<double> y(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            double xi = x[static_cast<size_t>(i)];
            double xpow = std::pow(std::abs(xi), k - 1) * (xi < 0 ? -1.0 : 1.0);
            y[static_cast<size_t>(i)] = g[static_cast<size_t>(i)] + shift * xpow;
        }
        std::vector<double> xn(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) xn[static_cast<size_t>(i)] = signed_root(y[static_cast<size_t>(i)], k - 1);
        normalize_k(xn, k);
        std::vector<double> gn = tensor.gradient(xn);
        double ln = rayleigh(xn, gn);
        if (ln < lambda - 1e-12 * (1.0 + std::abs(lambda))) {
            shift *= 2;  // monotonicity violated; escalate, keep the old iterate
            if (!std::isfinite(shift) || shift > 1e30) break;
            continue;
        }
        double step = 0;
        for (int i = 0; i < n; ++i)
            step = std::max(step, std::abs(xn[static_cast<size_t>(i)] - x[static_cast<size_t>(i)]));
        x = std::move(xn);
        g = std::move(gn);
        bool settled = std::abs(ln - lambda) < 1e-15 * (1.0 + std::abs(ln)) && step < 1e-13;
        lambda = ln;
        if (settled) break;
    }
    double residual = 0;
    for (int i = 0; i < n; ++i) {
        double xi = x[static_cast<size_t>(i)];
        double xpow = std::pow(std::abs(xi), k - 1) * (xi < 0 ? -1.0 : 1.0);
        residual = std::max(residual, std::abs(g[static_cast<size_t>(i)] - lambda * xpow));
    }
    IterationResult res;
    res.pair.lambda = lambda;
    res.pair.x = std::move(x);
    res.pair.residual = residual;
    res.pair.iterations = iter;
    res.pair.shift = shift;
    res.converged = residual < tol;
    return res;
}

void canonicalize_sign(std::vector<double>& x) {
    for (double v : x) {
        if (std::abs(v) > 1e-9) {
            if (v < 0)
                for (double& w : x) w = -w;
            return;
        }
    }
}

}  // namespace

std::vector<EigenPair> h_eigen_search(const Hypermatrix& a, int starts, uint64_t seed,
                                      double tol, int max_iter,
                                      const std::vector<std::vector<double>>& extra_starts,
                                      double dedup_radius) {
    int k = a.order(), n = a.dim();
    if (k % 2 != 0 || k < 2)
        throw std::invalid_argument("h_eigen_search: order must be even");
    DoubleTensor pos;
    pos.k = k;
    pos.n = n;
    pos.a.resize(a.size());
    double abs_sum = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        pos.a[i] = a.flat_at(i).get_d();
        abs_sum += std::abs(pos.a[i]);
    }
    DoubleTensor neg = pos;
    for (double& v : neg.a) v = -v;
    double shift0 = 1.0 + abs_sum;

    std::vector<EigenPair> found;
    auto attempt = [&](const std::vector<double>& x0, bool negated) {
        IterationResult res = run_start(negated ? neg : pos, x0, shift0, tol, max_iter);
        if (!res.converged) return;
        if (negated) res.pair.lambda = -res.pair.lambda;
        // residual is invariant under negation and sign flip for even k
        canonicalize_sign(res.pair.x);
        found.push_back(std::move(res.pair));
    };

    for (const auto& x0 : extra_starts) {
        if (static_cast<int>(x0.size()) != n)
            throw std::invalid_argument("h_eigen_search: bad extra start length");
        attempt(x0, false);
        attempt(x0, true);
    }
    for (int s = 0; s < starts; ++s) {
        std::mt19937_64 gen(split_seed(seed, static_cast<uint64_t>(s)));
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<double> x0(static_cast<size_t>(n));
        for (double& v : x0) v = gauss(gen);
        attempt(x0, s % 2 == 1);
    }

    std::sort(found.begin(), found.end(), [](const EigenPair& p, const EigenPair& q) {
        if (p.lambda != q.lambda) return p.lambda < q.lambda;
        return p.x < q.x;
    });
    std::vector<EigenPair> dedup;
    for (EigenPair& p : found) {
        bool fresh = true;
        for (const EigenPair& q : dedup) {
            if (std::abs(p.lambda - q.lambda) > dedup_radius) continue;
            double dx = 0;
            for (int i = 0; i < n; ++i)
                dx = std::max(dx, std::abs(p.x[static_cast<size_t>(i)] - q.x[static_cast<size_t>(i)]));
            if (dx < dedup_radius) {
                fresh = false;
                break;
            }
        }
        if (fresh) dedup.push_back(std::move(p));
    }
    return dedup;
}

QuarticReport quartic_positivity_check(const Tree& t, int trials, uint64_t seed) {
    int n = t.n();
    if (n < 2) throw std::invalid_argument("quartic_positivity_check: requires n >= 2");
    Hypermatrix m = steiner_hypermatrix(t, 4);
    RatMat a = reflection_matrix(n);
    QuarticReport rep;
    rep.trials = trials;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(split_seed(seed, static_cast<uint64_t>(trial)));
        RatVec x = rng.nonzero_rat_vec(static_cast<size_t>(n));
        RatVec ax = mat_vec(a, x);
        // C1(x,x,x,x) = M(x,x,x,Ax), C3(x,x,x,x) = M(x,Ax,Ax,Ax)
        Rat c1 = dot(ax, eval_gradient(m, x));
        Rat c3 = dot(x, eval_gradient(m, ax));
        Rat lhs = c1 + c3;
        Rat mean = vec_sum(x) / Rat(n);
        RatVec x_par(static_cast<size_t>(n), mean);
        RatVec x_perp = vec_sub(x, x_par);
        Rat rhs = Rat(2) * (dot(x_par, eval_gradient(m, x_par)) -
                            dot(x_perp, eval_gradient(m, x_perp)));
        if (lhs != rhs) rep.identity_all_exact = false;
        if (lhs <= 0) rep.all_positive = false;
        if (!rep.has_min || lhs < rep.min_value) {
            rep.min_value = lhs;
            rep.has_min = true;
        }
    }
    return rep;
}

}  // namespace steiner
