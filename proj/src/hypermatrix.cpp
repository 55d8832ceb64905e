#include "steiner/hypermatrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace steiner {

namespace {

size_t checked_size(int k, int n, size_t cap) {
    if (k < 1) throw std::invalid_argument("hypermatrix: order must be >= 1");
    if (n < 1) throw std::invalid_argument("hypermatrix: dimension must be >= 1");
    size_t s = 1;
    for (int t = 0; t < k; ++t) {
        if (s > cap / static_cast<size_t>(n)) {
            throw std::length_error("hypermatrix: " + std::to_string(n) + "^" +
                                    std::to_string(k) + " entries exceed cap " +
                                    std::to_string(cap));
        }
        s *= static_cast<size_t>(n);
    }
    return s;
}

}  // namespace

Hypermatrix::Hypermatrix(int order, int dim, size_t cap)
    : k_(order), n_(dim), a_(checked_size(order, dim, cap), Rat(0)) {}

size_t Hypermatrix::flat(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != k_)
        throw std::invalid_argument("hypermatrix index: wrong arity");
    size_t f = 0;
    for (int t = 0; t < k_; ++t) {
        int i = idx[t];
        if (i < 1 || i > n_)
            throw std::out_of_range("hypermatrix index " + std::to_string(i) +
                                    " out of range 1.." + std::to_string(n_));
        f = f * n_ + static_cast<size_t>(i - 1);
    }
    return f;
}

Hypermatrix steiner_hypermatrix(const Tree& t, int k, size_t cap) {
    if (k < 2) throw std::invalid_argument("steiner_hypermatrix: order must be >= 2");
    int n = t.n();
    Hypermatrix m(k, n, cap);

    // S depends only on the set of distinct coordinates, so memoize on the
    // flat index of the sorted tuple.
    std::unordered_map<size_t, int> memo;
    std::vector<int> digits(k, 0), sorted(k), verts;
    verts.reserve(k);
    const size_t total = m.size();
    for (size_t f = 0; f < total; ++f) {
        std::copy(digits.begin(), digits.end(), sorted.begin());
        std::sort(sorted.begin(), sorted.end());
        size_t key = 0;
        for (int d : sorted) key = key * n + static_cast<size_t>(d);
        auto it = memo.find(key);
        int s;
        if (it != memo.end()) {
            s = it->second;
        } else {
            verts.clear();
            for (int d : sorted) verts.push_back(d + 1);
            s = steiner_distance(t, verts);
            memo.emplace(key, s);
        }
        m.flat_at(f) = s;
        for (int p = k - 1; p >= 0; --p) {
            if (++digits[p] < n) break;
            digits[p] = 0;
        }
    }
    return m;
}

Hypermatrix identity_hypermatrix(int n, int k, bool pad_zero_last) {
    Hypermatrix m(k, n);
    size_t stride = 0;  // flat step between consecutive diagonal entries
    size_t step = 1;
    for (int t = 0; t < k; ++t) {
        stride += step;
        step *= static_cast<size_t>(n);
    }
    int top = pad_zero_last ? n - 1 : n;
    for (int i = 0; i < top; ++i) m.flat_at(static_cast<size_t>(i) * stride) = 1;
    return m;
}

namespace {

void check_inputs(const Hypermatrix& a, const std::vector<RatVec>& xs) {
    if (static_cast<int>(xs.size()) != a.order())
        throw std::invalid_argument("eval: expected " + std::to_string(a.order()) +
                                    " vectors");
    for (const RatVec& x : xs) {
        if (static_cast<int>(x.size()) != a.dim())
            throw std::invalid_argument("eval: vector length mismatch");
    }
}

// Depth-first accumulation of sum over tuples of entry * prefix product,
// skipping subtrees with a zero prefix.
void eval_rec(const Hypermatrix& a, const RatVec* const* xs, int t, size_t offset,
              const Rat& prefix, Rat& sum) {
    int k = a.order(), n = a.dim();
    if (t == k) {
        sum += a.flat_at(offset) * prefix;
        return;
    }
    const RatVec& x = *xs[t];
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        eval_rec(a, xs, t + 1, offset * n + i, prefix * x[i], sum);
    }
}

}  // namespace

Rat eval_multilinear(const Hypermatrix& a, const std::vector<RatVec>& xs) {
    check_inputs(a, xs);
    std::vector<const RatVec*> ptrs(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) ptrs[i] = &xs[i];
    Rat sum = 0;
    eval_rec(a, ptrs.data(), 0, 0, Rat(1), sum);
    return sum;
}

Rat eval_kform(const Hypermatrix& a, const RatVec& x) {
    if (static_cast<int>(x.size()) != a.dim())
        throw std::invalid_argument("eval: vector length mismatch");
    std::vector<const RatVec*> ptrs(a.order(), &x);
    Rat sum = 0;
    eval_rec(a, ptrs.data(), 0, 0, Rat(1), sum);
    return sum;
}

namespace {

// Contract the last mode of a flat buffer of shape (rows, n) with x.
std::vector<Rat> contract_last(const std::vector<Rat>& data, size_t rows, int n,
                               const RatVec& x) {
    std::vector<Rat> out(rows, Rat(0));
    for (size_t r = 0; r < rows; ++r) {
        const Rat* row = &data[r * n];
        Rat s = 0;
        for (int i = 0; i < n; ++i) {
            if (x[i] == 0 || row[i] == 0) continue;
            s += row[i] * x[i];
        }
        out[r] = std::move(s);
    }
    return out;
}

}  // namespace

Rat eval_multilinear_contracted(const Hypermatrix& a, const std::vector<RatVec>& xs) {
    check_inputs(a, xs);
    int k = a.order(), n = a.dim();
    std::vector<Rat> buf(a.size());
    for (size_t i = 0; i < a.size(); ++i) buf[i] = a.flat_at(i);
    for (int t = k - 1; t >= 0; --t) {
        size_t rows = buf.size() / n;
        buf = contract_last(buf, rows, n, xs[t]);
    }
    return buf[0];
}

RatVec eval_gradient(const Hypermatrix& a, const RatVec& x) {
    if (static_cast<int>(x.size()) != a.dim())
        throw std::invalid_argument("eval_gradient: vector length mismatch");
    int k = a.order(), n = a.dim();
    std::vector<Rat> buf(a.size());
    for (size_t i = 0; i < a.size(); ++i) buf[i] = a.flat_at(i);
    for (int t = 0; t < k - 1; ++t) {
        size_t rows = buf.size() / n;
        buf = contract_last(buf, rows, n, x);
    }
    return buf;
}

Hypermatrix mode_apply(const Hypermatrix& a, const RatMat& p, int mode) {
    int k = a.order(), n = a.dim();
    if (mode < 1 || mode > k) throw std::invalid_argument("mode_apply: bad mode");
    if (p.rows() != n || p.cols() != n)
        throw std::invalid_argument("mode_apply: matrix must be n x n");
    size_t stride = 1;  // n^(k - mode), flat step of the chosen digit
    for (int t = mode; t < k; ++t) stride *= static_cast<size_t>(n);
    Hypermatrix out(k, n, a.size());
    size_t block = stride * static_cast<size_t>(n);
    for (size_t base = 0; base < a.size(); base += block) {
        for (size_t inner = 0; inner < stride; ++inner) {
            for (int j = 0; j < n; ++j) {
                Rat s = 0;
                for (int i = 0; i < n; ++i) {
                    const Rat& v = a.flat_at(base + static_cast<size_t>(i) * stride + inner);
                    if (v == 0 || p.at(i, j) == 0) continue;
                    s += v * p.at(i, j);
                }
                out.flat_at(base + static_cast<size_t>(j) * stride + inner) = std::move(s);
            }
        }
    }
    return out;
}

Hypermatrix mode_transform(const Hypermatrix& a, const RatMat& p) {
    int k = a.order(), n = a.dim();
    if (p.rows() != n)
        throw std::invalid_argument("mode_transform: matrix rows must equal dimension");
    int m = p.cols();
    // transform one mode per pass over a mixed-shape flat buffer
    std::vector<Rat> buf(a.size());
    for (size_t i = 0; i < a.size(); ++i) buf[i] = a.flat_at(i);
    std::vector<int> dims(k, n);
    for (int mode = 0; mode < k; ++mode) {
        size_t stride = 1;
        for (int t = mode + 1; t < k; ++t) stride *= static_cast<size_t>(dims[t]);
        size_t old_block = stride * static_cast<size_t>(n);
        size_t new_block = stride * static_cast<size_t>(m);
        size_t outer = buf.size() / old_block;
        std::vector<Rat> next(outer * new_block, Rat(0));
        for (size_t b = 0; b < outer; ++b) {
            for (size_t inner = 0; inner < stride; ++inner) {
                for (int j = 0; j < m; ++j) {
                    Rat s = 0;
                    for (int i = 0; i < n; ++i) {
                        const Rat& v = buf[b * old_block + static_cast<size_t>(i) * stride + inner];
                        if (v == 0 || p.at(i, j) == 0) continue;
                        s += v * p.at(i, j);
                    }
                    next[b * new_block + static_cast<size_t>(j) * stride + inner] = std::move(s);
                }
            }
        }
        buf = std::move(next);
        dims[mode] = m;
    }
    Hypermatrix out(k, m, buf.size() ? buf.size() : 1);
    for (size_t i = 0; i < buf.size(); ++i) out.flat_at(i) = std::move(buf[i]);
    return out;
}

Rat polarize(const Hypermatrix& a, const std::vector<RatVec>& xs) {
    check_inputs(a, xs);
    int k = a.order(), n = a.dim();
    Rat acc = 0;
    for (unsigned s = 0; s < (1u << k); ++s) {
        RatVec v = zero_vec(n);
        int bits = 0;
        for (int t = 0; t < k; ++t) {
            if (s & (1u << t)) {
                bits++;
                for (int i = 0; i < n; ++i) v[i] += xs[t][i];
            }
        }
        Rat term = eval_kform(a, v);
        if ((k - bits) % 2) acc -= term; else acc += term;
    }
    Int kfact;
    mpz_fac_ui(kfact.get_mpz_t(), static_cast<unsigned long>(k));
    return acc / Rat(kfact);
}

bool is_symmetric(const Hypermatrix& a) {
    int k = a.order(), n = a.dim();
    std::vector<int> digits(k, 0), sorted(k);
    for (size_t f = 0; f < a.size(); ++f) {
        std::copy(digits.begin(), digits.end(), sorted.begin());
        std::sort(sorted.begin(), sorted.end());
        size_t g = 0;
        for (int d : sorted) g = g * n + static_cast<size_t>(d);
        if (a.flat_at(f) != a.flat_at(g)) return false;
        for (int p = k - 1; p >= 0; --p) {
            if (++digits[p] < n) break;
            digits[p] = 0;
        }
    }
    return true;
}

void write_hypermatrix(std::ostream& os, const Hypermatrix& a) {
    os << a.order() << " " << a.dim() << "\n";
    for (size_t i = 0; i < a.size(); ++i) {
        os << rat_to_string(a.flat_at(i)) << "\n";
    }
}

Hypermatrix read_hypermatrix(std::istream& is, bool validate_symmetry, size_t cap) {
    int k = 0, n = 0;
    if (!(is >> k >> n)) throw std::invalid_argument("hypermatrix header: expected 'k n'");
    Hypermatrix a(k, n, cap);
    std::string tok;
    for (size_t i = 0; i < a.size(); ++i) {
        if (!(is >> tok)) throw std::invalid_argument("hypermatrix data: unexpected end");
        a.flat_at(i) = rat_from_string(tok);
    }
    if (validate_symmetry && !is_symmetric(a))
        throw std::invalid_argument("hypermatrix data: not symmetric");
    return a;
}

}  // namespace steiner
