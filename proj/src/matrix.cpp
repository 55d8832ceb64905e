#include "steiner/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace steiner {

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::all_ones(int rows, int cols) {
    RatMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = 1;
    return m;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
    RatMat r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) r.at(i, j) += aik * b.at(k, j);
        }
    }
    return r;
}

RatVec mat_vec(const RatMat& a, const RatVec& x) {
    if (a.cols() != static_cast<int>(x.size()))
        throw std::invalid_argument("mat_vec: shape mismatch");
    RatVec r(a.rows(), Rat(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r[i] += a.at(i, j) * x[j];
    return r;
}

RatMat mat_add(const RatMat& a, const RatMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("mat_add: shape mismatch");
    RatMat r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

RatMat mat_scale(const Rat& c, const RatMat& a) {
    RatMat r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = c * a.at(i, j);
    return r;
}

RatMat transpose(const RatMat& a) {
    RatMat r(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
    return r;
}

Int bareiss_det(std::vector<Int>& m, int n) {
    if (n == 0) return 1;
    auto e = [&](int i, int j) -> Int& { return m[size_t(i) * n + j]; };
    int sign = 1;
    Int prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (e(k, k) == 0) {
            int p = k + 1;
            while (p < n && e(p, k) == 0) p++;
            if (p == n) return 0;
            for (int j = k; j < n; ++j) std::swap(e(k, j), e(p, j));
            sign = -sign;
        }
        const Int& pivot = e(k, k);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = e(i, j) * pivot - e(i, k) * e(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                e(i, j) = std::move(t);
            }
            e(i, k) = 0;
        }
        prev = pivot;
    }
    Int d = e(n - 1, n - 1);
    if (sign < 0) d = -d;
    return d;
}

namespace {

// Clear denominators row by row; returns the integer matrix (possibly wider
// than square, for augmented systems) and the product of row multipliers.
std::vector<Int> clear_rows(const RatMat& a, Rat& factor) {
    std::vector<Int> m(size_t(a.rows()) * a.cols());
    factor = 1;
    for (int i = 0; i < a.rows(); ++i) {
        Int l(1);
        for (int j = 0; j < a.cols(); ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).get_den_mpz_t());
        }
        factor *= Rat(l);
        for (int j = 0; j < a.cols(); ++j) {
            Rat scaled = a.at(i, j) * Rat(l);
            m[size_t(i) * a.cols() + j] = scaled.get_num();  // den is 1
        }
    }
    return m;
}

}  // namespace

Rat det(const RatMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix not square");
    Rat factor;
    std::vector<Int> m = clear_rows(a, factor);
    Int d = bareiss_det(m, a.rows());
    Rat r(d);
    r /= factor;
    return r;
}

RatMat inverse(const RatMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
    int n = a.rows();
    // augmented [A | I], rows cleared to integers (row scaling preserves the
    // solution of A X = I), then fraction-free forward elimination
    RatMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = 1;
    }
    Rat factor;
    std::vector<Int> m = clear_rows(aug, factor);
    int w = 2 * n;
    auto e = [&](int i, int j) -> Int& { return m[size_t(i) * w + j]; };
    Int prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (e(k, k) == 0) {
            int p = k + 1;
            while (p < n && e(p, k) == 0) p++;
            if (p == n) throw std::domain_error("inverse: singular matrix");
            for (int j = 0; j < w; ++j) std::swap(e(k, j), e(p, j));
        }
        const Int& pivot = e(k, k);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < w; ++j) {
                Int t = e(i, j) * pivot - e(i, k) * e(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                e(i, j) = std::move(t);
            }
            e(i, k) = 0;
        }
        prev = pivot;
    }
    if (e(n - 1, n - 1) == 0) throw std::domain_error("inverse: singular matrix");

    RatMat x(n, n);
    for (int col = 0; col < n; ++col) {
        for (int i = n - 1; i >= 0; --i) {
            Rat s(e(i, n + col));
            for (int j = i + 1; j < n; ++j) s -= Rat(e(i, j)) * x.at(j, col);
            s /= Rat(e(i, i));
            x.at(i, col) = std::move(s);
        }
    }
    return x;
}

int rank(const RatMat& a) {
    RatMat m = a;
    int r = 0;
    int rows = m.rows(), cols = m.cols();
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m.at(p, c) == 0) p++;
        if (p == rows) continue;
        for (int j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(p, j));
        for (int i = r + 1; i < rows; ++i) {
            if (m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) / m.at(r, c);
            for (int j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        r++;
    }
    return r;
}

std::vector<Rat> leading_principal_minors(const RatMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("minors: matrix not square");
    std::vector<Rat> out;
    out.reserve(a.rows());
    for (int s = 1; s <= a.rows(); ++s) {
        RatMat sub(s, s);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) sub.at(i, j) = a.at(i, j);
        out.push_back(det(sub));
    }
    return out;
}

void write_matrix(std::ostream& os, const RatMat& a) {
    os << 2 << " " << a.rows();
    if (a.rows() != a.cols()) os << " " << a.cols();
    os << "\n";
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (j) os << " ";
            os << rat_to_string(a.at(i, j));
        }
        os << "\n";
    }
}

RatMat read_matrix(std::istream& is) {
    std::string header;
    while (std::getline(is, header)) {
        if (header.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    std::istringstream hs(header);
    int k = 0, rows = 0, cols = 0;
    if (!(hs >> k >> rows)) throw std::invalid_argument("matrix header: expected '2 n'");
    if (k != 2) throw std::invalid_argument("matrix header: order must be 2");
    if (!(hs >> cols)) cols = rows;
    RatMat m(rows, cols);
    std::string tok;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (!(is >> tok)) throw std::invalid_argument("matrix data: unexpected end");
            m.at(i, j) = rat_from_string(tok);
        }
    }
    return m;
}

}  // namespace steiner
