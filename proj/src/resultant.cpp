#include "steiner/resultant.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "steiner/rng.hpp"

namespace steiner {

namespace {

void monomials_rec(int nvars, int var, int remaining, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (var == nvars - 1) {
        cur[var] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[var] = e;
        monomials_rec(nvars, var + 1, remaining - e, cur, out);
    }
}

}  // namespace

std::vector<std::vector<int>> monomials_of_degree(int nvars, int degree) {
    if (nvars < 1) throw std::invalid_argument("monomials: nvars must be >= 1");
    if (degree < 0) throw std::invalid_argument("monomials: degree must be >= 0");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars, 0);
    monomials_rec(nvars, 0, degree, cur, out);
    return out;
}

Int monomial_count(int nvars, int degree) {
    Int c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(degree + nvars - 1),
                 static_cast<unsigned long>(nvars - 1));
    return c;
}

PolySystem gradient_system(const Hypermatrix& a) {
    int k = a.order(), n = a.dim();
    if (k < 2) throw std::invalid_argument("gradient_system: order must be >= 2");
    PolySystem sys;
    sys.nvars = n;
    sys.degree = k - 1;
    sys.monomials = monomials_of_degree(n, k - 1);
    Int dfact;
    mpz_fac_ui(dfact.get_mpz_t(), static_cast<unsigned long>(k - 1));
    sys.forms.assign(n, std::vector<Rat>(sys.monomials.size(), Rat(0)));
    std::vector<int> idx(static_cast<size_t>(k));
    for (size_t m = 0; m < sys.monomials.size(); ++m) {
        const std::vector<int>& expo = sys.monomials[m];
        Int weight = dfact;
        for (int e : expo) {
            if (e > 1) {
                Int f;
                mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(e));
                mpz_divexact(weight.get_mpz_t(), weight.get_mpz_t(), f.get_mpz_t());
            }
        }
        // a representative index tuple realizing the exponent vector
        int pos = 1;
        for (int v = 0; v < n; ++v)
            for (int rep = 0; rep < expo[v]; ++rep) idx[pos++] = v + 1;
        Rat w(weight);
        for (int slice = 1; slice <= n; ++slice) {
            idx[0] = slice;
            const Rat& entry = a.at(idx);
            if (entry != 0) sys.forms[slice - 1][m] = w * entry;
        }
    }
    return sys;
}

Rat evaluate_form(const PolySystem& sys, int a, const RatVec& x) {
    if (a < 0 || a >= static_cast<int>(sys.forms.size()))
        throw std::out_of_range("evaluate_form: form index");
    if (static_cast<int>(x.size()) != sys.nvars)
        throw std::invalid_argument("evaluate_form: vector length mismatch");
    Rat s = 0;
    for (size_t m = 0; m < sys.monomials.size(); ++m) {
        const Rat& c = sys.forms[a][m];
        if (c == 0) continue;
        Rat term = c;
        for (int v = 0; v < sys.nvars; ++v) {
            int e = sys.monomials[m][v];
            if (e) term *= rat_pow(x[v], static_cast<unsigned long>(e));
        }
        s += term;
    }
    return s;
}

PolySystem scale_form(const PolySystem& sys, int a, const Rat& c) {
    PolySystem out = sys;
    for (Rat& v : out.forms.at(static_cast<size_t>(a))) v *= c;
    return out;
}

namespace {

using Poly = std::map<std::vector<int>, Rat>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    }
    return out;
}

}  // namespace

PolySystem substitute(const PolySystem& sys, const RatMat& b) {
    int n = sys.nvars;
    if (b.rows() != n || b.cols() != n)
        throw std::invalid_argument("substitute: matrix must be n x n");
    // linear forms replacing each variable, and their powers on demand
    std::vector<std::vector<Poly>> powers(n);  // powers[v][e] = (B x)_v ^ e
    for (int v = 0; v < n; ++v) {
        Poly one;
        one[std::vector<int>(n, 0)] = 1;
        powers[v].push_back(one);
        Poly lin;
        for (int j = 0; j < n; ++j) {
            if (b.at(v, j) == 0) continue;
            std::vector<int> e(n, 0);
            e[j] = 1;
            lin[e] = b.at(v, j);
        }
        powers[v].push_back(lin);
    }
    auto power = [&](int v, int e) -> const Poly& {
        while (static_cast<int>(powers[v].size()) <= e)
            powers[v].push_back(poly_mul(powers[v].back(), powers[v][1]));
        return powers[v][e];
    };

    PolySystem out;
    out.nvars = n;
    out.degree = sys.degree;
    out.monomials = sys.monomials;
    std::map<std::vector<int>, int> index;
    for (size_t m = 0; m < out.monomials.size(); ++m)
        index[out.monomials[m]] = static_cast<int>(m);
    out.forms.assign(sys.forms.size(), std::vector<Rat>(out.monomials.size(), Rat(0)));
    for (size_t a = 0; a < sys.forms.size(); ++a) {
        Poly acc;
        for (size_t m = 0; m < sys.monomials.size(); ++m) {
            const Rat& c = sys.forms[a][m];
            if (c == 0) continue;
            Poly term;
            term[std::vector<int>(n, 0)] = c;
            for (int v = 0; v < n; ++v) {
                int e = sys.monomials[m][v];
                if (e) term = poly_mul(term, power(v, e));
            }
            for (auto& [expo, coeff] : term) acc[expo] += coeff;
        }
        for (auto& [expo, coeff] : acc) {
            if (coeff == 0) continue;
            out.forms[a][static_cast<size_t>(index.at(expo))] = coeff;
        }
    }
    return out;
}

Rat sylvester_resultant(const std::vector<Rat>& f, const std::vector<Rat>& g) {
    auto all_zero = [](const std::vector<Rat>& v) {
        for (const Rat& c : v)
            if (c != 0) return false;
        return true;
    };
    if (f.empty() || g.empty() || all_zero(f) || all_zero(g))
        throw std::invalid_argument("sylvester_resultant: zero form");
    int p = static_cast<int>(f.size()) - 1;
    int q = static_cast<int>(g.size()) - 1;
    int size = p + q;
    if (size == 0) return 1;  // two nonzero constants
    RatMat s(size, size);
    for (int r = 0; r < q; ++r)
        for (int j = 0; j <= p; ++j) s.at(r, r + j) = f[static_cast<size_t>(j)];
    for (int r = 0; r < p; ++r)
        for (int j = 0; j <= q; ++j) s.at(q + r, r + j) = g[static_cast<size_t>(j)];
    return det(s);
}

Rat sylvester_resultant(const PolySystem& sys) {
    if (sys.nvars != 2)
        throw std::invalid_argument("sylvester_resultant: system must have 2 variables");
    if (sys.forms.size() != 2)
        throw std::invalid_argument("sylvester_resultant: system must have 2 forms");
    // monomials are already in descending powers of the first variable
    return sylvester_resultant(sys.forms[0], sys.forms[1]);
}

MacaulaySystem build_macaulay(const PolySystem& sys, size_t cap) {
    int n = sys.nvars;
    int m = sys.degree;
    if (n < 2) throw std::invalid_argument("macaulay: requires >= 2 variables");
    if (m < 1) throw std::invalid_argument("macaulay: form degree must be >= 1");
    if (static_cast<int>(sys.forms.size()) != n)
        throw std::invalid_argument("macaulay: need n forms in n variables");
    MacaulaySystem mac;
    mac.nvars = n;
    mac.form_degree = m;
    mac.total_degree = n * (m - 1) + 1;
    Int count = monomial_count(n, mac.total_degree);
    if (count > Int(static_cast<unsigned long>(cap))) {
        throw std::length_error("macaulay: " + count.get_str() +
                                " degree-" + std::to_string(mac.total_degree) +
                                " monomials exceed cap " + std::to_string(cap));
    }
    mac.monomials = monomials_of_degree(n, mac.total_degree);
    int size = static_cast<int>(mac.monomials.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < size; ++i) index[mac.monomials[i]] = i;

    mac.row_form.assign(static_cast<size_t>(size), -1);
    mac.matrix = RatMat(size, size);
    for (int r = 0; r < size; ++r) {
        const std::vector<int>& gamma = mac.monomials[static_cast<size_t>(r)];
        int admissible = 0, first = -1;
        for (int i = 0; i < n; ++i) {
            if (gamma[static_cast<size_t>(i)] >= m) {
                admissible++;
                if (first < 0) first = i;
            }
        }
        // total degree n(m-1)+1 forces at least one exponent >= m
        mac.row_form[static_cast<size_t>(r)] = first;
        if (admissible >= 2) mac.nonreduced.push_back(r);
        std::vector<int> quot = gamma;
        quot[static_cast<size_t>(first)] -= m;
        for (size_t mm = 0; mm < sys.monomials.size(); ++mm) {
            const Rat& c = sys.forms[static_cast<size_t>(first)][mm];
            if (c == 0) continue;
            std::vector<int> col = quot;
            for (int v = 0; v < n; ++v) col[static_cast<size_t>(v)] += sys.monomials[mm][static_cast<size_t>(v)];
            mac.matrix.at(r, index.at(col)) = c;
        }
    }
    return mac;
}

namespace {

// Random product of integer shears; always has determinant exactly 1.
RatMat random_unimodular(int n, uint64_t seed) {
    Rng rng(seed);
    RatMat b = RatMat::identity(n);
    int shears = 2 * n;
    for (int s = 0; s < shears; ++s) {
        int i = rng.uniform_int(0, n - 1);
        int j = rng.uniform_int(0, n - 2);
        if (j >= i) j++;
        int c = rng.uniform_int(1, 2) * (rng.uniform_int(0, 1) ? 1 : -1);
        // row op b <- E_ij(c) * b
        for (int col = 0; col < n; ++col) b.at(i, col) += Rat(c) * b.at(j, col);
    }
    return b;
}

bool has_zero_form(const PolySystem& sys) {
    for (const auto& form : sys.forms) {
        bool zero = true;
        for (const Rat& c : form) {
            if (c != 0) {
                zero = false;
                break;
            }
        }
        if (zero) return true;
    }
    return false;
}

}  // namespace

Rat macaulay_resultant(const PolySystem& sys, uint64_t seed, int max_retries, size_t cap) {
    // a vanished form shares a projective zero with the rest, so Res = 0
    if (has_zero_form(sys)) return Rat(0);
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        PolySystem cur =
            attempt == 0 ? sys
                         : substitute(sys, random_unimodular(sys.nvars,
                                                             split_seed(seed, attempt)));
        MacaulaySystem mac = build_macaulay(cur, cap);
        Rat det_minor(1);
        if (!mac.nonreduced.empty()) {
            int ms = static_cast<int>(mac.nonreduced.size());
            RatMat minor(ms, ms);
            for (int i = 0; i < ms; ++i)
                for (int j = 0; j < ms; ++j)
                    minor.at(i, j) = mac.matrix.at(mac.nonreduced[static_cast<size_t>(i)],
                                                   mac.nonreduced[static_cast<size_t>(j)]);
            det_minor = det(minor);
        }
        if (det_minor == 0) continue;  // degenerate choice; retry transformed
        Rat det_full = det(mac.matrix);
        return det_full / det_minor;
    }
    std::ostringstream os;
    os << "macaulay_resultant: persistent degeneracy after " << max_retries
       << " unimodular retries (n=" << sys.nvars << ", degree=" << sys.degree << ")";
    throw std::runtime_error(os.str());
}

Rat hyperdet(const Hypermatrix& a, uint64_t seed, size_t cap) {
    PolySystem sys = gradient_system(a);
    if (a.dim() == 1) return sys.forms[0][0];
    if (a.dim() == 2) return sylvester_resultant(sys);
    return macaulay_resultant(sys, seed, 8, cap);
}

}  // namespace steiner
