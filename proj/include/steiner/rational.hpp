#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace steiner {

// Exact arithmetic carriers. All identity checks in this library are exact;
// doubles appear only in the eigenvalue search.
using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
    r.canonicalize();
    return r;
}

// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    // num/den coprime => powers coprime, no canonicalize needed
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat vec_sum(const RatVec& v) {
    Rat s = 0;
    for (const Rat& x : v) s += x;
    return s;
}

inline bool is_zero_vec(const RatVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec vec_sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVec vec_scale(const Rat& c, const RatVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline RatVec zero_vec(size_t n) { return RatVec(n, Rat(0)); }

inline RatVec ones_vec(size_t n) { return RatVec(n, Rat(1)); }

// Projection onto the zero-coordinate-sum hyperplane: c - (sum/n) * ones.
inline RatVec project_zero_sum(const RatVec& c) {
    if (c.empty()) return c;
    Rat mean = vec_sum(c) / Rat(static_cast<long>(c.size()));
    RatVec r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = c[i] - mean;
    return r;
}

}  // namespace steiner
