#pragma once

#include <cstdint>
#include <random>

#include "steiner/rational.hpp"

namespace steiner {

// splitmix64, used to derive independent per-trial seeds from a master seed.
inline uint64_t split_seed(uint64_t master, uint64_t index) {
    uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    int uniform_int(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(gen_);
    }

    uint64_t next() { return gen_(); }

    // Random integer-valued rational vector, numerators in [-9, 9].
    // Small support keeps exact-arithmetic growth bounded; the identities
    // under test are polynomial, so this suffices for falsification.
    RatVec rat_vec(size_t n, int lo = -9, int hi = 9) {
        RatVec v(n);
        for (size_t i = 0; i < n; ++i) v[i] = Rat(uniform_int(lo, hi));
        return v;
    }

    RatVec nonzero_rat_vec(size_t n, int lo = -9, int hi = 9) {
        for (;;) {
            RatVec v = rat_vec(n, lo, hi);
            if (!is_zero_vec(v)) return v;
        }
    }

    // Random nonzero vector with coordinate sum exactly 0.
    RatVec zero_sum_vec(size_t n) {
        for (;;) {
            RatVec v = project_zero_sum(rat_vec(n));
            if (!is_zero_vec(v)) return v;
        }
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

}  // namespace steiner
