#pragma once

// Random instance generators shared by the test suites.

#include <algorithm>

#include "steiner/hypermatrix.hpp"
#include "steiner/rng.hpp"

namespace steiner::testgen {

// Fully symmetric random hypermatrix: canonical (sorted) tuples get random
// entries, every other tuple copies its sorted representative.
inline Hypermatrix random_symmetric(Rng& rng, int k, int n, int lo = -5, int hi = 5) {
    Hypermatrix a(k, n);
    std::vector<int> digits(static_cast<size_t>(k), 0), sorted(static_cast<size_t>(k));
    for (size_t f = 0; f < a.size(); ++f) {
        std::copy(digits.begin(), digits.end(), sorted.begin());
        std::sort(sorted.begin(), sorted.end());
        size_t g = 0;
        for (int d : sorted) g = g * static_cast<size_t>(n) + static_cast<size_t>(d);
        a.flat_at(f) = (f == g) ? Rat(rng.uniform_int(lo, hi)) : a.flat_at(g);
        for (int p = k - 1; p >= 0; --p) {
            if (++digits[static_cast<size_t>(p)] < n) break;
            digits[static_cast<size_t>(p)] = 0;
        }
    }
    return a;
}

}  // namespace steiner::testgen
