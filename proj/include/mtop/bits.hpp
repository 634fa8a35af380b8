#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtop {

// Ground sets are dense 0-based indices packed into a 64-bit mask.
// Subset/superset tests are single word operations; this caps n at 64.
using Mask = std::uint64_t;

constexpr int kMaxGroundSet = 64;

inline int popcount(Mask m) { return std::popcount(m); }

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline Mask bit(int e) { return Mask{1} << e; }

inline bool has(Mask m, int e) { return (m >> e) & 1; }

inline Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline std::vector<int> elements_of(Mask m) {
    std::vector<int> out;
    out.reserve(popcount(m));
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline Mask mask_of(const std::vector<int>& elems) {
    Mask m = 0;
    for (int e : elems) {
        if (e < 0 || e >= kMaxGroundSet) throw std::out_of_range("element out of range");
        m |= bit(e);
    }
    return m;
}

// Binomial coefficients up to 64; values fit in long long for every k when n <= 64.
long long binomial(int n, int k);

// Next k-subset in increasing numeric mask order (Gosper's hack).  Numeric
// order on masks coincides with colexicographic order on the subsets.
inline Mask next_same_size(Mask v) {
    Mask c = v & -v;
    Mask r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

// Position of a d-subset among all d-subsets in colex order.
long long colex_rank(Mask s);

// Inverse of colex_rank for subsets of the given size.
Mask colex_unrank(int size, long long rank);

// Visit every k-subset of {0..n-1} in colex order.
template <typename F>
void for_each_subset_of_size(int n, int k, F&& fn) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        fn(Mask{0});
        return;
    }
    Mask m = full_mask(k);
    Mask limit = full_mask(n);
    while (m <= limit) {
        fn(m);
        if (m == 0) break;
        Mask nx = next_same_size(m);
        if (nx <= m) break;  // overflow
        m = nx;
    }
}

std::string mask_to_string(Mask m, bool one_indexed = false);

}  // namespace mtop
