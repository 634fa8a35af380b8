#pragma once

#include <random>

#include "mtop/matroid.hpp"

namespace fixtures {

using namespace mtop;

// Rank-4 graphic matroid on 6 elements: two 4-cycles sharing a 2-edge path.
// 0-indexed circuits {0,1,2,3}, {0,1,4,5}, {2,3,4,5}.
inline Matroid two_squares() {
    std::vector<Mask> bases;
    std::vector<Mask> circuits = {mask_of({0, 1, 2, 3}), mask_of({0, 1, 4, 5}),
                                  mask_of({2, 3, 4, 5})};
    for_each_subset_of_size(6, 4, [&](Mask s) {
        for (Mask c : circuits)
            if (subset_of(c, s)) return;
        bases.push_back(s);
    });
    return Matroid::from_bases(6, bases);
}

// Independent face-count oracle: scan all subsets of the ground set.
inline std::vector<long long> brute_face_counts(const SimplicialComplex& c) {
    std::vector<long long> counts(c.rank() + 1, 0);
    for (Mask s = 0; s < (Mask{1} << c.n()); ++s)
        if (c.contains(s)) counts[popcount(s)]++;
    return counts;
}

// Polynomial oracle for the h-transform: expand sum f_{i-1} t^i (1-t)^(d-i).
inline std::vector<long long> brute_h_from_f(const std::vector<long long>& f) {
    int d = static_cast<int>(f.size()) - 1;
    std::vector<long long> h(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        // t^i (1-t)^(d-i)
        std::vector<long long> poly{1};
        for (int rep = 0; rep < d - i; ++rep) {
            std::vector<long long> nxt(poly.size() + 1, 0);
            for (size_t j = 0; j < poly.size(); ++j) {
                nxt[j] += poly[j];
                nxt[j + 1] -= poly[j];
            }
            poly = nxt;
        }
        for (size_t j = 0; j < poly.size(); ++j) h[i + j] += f[i] * poly[j];
    }
    return h;
}

inline SimplicialComplex random_complex(std::mt19937_64& rng, int max_n = 8, int max_facets = 8) {
    int n = 1 + static_cast<int>(rng() % max_n);
    int count = 1 + static_cast<int>(rng() % max_facets);
    std::vector<Mask> facets;
    for (int i = 0; i < count; ++i) facets.push_back(rng() & full_mask(n));
    return SimplicialComplex::from_facets(n, facets);
}

}  // namespace fixtures
