#pragma once

#include <optional>
#include <vector>

#include "mtop/simplicial.hpp"

namespace mtop {

struct ear_glue_error : std::runtime_error {
    Mask witness;
    ear_glue_error(const std::string& msg, Mask w) : std::runtime_error(msg), witness(w) {}
};

// Join of simplex boundaries; parts is a partition of the rank.
// An empty part list realizes {\emptyset} (the (-1)-sphere).
struct SphereShape {
    std::vector<int> parts;  // each >= 1, kept sorted descending

    static SphereShape of(std::vector<int> parts);
    int rank() const;
    int vertex_count() const;
    long long facet_count() const;
    bool operator==(const SphereShape&) const = default;
    std::string str() const;
};

// sphere * full simplex on ell+1 vertices.
struct BallShape {
    SphereShape sphere;
    int ell = 0;
    int rank() const { return sphere.rank() + ell + 1; }
    int vertex_count() const { return sphere.vertex_count() + ell + 1; }
    std::string str() const;
};

// Fresh contiguous ground set: sphere blocks first, then the simplex block.
SimplicialComplex realize_sphere(const SphereShape& shape);
SimplicialComplex realize_ball(const BallShape& shape);

// Coefficients of prod_i (1 + t + ... + t^{d_i}); equals h of realize_sphere.
HVector sphere_h(const SphereShape& shape);

// Entrywise extremal values over rank-d complexes with |chi~| = k.
long long h_entry_bound(int d, int k, int i);
long long f_entry_bound(int d, int k, int i);  // i ranges -1..d-1

// Maps local ball vertices (realize_ball numbering) into the host's ground
// set; targets at or beyond host.n() extend the ground set.  Rejects any
// gluing where host ^ ball differs from the ball's boundary sphere.
SimplicialComplex attach_ear(const SimplicialComplex& host, const BallShape& ball,
                             const std::vector<int>& vertex_map);

struct EarEmbedding {
    BallShape ball;
    std::vector<int> vertex_map;
};

struct EarDecomposition {
    SphereShape base;
    std::vector<int> base_map;  // local sphere vertex -> host vertex
    std::vector<EarEmbedding> ears;
};

enum class SearchStatus { Found, None, Budget };

struct EarSearchResult {
    SearchStatus status = SearchStatus::None;
    std::optional<EarDecomposition> decomposition;
    long long nodes = 0;
};

// Exhaustive backtracking over base spheres (decreasing facet count) and ears
// (decreasing ell), with failed-state memoization.  A None result certifies
// that no decomposition exists; Budget means the node budget was hit first.
EarSearchResult find_ear_decomposition(const SimplicialComplex& c,
                                       long long node_budget = 20'000'000);

// Reconstructs the complex described by a decomposition on the ground set of
// the original host; used to validate search results independently.
SimplicialComplex replay_decomposition(const EarDecomposition& dec, int n);

// Integer partitions of d, parts descending, deterministic order.
std::vector<std::vector<int>> partitions_of(int d);

}  // namespace mtop
