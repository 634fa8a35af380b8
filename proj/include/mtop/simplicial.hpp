#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "mtop/bits.hpp"

namespace mtop {

struct void_complex_error : std::runtime_error {
    void_complex_error() : std::runtime_error("operation undefined on the void complex") {}
};

struct face_error : std::runtime_error {
    Mask face;
    explicit face_error(Mask f)
        : std::runtime_error("face " + mask_to_string(f) + " is not in the complex"), face(f) {}
};

// f_{-1}..f_{d-1} stored as counts[j] = number of faces with j elements.
struct FVector {
    std::vector<long long> counts;
    int rank() const { return static_cast<int>(counts.size()) - 1; }
    bool operator==(const FVector&) const = default;
    std::string str() const;
};

// h_0..h_d.
struct HVector {
    std::vector<long long> h;
    int rank() const { return static_cast<int>(h.size()) - 1; }
    long long top() const { return h.empty() ? 0 : h.back(); }
    bool operator==(const HVector&) const = default;
    std::string str() const;
};

// Coefficient product of h-polynomials.
HVector convolve(const HVector& a, const HVector& b);

// A simplicial complex stored by its facets (an antichain of masks).  An
// empty facet list is the void complex; the complex {\emptyset} is a single
// empty facet.  These are distinct values.
class SimplicialComplex {
  public:
    SimplicialComplex() : n_(0) {}

    // Normalizes: dedupes and keeps maximal faces only.
    static SimplicialComplex from_facets(int n, std::vector<Mask> facets);
    static SimplicialComplex void_complex(int n);
    static SimplicialComplex empty_complex(int n);  // {\emptyset}
    static SimplicialComplex full_simplex(int n);

    int n() const { return n_; }
    const std::vector<Mask>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0] == 0; }

    // Max facet cardinality (0 for {\emptyset}).  Throws on void input.
    int rank() const;
    int dim() const { return rank() - 1; }
    bool pure() const;

    bool contains(Mask face) const;

    // Vertices appearing in at least one facet.
    Mask vertex_support() const;

    // All faces, including the empty face.
    std::unordered_set<Mask> face_set() const;

    bool operator==(const SimplicialComplex&) const = default;

  private:
    int n_;
    std::vector<Mask> facets_;  // sorted ascending, antichain
};

FVector f_vector(const SimplicialComplex& c);
HVector h_from_f(const FVector& f);
FVector f_from_h(const HVector& h);
HVector h_vector(const SimplicialComplex& c);
long long reduced_euler(const SimplicialComplex& c);

// Join with b's ground set shifted past a's.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// link = { F : F cap face = empty, F cup face in c }.
SimplicialComplex link(const SimplicialComplex& c, Mask face);

// Faces of c contained in A, on the same ground set.
SimplicialComplex restriction(const SimplicialComplex& c, Mask a);

// Vertices lying in every facet.
Mask cone_points(const SimplicialComplex& c);

// Deletes the cone points from every facet (ground set size unchanged).
SimplicialComplex remove_cone_points(const SimplicialComplex& c);

// Relabels so the ground set is exactly the vertex support, densely packed.
// old_of_new[i] is the original index of new vertex i.
SimplicialComplex densify(const SimplicialComplex& c, std::vector<int>* old_of_new = nullptr);

}  // namespace mtop
