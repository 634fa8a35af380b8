#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mtop/simplicial.hpp"

namespace mtop {

struct basis_axiom_error : std::runtime_error {
    Mask b1 = 0, b2 = 0;
    int element = -1;
    basis_axiom_error(const std::string& msg, Mask a, Mask b, int e)
        : std::runtime_error(msg), b1(a), b2(b), element(e) {}
    explicit basis_axiom_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct GraphInput {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;  // loops and parallel edges allowed
};

// A matroid given by its basis family.  Immutable after validation; derived
// data (circuits, flats) is computed once on demand.
class Matroid {
  public:
    // Validates nonemptiness, equicardinality and basis exchange; throws
    // basis_axiom_error naming the violating pair and element.
    static Matroid from_bases(int n, std::vector<Mask> bases);

    int n() const { return n_; }
    int rank() const { return d_; }
    const std::vector<Mask>& bases() const { return bases_; }
    bool is_basis(Mask b) const;

    int rank_of(Mask a) const;  // max over bases of |B & A|
    bool independent(Mask a) const;

    SimplicialComplex independence_complex() const;

    const std::vector<Mask>& circuits() const;
    Mask closure(Mask a) const;
    const std::vector<Mask>& flats() const;

    Mask loops() const;
    Mask coloops() const;
    std::vector<Mask> parallel_classes() const;  // over non-loop elements
    bool is_simple() const;
    bool is_coloop_free() const;

    // Finest partition of the ground set into direct summands.
    std::vector<Mask> components() const;
    bool is_connected() const;

    // Quotient of parallel elements, loops dropped; keeps the smallest
    // element of every parallel class.
    Matroid simplification() const;

    bool operator==(const Matroid& o) const {
        return n_ == o.n_ && d_ == o.d_ && bases_ == o.bases_;
    }

  private:
    Matroid(int n, int d, std::vector<Mask> bases)
        : n_(n), d_(d), bases_(std::move(bases)) {}

    int n_;
    int d_;
    std::vector<Mask> bases_;  // sorted

    struct Cache;
    mutable std::shared_ptr<Cache> cache_;
    Cache& cache() const;
};

// Minors (standard semantics on the basis family).
Matroid deletion(const Matroid& m, Mask a);
Matroid contraction(const Matroid& m, Mask a);
Matroid restriction(const Matroid& m, Mask a);
Matroid direct_sum(const Matroid& a, const Matroid& b);
Matroid add_parallel(const Matroid& m, int e);  // new element n(), parallel to e

// Removes all coloops; returns the coloop-free part and the removed count.
std::pair<Matroid, int> strip_coloops(const Matroid& m);

// Constructors.
Matroid uniform(int d, int n);
Matroid graphic(const GraphInput& g);
// Rank-d matroid on 2d+k-1 elements whose independence complex attains the
// entrywise h/f maxima for |chi~| = k.
Matroid vdk(int d, int k);

// Lexicographically minimal basis-indicator string ('*' basis, '0' not) over
// all ground-set permutations, positions in colex order ('*' < '0').
std::string canonical_form(const Matroid& m);
std::string basis_indicator(const Matroid& m);  // identity labeling
bool is_isomorphic(const Matroid& a, const Matroid& b);

// A pure complex is an independence complex iff every induced subcomplex is
// pure; returns the matroid with bases = facets, or nullopt with a witness
// vertex set.
std::optional<Matroid> recognize_matroid_complex(const SimplicialComplex& c,
                                                 Mask* witness = nullptr);

// R1-R3 over all pairs when 2^n <= pair_limit, random pairs otherwise.
bool check_rank_axioms(const Matroid& m, std::uint64_t seed = 1, int random_pairs = 2000);

}  // namespace mtop
