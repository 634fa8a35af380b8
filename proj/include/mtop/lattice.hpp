#pragma once

#include "mtop/matroid.hpp"

namespace mtop {

// Finite bounded poset with rank = longest chain from the bottom.
class GradedLattice {
  public:
    // Elements of a set family ordered by inclusion; must be bounded.
    static GradedLattice from_sets(std::vector<Mask> sets);
    static GradedLattice boolean_lattice(int d);
    static GradedLattice product(const GradedLattice& a, const GradedLattice& b);

    int size() const { return m_; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    bool leq(int x, int y) const { return leq_[x][y]; }
    const std::vector<int>& covers_up(int x) const { return up_[x]; }
    int rank_of(int x) const { return rank_[x]; }
    int rank() const { return rank_[top_]; }
    std::vector<int> atoms() const;
    Mask payload(int x) const { return payload_[x]; }

    // -1 when the pair has no unique join/meet.
    int join(int x, int y) const;
    int meet(int x, int y) const;

  private:
    void init_from_leq();

    int m_ = 0;
    std::vector<Mask> payload_;
    std::vector<std::vector<char>> leq_;
    std::vector<std::vector<int>> up_;
    std::vector<int> rank_;
    int bottom_ = -1, top_ = -1;
};

// Requires a loopless matroid.
GradedLattice lattice_of_flats(const Matroid& m);

struct GeometricCheck {
    bool ok = true;
    std::string reason;
    int x = -1, y = -1;  // witness pair/element
};

// Gradedness, unique meets/joins, semimodularity, atomisticity.
GeometricCheck is_geometric(const GradedLattice& l);

// Chains of the (proper part of the) lattice.  Capped at 64 vertices; use
// order_complex_f_vector for larger lattices.
SimplicialComplex order_complex(const GradedLattice& l, bool proper = true);

// Face counts of the order complex by chain-length DP (no vertex cap).
FVector order_complex_f_vector(const GradedLattice& l, bool proper = true);

long long mobius(const GradedLattice& l);  // mu(bottom, top)

// Maximal chains whose minimal-new-atom labels strictly decrease.
// atom_order lists the lattice's atoms from smallest label to largest.
long long descending_chains(const GradedLattice& l, const std::vector<int>& atom_order);

// Instance of the implication a(L) >= (k+1)k^(rank-1)  =>  |mu| > k.
bool atom_bound_instance(const GradedLattice& l, int k);

// Backtracking isomorphism test for bounded graded posets (desk scale).
bool poset_isomorphic(const GradedLattice& a, const GradedLattice& b);

}  // namespace mtop
