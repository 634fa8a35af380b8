#pragma once

#include "mtop/matroid.hpp"

namespace mtop {

// Total order on the ground set; perm[i] is the i-th smallest element.
struct ElementOrder {
    std::vector<int> perm;
    std::vector<int> pos;  // pos[e] = rank of e in the order

    static ElementOrder natural(int n);
    static ElementOrder of(std::vector<int> perm);
    bool less(int a, int b) const { return pos[a] < pos[b]; }
    int n() const { return static_cast<int>(perm.size()); }
};

struct OrderedMatroid {
    Matroid matroid;
    ElementOrder order;

    OrderedMatroid(Matroid m, ElementOrder o);
    static OrderedMatroid natural(Matroid m);
};

// Each circuit minus its smallest element; duplicates merged.  Requires a
// loopless matroid (a loop's circuit would break to the empty set).
std::vector<Mask> broken_circuits(const OrderedMatroid& om);

SimplicialComplex bc_complex(const OrderedMatroid& om);
SimplicialComplex reduced_bc_complex(const OrderedMatroid& om);

std::vector<Mask> nbc_bases(const OrderedMatroid& om);

// Elements of B replaceable by a strictly smaller one.
Mask internally_passive(const OrderedMatroid& om, Mask basis);

// Bases ordered by inclusion of internally passive sets, graded by |IP|.
struct IntPoset {
    std::vector<Mask> bases;    // sorted by (|IP|, IP, basis)
    std::vector<Mask> ip;       // parallel to bases
    std::vector<long long> rank_counts;
    bool leq(size_t i, size_t j) const { return subset_of(ip[i], ip[j]); }
};

IntPoset int_poset(const OrderedMatroid& om);

// True when the poset plus an attached maximum has unique meets and joins.
bool int_poset_with_max_is_lattice(const IntPoset& p);

struct OrderIdealCheck {
    bool ok = true;
    Mask nbc_basis = 0;      // witness pair on failure
    Mask violating_basis = 0;
};

// nbc bases must be downward closed under IP-set inclusion.
OrderIdealCheck nbc_order_ideal_check(const OrderedMatroid& om);

// Greedy completion of an independent set by smallest elements.
Mask lexmin_basis_containing(const OrderedMatroid& om, Mask independent_set);

struct SamKleeTerm {
    Mask independent_set;  // disjoint from the chosen basis
    HVector h;             // h of the link restricted to the basis
};

// Terms x^{|I|} h(link(I)|_B, x) over independent sets I disjoint from B.
std::vector<SamKleeTerm> samklee_decomposition(const Matroid& m, Mask basis);
HVector samklee_sum(const std::vector<SamKleeTerm>& terms, int d);

}  // namespace mtop
