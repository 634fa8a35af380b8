#include "mtop/activity.hpp"

#include <algorithm>
#include <unordered_set>

namespace mtop {

ElementOrder ElementOrder::natural(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return of(std::move(p));
}

ElementOrder ElementOrder::of(std::vector<int> perm) {
    int n = static_cast<int>(perm.size());
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (perm[i] < 0 || perm[i] >= n || pos[perm[i]] != -1)
            throw std::invalid_argument("order is not a permutation");
        pos[perm[i]] = i;
    }
    ElementOrder o;
    o.perm = std::move(perm);
    o.pos = std::move(pos);
    return o;
}

OrderedMatroid::OrderedMatroid(Matroid m, ElementOrder o) : matroid(std::move(m)), order(std::move(o)) {
    if (order.n() != matroid.n()) throw std::invalid_argument("order size mismatch");
}

OrderedMatroid OrderedMatroid::natural(Matroid m) {
    int n = m.n();
    return OrderedMatroid(std::move(m), ElementOrder::natural(n));
}

std::vector<Mask> broken_circuits(const OrderedMatroid& om) {
    if (om.matroid.loops()) throw std::invalid_argument("broken circuits require a loopless matroid");
    std::vector<Mask> out;
    for (Mask c : om.matroid.circuits()) {
        int minimum = -1;
        for (int e : elements_of(c))
            if (minimum == -1 || om.order.less(e, minimum)) minimum = e;
        out.push_back(c & ~bit(minimum));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SimplicialComplex bc_complex(const OrderedMatroid& om) {
    const Matroid& m = om.matroid;
    if (m.n() > 20) throw std::invalid_argument("bc complex capped at n <= 20");
    std::vector<Mask> bcs = broken_circuits(om);
    std::vector<Mask> faces;
    for (Mask s = 0; s < (Mask{1} << m.n()); ++s) {
        bool ok = true;
        for (Mask bc : bcs)
            if (subset_of(bc, s)) {
                ok = false;
                break;
            }
        if (ok) faces.push_back(s);
    }
    return SimplicialComplex::from_facets(m.n(), std::move(faces));
}

SimplicialComplex reduced_bc_complex(const OrderedMatroid& om) {
    return remove_cone_points(bc_complex(om));
}

std::vector<Mask> nbc_bases(const OrderedMatroid& om) {
    std::vector<Mask> bcs = broken_circuits(om);
    std::vector<Mask> out;
    for (Mask b : om.matroid.bases()) {
        bool ok = true;
        for (Mask bc : bcs)
            if (subset_of(bc, b)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(b);
    }
    return out;
}

Mask internally_passive(const OrderedMatroid& om, Mask basis) {
    const Matroid& m = om.matroid;
    if (!m.is_basis(basis)) throw std::invalid_argument("not a basis");
    Mask ip = 0;
    for (int b : elements_of(basis)) {
        for (int bp = 0; bp < m.n(); ++bp) {
            if (has(basis, bp) || !om.order.less(bp, b)) continue;
            if (m.is_basis((basis & ~bit(b)) | bit(bp))) {
                ip |= bit(b);
                break;
            }
        }
    }
    return ip;
}

IntPoset int_poset(const OrderedMatroid& om) {
    IntPoset p;
    std::vector<std::pair<Mask, Mask>> rows;  // (ip, basis)
    for (Mask b : om.matroid.bases()) rows.emplace_back(internally_passive(om, b), b);
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        int pa = popcount(a.first), pb = popcount(b.first);
        if (pa != pb) return pa < pb;
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    p.rank_counts.assign(om.matroid.rank() + 1, 0);
    for (auto& [ip, b] : rows) {
        p.ip.push_back(ip);
        p.bases.push_back(b);
        p.rank_counts[popcount(ip)]++;
    }
    return p;
}

bool int_poset_with_max_is_lattice(const IntPoset& p) {
    size_t m = p.ip.size();
    size_t top = m;  // virtual maximum
    auto leq = [&](size_t i, size_t j) {
        if (j == top) return true;
        if (i == top) return false;
        return p.leq(i, j);
    };
    size_t total = m + 1;
    for (size_t x = 0; x < total; ++x)
        for (size_t y = x + 1; y < total; ++y) {
            // join: unique minimal common upper bound
            std::vector<size_t> uppers;
            for (size_t z = 0; z < total; ++z)
                if (leq(x, z) && leq(y, z)) uppers.push_back(z);
            size_t mins = 0;
            for (size_t z : uppers) {
                bool minimal = true;
                for (size_t w : uppers)
                    if (w != z && leq(w, z)) minimal = false;
                if (minimal) ++mins;
            }
            if (mins != 1) return false;
            std::vector<size_t> lowers;
            for (size_t z = 0; z < total; ++z)
                if (leq(z, x) && leq(z, y)) lowers.push_back(z);
            size_t maxs = 0;
            for (size_t z : lowers) {
                bool maximal = true;
                for (size_t w : lowers)
                    if (w != z && leq(z, w)) maximal = false;
                if (maximal) ++maxs;
            }
            if (maxs != 1) return false;
        }
    return true;
}

OrderIdealCheck nbc_order_ideal_check(const OrderedMatroid& om) {
    std::vector<Mask> nbc = nbc_bases(om);
    std::unordered_set<Mask> nbc_set(nbc.begin(), nbc.end());
    std::vector<std::pair<Mask, Mask>> rows;
    for (Mask b : om.matroid.bases()) rows.emplace_back(internally_passive(om, b), b);
    OrderIdealCheck res;
    for (auto& [ip_n, bn] : rows) {
        if (!nbc_set.count(bn)) continue;
        for (auto& [ip_o, bo] : rows) {
            if (subset_of(ip_o, ip_n) && !nbc_set.count(bo)) {
                res.ok = false;
                res.nbc_basis = bn;
                res.violating_basis = bo;
                return res;
            }
        }
    }
    return res;
}

Mask lexmin_basis_containing(const OrderedMatroid& om, Mask independent_set) {
    const Matroid& m = om.matroid;
    if (!m.independent(independent_set)) throw std::invalid_argument("set is dependent");
    Mask cur = independent_set;
    int r = popcount(cur);
    for (int i = 0; i < om.order.n() && r < m.rank(); ++i) {
        int e = om.order.perm[i];
        if (has(cur, e)) continue;
        if (m.rank_of(cur | bit(e)) == r + 1) {
            cur |= bit(e);
            ++r;
        }
    }
    return cur;
}

std::vector<SamKleeTerm> samklee_decomposition(const Matroid& m, Mask basis) {
    if (!m.is_basis(basis)) throw std::invalid_argument("not a basis");
    Mask outside = full_mask(m.n()) & ~basis;
    std::vector<Mask> indep;
    for (Mask t = outside;; t = (t - 1) & outside) {
        Mask s = outside & ~t;  // iterate submasks ascending-ish; just collect all
        if (m.independent(s)) indep.push_back(s);
        if (t == 0) break;
    }
    std::sort(indep.begin(), indep.end(), [](Mask a, Mask b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return a < b;
    });
    std::vector<SamKleeTerm> terms;
    for (Mask i_set : indep) {
        // faces F of B with F cup I independent
        std::vector<Mask> faces;
        for (Mask t = basis;; t = (t - 1) & basis) {
            if (m.independent(t | i_set)) faces.push_back(t);
            if (t == 0) break;
        }
        SimplicialComplex lk = SimplicialComplex::from_facets(m.n(), std::move(faces));
        terms.push_back({i_set, h_vector(lk)});
    }
    return terms;
}

HVector samklee_sum(const std::vector<SamKleeTerm>& terms, int d) {
    std::vector<long long> h(d + 1, 0);
    for (const auto& t : terms) {
        int shift = popcount(t.independent_set);
        for (size_t j = 0; j < t.h.h.size(); ++j) h[shift + j] += t.h.h[j];
    }
    return HVector{h};
}

}  // namespace mtop
