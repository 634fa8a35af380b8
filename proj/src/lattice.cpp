#include "mtop/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mtop {

void GradedLattice::init_from_leq() {
    m_ = static_cast<int>(leq_.size());
    // unique bottom and top
    bottom_ = top_ = -1;
    for (int x = 0; x < m_; ++x) {
        bool is_bottom = true, is_top = true;
        for (int y = 0; y < m_; ++y) {
            if (!leq_[x][y]) is_top = false;
            if (!leq_[y][x]) is_bottom = false;
        }
        if (is_bottom) {
            if (bottom_ != -1) throw std::invalid_argument("poset has two bottoms");
            bottom_ = x;
        }
        if (is_top) {
            if (top_ != -1) throw std::invalid_argument("poset has two tops");
            top_ = x;
        }
    }
    if (bottom_ == -1 || top_ == -1) throw std::invalid_argument("poset is not bounded");
    // covers
    up_.assign(m_, {});
    for (int x = 0; x < m_; ++x)
        for (int y = 0; y < m_; ++y) {
            if (x == y || !leq_[x][y]) continue;
            bool cover = true;
            for (int z = 0; z < m_ && cover; ++z)
                if (z != x && z != y && leq_[x][z] && leq_[z][y]) cover = false;
            if (cover) up_[x].push_back(y);
        }
    // longest chain from bottom, in a linear extension
    std::vector<int> order(m_);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> below(m_, 0);
    for (int x = 0; x < m_; ++x)
        for (int y = 0; y < m_; ++y)
            if (y != x && leq_[y][x]) ++below[x];
    std::sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
    rank_.assign(m_, 0);
    for (int x : order)
        for (int y : up_[x]) rank_[y] = std::max(rank_[y], rank_[x] + 1);
}

GradedLattice GradedLattice::from_sets(std::vector<Mask> sets) {
    std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    GradedLattice l;
    l.payload_ = sets;
    int m = static_cast<int>(sets.size());
    l.leq_.assign(m, std::vector<char>(m, 0));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) l.leq_[x][y] = subset_of(sets[x], sets[y]);
    l.init_from_leq();
    return l;
}

GradedLattice GradedLattice::boolean_lattice(int d) {
    std::vector<Mask> sets;
    for (Mask s = 0; s < (Mask{1} << d); ++s) sets.push_back(s);
    return from_sets(std::move(sets));
}

GradedLattice GradedLattice::product(const GradedLattice& a, const GradedLattice& b) {
    GradedLattice l;
    int m = a.size() * b.size();
    l.payload_.assign(m, 0);
    l.leq_.assign(m, std::vector<char>(m, 0));
    auto id = [&](int i, int j) { return i * b.size() + j; };
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            for (int k = 0; k < a.size(); ++k)
                for (int t = 0; t < b.size(); ++t)
                    l.leq_[id(i, j)][id(k, t)] = a.leq(i, k) && b.leq(j, t);
    l.init_from_leq();
    return l;
}

std::vector<int> GradedLattice::atoms() const { return up_[bottom_]; }

int GradedLattice::join(int x, int y) const {
    int best = -1;
    for (int z = 0; z < m_; ++z) {
        if (!leq_[x][z] || !leq_[y][z]) continue;
        if (best == -1 || leq_[z][best]) best = z;
    }
    // verify minimality is unique
    for (int z = 0; z < m_; ++z)
        if (leq_[x][z] && leq_[y][z] && !leq_[best][z]) return -1;
    return best;
}

int GradedLattice::meet(int x, int y) const {
    int best = -1;
    for (int z = 0; z < m_; ++z) {
        if (!leq_[z][x] || !leq_[z][y]) continue;
        if (best == -1 || leq_[best][z]) best = z;
    }
    for (int z = 0; z < m_; ++z)
        if (leq_[z][x] && leq_[z][y] && !leq_[z][best]) return -1;
    return best;
}

GradedLattice lattice_of_flats(const Matroid& m) {
    if (m.loops()) throw std::invalid_argument("lattice of flats requires a loopless matroid");
    return GradedLattice::from_sets(m.flats());
}

GeometricCheck is_geometric(const GradedLattice& l) {
    GeometricCheck res;
    for (int x = 0; x < l.size(); ++x)
        for (int y : l.covers_up(x))
            if (l.rank_of(y) != l.rank_of(x) + 1) {
                res.ok = false;
                res.reason = "not graded";
                res.x = x;
                res.y = y;
                return res;
            }
    for (int x = 0; x < l.size(); ++x)
        for (int y = x + 1; y < l.size(); ++y) {
            int j = l.join(x, y), mt = l.meet(x, y);
            if (j == -1 || mt == -1) {
                res.ok = false;
                res.reason = "not a lattice";
                res.x = x;
                res.y = y;
                return res;
            }
            if (l.rank_of(j) + l.rank_of(mt) > l.rank_of(x) + l.rank_of(y)) {
                res.ok = false;
                res.reason = "semimodularity fails";
                res.x = x;
                res.y = y;
                return res;
            }
        }
    std::vector<int> atoms = l.atoms();
    for (int x = 0; x < l.size(); ++x) {
        int j = l.bottom();
        for (int a : atoms)
            if (l.leq(a, x)) j = l.join(j, a);
        if (j != x) {
            res.ok = false;
            res.reason = "not atomistic";
            res.x = x;
            return res;
        }
    }
    return res;
}

namespace {

std::vector<int> proper_elements(const GradedLattice& l, bool proper) {
    std::vector<int> elems;
    for (int x = 0; x < l.size(); ++x) {
        if (proper && (x == l.bottom() || x == l.top())) continue;
        elems.push_back(x);
    }
    return elems;
}

}  // namespace

SimplicialComplex order_complex(const GradedLattice& l, bool proper) {
    std::vector<int> elems = proper_elements(l, proper);
    int n = static_cast<int>(elems.size());
    if (n > kMaxGroundSet) throw std::invalid_argument("order complex exceeds vertex cap");
    if (n == 0) return SimplicialComplex::empty_complex(0);
    std::vector<int> idx(l.size(), -1);
    for (int i = 0; i < n; ++i) idx[elems[i]] = i;
    std::vector<Mask> facets;
    std::vector<int> chain;
    auto extend = [&](auto&& self, int last) -> void {
        bool extended = false;
        for (int e : elems) {
            if (last != -1 && !(l.leq(last, e) && last != e)) continue;
            if (last == -1) {
                // minimal elements only
                bool minimal = true;
                for (int f : elems)
                    if (f != e && l.leq(f, e)) minimal = false;
                if (!minimal) continue;
            } else {
                // minimal among elements above `last`
                bool minimal = true;
                for (int f : elems)
                    if (f != e && f != last && l.leq(last, f) && l.leq(f, e)) minimal = false;
                if (!minimal) continue;
            }
            extended = true;
            chain.push_back(e);
            self(self, e);
            chain.pop_back();
        }
        if (!extended) {
            Mask f = 0;
            for (int e : chain) f |= bit(idx[e]);
            facets.push_back(f);
        }
    };
    extend(extend, -1);
    return SimplicialComplex::from_facets(n, std::move(facets));
}

FVector order_complex_f_vector(const GradedLattice& l, bool proper) {
    std::vector<int> elems = proper_elements(l, proper);
    if (elems.empty()) return FVector{{1}};
    // chains counted by size; elements processed in a linear extension
    std::sort(elems.begin(), elems.end(), [&](int a, int b) {
        if (l.rank_of(a) != l.rank_of(b)) return l.rank_of(a) < l.rank_of(b);
        return a < b;
    });
    int maxlen = 0;
    std::vector<std::vector<long long>> ending(l.size());
    for (size_t i = 0; i < elems.size(); ++i) {
        int x = elems[i];
        std::vector<long long> cnt{1};  // chain {x}
        for (size_t j = 0; j < i; ++j) {
            int y = elems[j];
            if (!(l.leq(y, x) && y != x)) continue;
            for (size_t k = 0; k < ending[y].size(); ++k) {
                if (cnt.size() <= k + 1) cnt.resize(k + 2, 0);
                cnt[k + 1] += ending[y][k];
            }
        }
        maxlen = std::max(maxlen, static_cast<int>(cnt.size()));
        ending[x] = std::move(cnt);
    }
    std::vector<long long> f(maxlen + 1, 0);
    f[0] = 1;
    for (int x : elems)
        for (size_t k = 0; k < ending[x].size(); ++k) f[k + 1] += ending[x][k];
    return FVector{f};
}

long long mobius(const GradedLattice& l) {
    std::vector<int> order(l.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> below(l.size(), 0);
    for (int x = 0; x < l.size(); ++x)
        for (int y = 0; y < l.size(); ++y)
            if (y != x && l.leq(y, x)) ++below[x];
    std::sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
    std::vector<long long> mu(l.size(), 0);
    for (int x : order) {
        if (x == l.bottom()) {
            mu[x] = 1;
            continue;
        }
        long long s = 0;
        for (int y = 0; y < l.size(); ++y)
            if (y != x && l.leq(y, x)) s += mu[y];
        mu[x] = -s;
    }
    return mu[l.top()];
}

long long descending_chains(const GradedLattice& l, const std::vector<int>& atom_order) {
    std::vector<int> atoms = l.atoms();
    if (atom_order.size() != atoms.size()) throw std::invalid_argument("atom order size mismatch");
    std::vector<int> label_of_atom(l.size(), -1);
    {
        std::vector<char> seen(l.size(), 0);
        for (size_t i = 0; i < atom_order.size(); ++i) {
            int a = atom_order[i];
            bool is_atom = std::find(atoms.begin(), atoms.end(), a) != atoms.end();
            if (!is_atom || seen[a]) throw std::invalid_argument("atom order is not a permutation of the atoms");
            seen[a] = 1;
            label_of_atom[a] = static_cast<int>(i);
        }
    }
    auto edge_label = [&](int x, int y) {
        int best = -1;
        for (int a : atom_order) {
            if (l.leq(a, y) && !l.leq(a, x)) {
                int lab = label_of_atom[a];
                if (best == -1 || lab < best) best = lab;
            }
        }
        if (best == -1) throw std::invalid_argument("labeling undefined; lattice is not atomistic");
        return best;
    };
    long long count = 0;
    auto walk = [&](auto&& self, int x, int last_label) -> void {
        if (x == l.top()) {
            ++count;
            return;
        }
        for (int y : l.covers_up(x)) {
            int lab = edge_label(x, y);
            if (last_label == -1 || lab < last_label) self(self, y, lab);
        }
    };
    walk(walk, l.bottom(), -1);
    return count;
}

bool atom_bound_instance(const GradedLattice& l, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    int d = l.rank();
    long long atoms = static_cast<long long>(l.atoms().size());
    long long threshold = k + 1;
    for (int i = 0; i < d - 1; ++i) threshold *= k;
    if (d < 1 || atoms < threshold) return true;  // vacuous
    long long mu = mobius(l);
    return (mu < 0 ? -mu : mu) > k;
}

bool poset_isomorphic(const GradedLattice& a, const GradedLattice& b) {
    if (a.size() != b.size() || a.rank() != b.rank()) return false;
    int m = a.size();
    // iterated neighbor-label refinement
    auto refine = [&](const GradedLattice& l) {
        std::vector<long long> lab(l.size());
        for (int x = 0; x < l.size(); ++x) {
            int up = 0, down = 0;
            for (int y = 0; y < l.size(); ++y) {
                if (y == x) continue;
                if (l.leq(x, y)) ++up;
                if (l.leq(y, x)) ++down;
            }
            lab[x] = (static_cast<long long>(l.rank_of(x)) << 40) ^ (static_cast<long long>(up) << 20) ^ down;
        }
        for (int round = 0; round < 3; ++round) {
            std::vector<long long> next(l.size());
            for (int x = 0; x < l.size(); ++x) {
                std::vector<long long> nb;
                for (int y : l.covers_up(x)) nb.push_back(lab[y]);
                std::sort(nb.begin(), nb.end());
                long long h = lab[x];
                for (long long v : nb) h = h * 1000003 + v;
                next[x] = h;
            }
            lab = next;
        }
        return lab;
    };
    std::vector<long long> la = refine(a), lb = refine(b);
    {
        auto sa = la, sb = lb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    // backtracking on elements sorted by (rank, label)
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (a.rank_of(x) != a.rank_of(y)) return a.rank_of(x) < a.rank_of(y);
        return la[x] < la[y];
    });
    std::vector<int> match(m, -1), used(m, 0);
    auto rec = [&](auto&& self, size_t i) -> bool {
        if (i == order.size()) return true;
        int x = order[i];
        for (int y = 0; y < m; ++y) {
            if (used[y] || lb[y] != la[x] || b.rank_of(y) != a.rank_of(x)) continue;
            bool ok = true;
            for (size_t j = 0; j < i && ok; ++j) {
                int x2 = order[j];
                if (a.leq(x, x2) != b.leq(y, match[x2]) || a.leq(x2, x) != b.leq(match[x2], y))
                    ok = false;
            }
            if (!ok) continue;
            match[x] = y;
            used[y] = 1;
            if (self(self, i + 1)) return true;
            used[y] = 0;
            match[x] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace mtop
