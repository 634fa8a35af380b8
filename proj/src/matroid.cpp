#include "mtop/matroid.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace mtop {

struct Matroid::Cache {
    std::once_flag circuits_once;
    std::once_flag flats_once;
    std::vector<Mask> circuits;
    std::vector<Mask> flats;
};

Matroid::Cache& Matroid::cache() const { return *cache_; }

Matroid Matroid::from_bases(int n, std::vector<Mask> bases) {
    if (n < 0 || n > kMaxGroundSet) throw basis_axiom_error("ground set size out of range");
    if (bases.empty()) throw basis_axiom_error("basis family is empty");
    for (Mask b : bases)
        if (!subset_of(b, full_mask(n))) throw basis_axiom_error("basis exceeds ground set");
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    int d = popcount(bases[0]);
    for (Mask b : bases)
        if (popcount(b) != d)
            throw basis_axiom_error("bases are not equicardinal", bases[0], b, -1);
    std::unordered_set<Mask> bset(bases.begin(), bases.end());
    for (Mask b1 : bases)
        for (Mask b2 : bases) {
            if (b1 == b2) continue;
            Mask only1 = b1 & ~b2;
            Mask only2 = b2 & ~b1;
            for (int x : elements_of(only1)) {
                bool ok = false;
                for (int y : elements_of(only2))
                    if (bset.count((b1 & ~bit(x)) | bit(y))) {
                        ok = true;
                        break;
                    }
                if (!ok)
                    throw basis_axiom_error("basis exchange fails", b1, b2, x);
            }
        }
    Matroid m(n, d, std::move(bases));
    m.cache_ = std::make_shared<Cache>();
    return m;
}

bool Matroid::is_basis(Mask b) const {
    return std::binary_search(bases_.begin(), bases_.end(), b);
}

int Matroid::rank_of(Mask a) const {
    int r = 0;
    for (Mask b : bases_) r = std::max(r, popcount(b & a));
    return r;
}

bool Matroid::independent(Mask a) const {
    int k = popcount(a);
    return k <= d_ && rank_of(a) == k;
}

SimplicialComplex Matroid::independence_complex() const {
    return SimplicialComplex::from_facets(n_, bases_);
}

const std::vector<Mask>& Matroid::circuits() const {
    std::call_once(cache().circuits_once, [this] {
        std::vector<Mask> out;
        for (int k = 1; k <= d_ + 1 && k <= n_; ++k) {
            for_each_subset_of_size(n_, k, [&](Mask s) {
                if (independent(s)) return;
                for (int e : elements_of(s))
                    if (!independent(s & ~bit(e))) return;
                out.push_back(s);
            });
        }
        std::sort(out.begin(), out.end());
        cache().circuits = std::move(out);
    });
    return cache().circuits;
}

Mask Matroid::closure(Mask a) const {
    int r = rank_of(a);
    Mask out = a;
    for (int x = 0; x < n_; ++x)
        if (!has(a, x) && rank_of(a | bit(x)) == r) out |= bit(x);
    return out;
}

const std::vector<Mask>& Matroid::flats() const {
    std::call_once(cache().flats_once, [this] {
        if (n_ > 20) throw std::invalid_argument("flat enumeration capped at n <= 20");
        std::vector<int> rk(size_t{1} << n_, 0);
        for (Mask s = 0; s < (Mask{1} << n_); ++s) rk[s] = rank_of(s);
        std::vector<Mask> out;
        for (Mask s = 0; s < (Mask{1} << n_); ++s) {
            bool flat = true;
            for (int x = 0; x < n_ && flat; ++x)
                if (!has(s, x) && rk[s | bit(x)] == rk[s]) flat = false;
            if (flat) out.push_back(s);
        }
        cache().flats = std::move(out);
    });
    return cache().flats;
}

Mask Matroid::loops() const {
    Mask covered = 0;
    for (Mask b : bases_) covered |= b;
    return full_mask(n_) & ~covered;
}

Mask Matroid::coloops() const {
    Mask m = full_mask(n_);
    for (Mask b : bases_) m &= b;
    return m;
}

std::vector<Mask> Matroid::parallel_classes() const {
    Mask nonloops = full_mask(n_) & ~loops();
    std::vector<int> parent(n_);
    for (int i = 0; i < n_; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<int> elems = elements_of(nonloops);
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i + 1; j < elems.size(); ++j)
            if (rank_of(bit(elems[i]) | bit(elems[j])) == 1) parent[find(elems[i])] = find(elems[j]);
    std::vector<Mask> classes(n_, 0);
    for (int e : elems) classes[find(e)] |= bit(e);
    std::vector<Mask> out;
    for (Mask c : classes)
        if (c) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

bool Matroid::is_simple() const {
    if (loops()) return false;
    for (Mask c : parallel_classes())
        if (popcount(c) > 1) return false;
    return true;
}

bool Matroid::is_coloop_free() const { return coloops() == 0; }

std::vector<Mask> Matroid::components() const {
    std::vector<Mask> out;
    auto split = [&](auto&& self, Mask ground) -> void {
        int cnt = popcount(ground);
        if (cnt == 0) return;
        if (cnt == 1) {
            out.push_back(ground);
            return;
        }
        int e0 = std::countr_zero(ground);
        Mask rest = ground & ~bit(e0);
        int rg = rank_of(ground);
        for (Mask t = rest;; t = (t - 1) & rest) {
            if (t != rest) {
                Mask s = bit(e0) | t;
                if (rank_of(s) + rank_of(ground & ~s) == rg) {
                    self(self, s);
                    self(self, ground & ~s);
                    return;
                }
            }
            if (t == 0) break;
        }
        out.push_back(ground);
    };
    split(split, full_mask(n_));
    std::sort(out.begin(), out.end());
    return out;
}

bool Matroid::is_connected() const {
    if (n_ == 0) return false;
    if (n_ == 1) return loops() == 0;
    return components().size() == 1;
}

namespace {

Matroid relabel_to_subset(const Matroid& m, Mask keep, const std::vector<Mask>& new_bases) {
    std::vector<int> old_elems = elements_of(keep);
    std::vector<int> new_of_old(m.n(), -1);
    for (size_t i = 0; i < old_elems.size(); ++i) new_of_old[old_elems[i]] = static_cast<int>(i);
    std::vector<Mask> mapped;
    mapped.reserve(new_bases.size());
    for (Mask b : new_bases) {
        Mask g = 0;
        for (int e : elements_of(b)) g |= bit(new_of_old[e]);
        mapped.push_back(g);
    }
    return Matroid::from_bases(static_cast<int>(old_elems.size()), std::move(mapped));
}

}  // namespace

Matroid deletion(const Matroid& m, Mask a) {
    Mask keep = full_mask(m.n()) & ~a;
    int r = m.rank_of(keep);
    std::vector<Mask> bases;
    std::vector<int> pool = elements_of(keep);
    for_each_subset_of_size(static_cast<int>(pool.size()), r, [&](Mask idxs) {
        Mask s = 0;
        for (int i : elements_of(idxs)) s |= bit(pool[i]);
        if (m.rank_of(s) == r) bases.push_back(s);
    });
    return relabel_to_subset(m, keep, bases);
}

Matroid restriction(const Matroid& m, Mask a) { return deletion(m, full_mask(m.n()) & ~a); }

Matroid contraction(const Matroid& m, Mask a) {
    Mask keep = full_mask(m.n()) & ~a;
    int ra = m.rank_of(a);
    int r = m.rank() - ra;
    // contract the closure; bases are sets extending a to full rank
    std::vector<Mask> bases;
    std::vector<int> pool = elements_of(keep);
    for_each_subset_of_size(static_cast<int>(pool.size()), r, [&](Mask idxs) {
        Mask s = 0;
        for (int i : elements_of(idxs)) s |= bit(pool[i]);
        if (m.rank_of(s | a) == ra + r) bases.push_back(s);
    });
    return relabel_to_subset(m, keep, bases);
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
    if (a.n() + b.n() > kMaxGroundSet) throw std::invalid_argument("direct sum exceeds ground set cap");
    std::vector<Mask> bases;
    bases.reserve(a.bases().size() * b.bases().size());
    for (Mask ba : a.bases())
        for (Mask bb : b.bases()) bases.push_back(ba | (bb << a.n()));
    return Matroid::from_bases(a.n() + b.n(), std::move(bases));
}

Matroid add_parallel(const Matroid& m, int e) {
    if (e < 0 || e >= m.n()) throw std::invalid_argument("no such element");
    if (m.n() + 1 > kMaxGroundSet) throw std::invalid_argument("ground set cap");
    std::vector<Mask> bases = m.bases();
    for (Mask b : m.bases())
        if (has(b, e)) bases.push_back((b & ~bit(e)) | bit(m.n()));
    return Matroid::from_bases(m.n() + 1, std::move(bases));
}

std::pair<Matroid, int> strip_coloops(const Matroid& m) {
    Mask c = m.coloops();
    if (c == 0) return {m, 0};
    return {deletion(m, c), popcount(c)};
}

Matroid Matroid::simplification() const {
    Mask keep = 0;
    for (Mask c : parallel_classes()) keep |= bit(std::countr_zero(c));
    if (keep == 0 && d_ == 0) return Matroid::from_bases(0, {Mask{0}});
    return restriction(*this, keep);
}

Matroid uniform(int d, int n) {
    if (d < 0 || n < d || n > kMaxGroundSet) throw std::invalid_argument("bad uniform parameters");
    std::vector<Mask> bases;
    for_each_subset_of_size(n, d, [&](Mask s) { bases.push_back(s); });
    return Matroid::from_bases(n, std::move(bases));
}

Matroid graphic(const GraphInput& g) {
    int m = static_cast<int>(g.edges.size());
    if (m > kMaxGroundSet) throw std::invalid_argument("too many edges");
    for (auto [u, v] : g.edges)
        if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices)
            throw std::invalid_argument("edge endpoint out of range");
    auto forest_size = [&](Mask s) {
        std::vector<int> parent(g.vertices);
        for (int i = 0; i < g.vertices; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int merges = 0;
        for (int e : elements_of(s)) {
            int ru = find(g.edges[e].first), rv = find(g.edges[e].second);
            if (ru != rv) {
                parent[ru] = rv;
                ++merges;
            }
        }
        return merges;
    };
    int d = forest_size(full_mask(m));
    std::vector<Mask> bases;
    for_each_subset_of_size(m, d, [&](Mask s) {
        if (forest_size(s) == d) bases.push_back(s);
    });
    return Matroid::from_bases(m, std::move(bases));
}

Matroid vdk(int d, int k) {
    if (d < 1 || k < 1) throw std::invalid_argument("bad parameters");
    Matroid m = uniform(1, k + 1);
    for (int i = 1; i < d; ++i) m = direct_sum(m, uniform(1, 2));
    return m;
}

std::string basis_indicator(const Matroid& m) {
    std::unordered_set<Mask> bset(m.bases().begin(), m.bases().end());
    std::string out;
    out.reserve(binomial(m.n(), m.rank()));
    for_each_subset_of_size(m.n(), m.rank(), [&](Mask s) { out += bset.count(s) ? '*' : '0'; });
    return out;
}

std::string canonical_form(const Matroid& m) {
    int n = m.n(), d = m.rank();
    if (n > 10) throw std::invalid_argument("canonical form capped at n <= 10");
    if (n == 0 || d == 0) return "*";  // the single rank-0 basis
    std::unordered_set<Mask> bset(m.bases().begin(), m.bases().end());

    // Minimize the indicator string block by block: position blocks in colex
    // order are grouped by the largest element of the subset, so assigning
    // target elements 0..n-1 in order determines the string left to right.
    std::vector<std::vector<int>> cands{{}};
    std::string canon;
    for (int t = 0; t < n; ++t) {
        std::vector<std::vector<int>> best;
        std::vector<std::uint8_t> best_seg;
        bool have = false;
        for (const auto& cand : cands) {
            Mask used = 0;
            for (int s : cand) used |= bit(s);
            for (int src = 0; src < n; ++src) {
                if (has(used, src)) continue;
                std::vector<std::uint8_t> seg;
                for_each_subset_of_size(t, d - 1, [&](Mask small) {
                    Mask source = bit(src);
                    for (int e : elements_of(small)) source |= bit(cand[e]);
                    seg.push_back(bset.count(source) ? 0 : 1);
                });
                if (!have || seg < best_seg) {
                    best_seg = seg;
                    best.clear();
                    have = true;
                }
                if (seg == best_seg) {
                    best.push_back(cand);
                    best.back().push_back(src);
                }
            }
        }
        for (std::uint8_t b : best_seg) canon += b ? '0' : '*';
        cands = std::move(best);
    }
    return canon;
}

bool is_isomorphic(const Matroid& a, const Matroid& b) {
    if (a.n() != b.n() || a.rank() != b.rank()) return false;
    if (a.bases().size() != b.bases().size()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::optional<Matroid> recognize_matroid_complex(const SimplicialComplex& c, Mask* witness) {
    if (c.is_void()) throw void_complex_error{};
    if (!c.pure()) throw std::invalid_argument("matroid recognition requires a pure complex");
    if (c.n() > 20) throw std::invalid_argument("matroid recognition capped at n <= 20");
    const auto& facets = c.facets();
    for (Mask a = 0; a < (Mask{1} << c.n()); ++a) {
        std::vector<Mask> cut;
        cut.reserve(facets.size());
        for (Mask f : facets) cut.push_back(f & a);
        std::sort(cut.begin(), cut.end());
        cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
        int maxsz = -1;
        for (Mask f : cut) maxsz = std::max(maxsz, popcount(f));
        for (Mask f : cut) {
            if (popcount(f) == maxsz) continue;
            bool dominated = false;
            for (Mask g : cut)
                if (f != g && subset_of(f, g)) dominated = true;
            if (!dominated) {
                if (witness) *witness = a;
                return std::nullopt;
            }
        }
    }
    return Matroid::from_bases(c.n(), facets);
}

bool check_rank_axioms(const Matroid& m, std::uint64_t seed, int random_pairs) {
    int n = m.n();
    auto check_pair = [&](Mask a, Mask b) {
        int ra = m.rank_of(a), rb = m.rank_of(b);
        if (ra < 0 || ra > popcount(a)) return false;                       // R1
        if (subset_of(b, a) && rb > ra) return false;                       // R2
        if (m.rank_of(a & b) + m.rank_of(a | b) > ra + rb) return false;    // R3
        return true;
    };
    if (n <= 8) {
        for (Mask a = 0; a < (Mask{1} << n); ++a)
            for (Mask b = 0; b < (Mask{1} << n); ++b)
                if (!check_pair(a, b)) return false;
        return true;
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_pairs; ++i) {
        Mask a = rng() & full_mask(n);
        Mask b = rng() & full_mask(n);
        if (!check_pair(a, b) || !check_pair(a & b, a | b)) return false;
    }
    return true;
}

}  // namespace mtop
