#include "mtop/psphere.hpp"

#include <algorithm>
#include <unordered_map>

namespace mtop {

SphereShape SphereShape::of(std::vector<int> parts) {
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("sphere parts must be >= 1");
    std::sort(parts.rbegin(), parts.rend());
    return SphereShape{std::move(parts)};
}

int SphereShape::rank() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

int SphereShape::vertex_count() const { return rank() + static_cast<int>(parts.size()); }

long long SphereShape::facet_count() const {
    long long m = 1;
    for (int p : parts) m *= p + 1;
    return m;
}

std::string SphereShape::str() const {
    std::string out = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out + "]";
}

std::string BallShape::str() const { return sphere.str() + "*" + std::to_string(ell); }

SimplicialComplex realize_sphere(const SphereShape& shape) {
    std::vector<Mask> facets{0};
    int base = 0;
    for (int p : shape.parts) {
        Mask block = full_mask(p + 1) << base;
        std::vector<Mask> next;
        next.reserve(facets.size() * (p + 1));
        for (Mask f : facets)
            for (int drop = 0; drop <= p; ++drop) next.push_back(f | (block & ~bit(base + drop)));
        facets = std::move(next);
        base += p + 1;
    }
    return SimplicialComplex::from_facets(shape.vertex_count(), std::move(facets));
}

SimplicialComplex realize_ball(const BallShape& shape) {
    return join(realize_sphere(shape.sphere), SimplicialComplex::full_simplex(shape.ell + 1));
}

HVector sphere_h(const SphereShape& shape) {
    HVector h{{1}};
    for (int p : shape.parts) h = convolve(h, HVector{std::vector<long long>(p + 1, 1)});
    return h;
}

long long h_entry_bound(int d, int k, int i) {
    return binomial(d, i) + static_cast<long long>(k - 1) * binomial(d - 1, i - 1);
}

long long f_entry_bound(int d, int k, int i) {
    long long a = binomial(d, i + 1) * (1LL << (i + 1));
    long long b = i >= 0 ? static_cast<long long>(k - 1) * binomial(d - 1, i) * (1LL << i) : 0;
    return a + b;
}

namespace {

SimplicialComplex embed(const SimplicialComplex& local, const std::vector<int>& vmap, int n) {
    std::vector<Mask> facets;
    facets.reserve(local.facets().size());
    for (Mask f : local.facets()) {
        Mask g = 0;
        for (int e : elements_of(f)) g |= bit(vmap[e]);
        facets.push_back(g);
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

}  // namespace

SimplicialComplex attach_ear(const SimplicialComplex& host, const BallShape& ball,
                             const std::vector<int>& vertex_map) {
    if (host.is_void()) throw void_complex_error{};
    if (static_cast<int>(vertex_map.size()) != ball.vertex_count())
        throw std::invalid_argument("vertex map size does not match ball shape");
    int n = host.n();
    Mask seen = 0;
    for (int t : vertex_map) {
        if (t < 0 || t >= kMaxGroundSet) throw std::invalid_argument("vertex map target out of range");
        if (has(seen, t)) throw std::invalid_argument("vertex map is not injective");
        seen |= bit(t);
        n = std::max(n, t + 1);
    }
    if (ball.rank() != host.rank())
        throw std::invalid_argument("ear dimension does not match host dimension");

    SimplicialComplex local = realize_ball(ball);
    Mask local_w = full_mask(ball.ell + 1) << ball.sphere.vertex_count();
    auto host_faces = host.face_set();

    std::vector<Mask> mapped_facets;
    for (Mask f : local.face_set()) {
        Mask g = 0;
        for (int e : elements_of(f)) g |= bit(vertex_map[e]);
        bool interior = subset_of(local_w, f) && local_w != 0;
        bool in_host = host_faces.count(g) > 0;
        if (interior && in_host)
            throw ear_glue_error("host already contains an interior face of the ear", g);
        if (!interior && !in_host)
            throw ear_glue_error("ear boundary face missing from host", g);
        if (popcount(f) == ball.rank()) mapped_facets.push_back(g);
    }

    std::vector<Mask> facets = host.facets();
    facets.insert(facets.end(), mapped_facets.begin(), mapped_facets.end());
    return SimplicialComplex::from_facets(n, std::move(facets));
}

std::vector<std::vector<int>> partitions_of(int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d == 0 ? 1 : d);
    return out;
}

namespace {

struct UsedSetHash {
    size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (std::uint64_t w : v) {
            h ^= w;
            h *= 1099511628211ULL;
        }
        return static_cast<size_t>(h);
    }
};

struct EarSearcher {
    int d = 0;
    int n = 0;
    std::vector<Mask> facets;
    std::unordered_map<Mask, int> facet_index;
    std::unordered_set<Mask> all_faces;
    std::vector<int> verts;
    int target_ears = 0;
    long long budget = 0;
    long long nodes = 0;
    bool budget_hit = false;

    std::vector<std::uint64_t> used;
    int used_count = 0;
    std::unordered_map<Mask, int> face_mult;
    std::vector<int> vert_use;  // per vertex: number of used facets containing it

    std::unordered_set<std::vector<std::uint64_t>, UsedSetHash> failed;
    EarDecomposition current;
    std::optional<EarDecomposition> result;

    bool facet_used(int idx) const { return (used[idx >> 6] >> (idx & 63)) & 1; }

    bool in_delta(Mask f) const {
        auto it = face_mult.find(f);
        return it != face_mult.end() && it->second > 0;
    }

    void apply_facets(const std::vector<int>& idxs) {
        for (int idx : idxs) {
            used[idx >> 6] |= std::uint64_t{1} << (idx & 63);
            ++used_count;
            Mask f = facets[idx];
            Mask sub = f;
            while (true) {
                ++face_mult[sub];
                if (sub == 0) break;
                sub = (sub - 1) & f;
            }
            for (int e : elements_of(f)) ++vert_use[e];
        }
    }

    void rollback_facets(const std::vector<int>& idxs) {
        for (int idx : idxs) {
            used[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63));
            --used_count;
            Mask f = facets[idx];
            Mask sub = f;
            while (true) {
                auto it = face_mult.find(sub);
                if (--it->second == 0) face_mult.erase(it);
                if (sub == 0) break;
                sub = (sub - 1) & f;
            }
            for (int e : elements_of(f)) --vert_use[e];
        }
    }

    bool tick() {
        if (++nodes > budget) {
            budget_hit = true;
            return false;
        }
        return true;
    }

    // Enumerates tuples of disjoint vertex blocks realizing the shape, with
    // every partial transversal face required to pass `face_ok`.  Calls
    // `done(blocks, transversal_facets)` for every complete embedding until it
    // returns true.
    template <typename FaceOk, typename Done>
    bool enumerate_blocks(const std::vector<int>& parts, const std::vector<int>& pool,
                          FaceOk&& face_ok, Done&& done) {
        std::vector<Mask> blocks;
        std::vector<Mask> transversal{0};
        auto rec = [&](auto&& self, size_t pi, size_t min_start) -> bool {
            if (pi == parts.size()) return done(blocks, transversal);
            int size = parts[pi] + 1;
            // same-sized blocks are interchangeable; force increasing starts
            size_t start = (pi > 0 && parts[pi] == parts[pi - 1]) ? min_start : 0;
            std::vector<int> pick(size);  // indices into pool
            auto choose = [&](auto&& cself, size_t from, int got, Mask bm) -> bool {
                if (got == size) {
                    std::vector<Mask> next;
                    next.reserve(transversal.size() * size);
                    bool viable = true;
                    for (Mask f : transversal) {
                        for (int i = 0; i < size && viable; ++i) {
                            Mask cand = f | (bm & ~bit(pool[pick[i]]));
                            if (face_ok(cand))
                                next.push_back(cand);
                            else
                                viable = false;
                        }
                        if (!viable) break;
                    }
                    if (!viable) return false;
                    blocks.push_back(bm);
                    std::swap(transversal, next);
                    bool hit = self(self, pi + 1, static_cast<size_t>(pick[0]) + 1);
                    std::swap(transversal, next);
                    blocks.pop_back();
                    return hit;
                }
                for (size_t i = from; i + (size - got) <= pool.size(); ++i) {
                    int v = pool[i];
                    bool taken = false;
                    for (Mask b : blocks)
                        if (has(b, v)) taken = true;
                    if (taken) continue;
                    pick[got] = static_cast<int>(i);
                    if (cself(cself, i + 1, got + 1, bm | bit(v))) return true;
                    if (budget_hit) return false;
                }
                return false;
            };
            return choose(choose, start, 0, 0);
        };
        return rec(rec, 0, 0);
    }

    // Validates the glue condition for an ear with sphere blocks and simplex
    // block w; returns the ear's facet indices or nullopt.
    std::optional<std::vector<int>> validate_ear(const std::vector<Mask>& blocks,
                                                 const std::vector<Mask>& transversal, Mask w) {
        std::vector<int> idxs;
        idxs.reserve(transversal.size());
        for (Mask f : transversal) {
            auto it = facet_index.find(f | w);
            if (it == facet_index.end() || facet_used(it->second)) return std::nullopt;
            idxs.push_back(it->second);
        }
        // sphere faces: per-block proper subsets
        std::vector<Mask> sfaces{0};
        for (Mask b : blocks) {
            std::vector<Mask> next;
            for (Mask f : sfaces) {
                Mask sub = b;
                while (true) {
                    sub = (sub - 1) & b;  // skip the full block
                    next.push_back(f | sub);
                    if (sub == 0) break;
                }
            }
            sfaces = std::move(next);
        }
        for (Mask sf : sfaces) {
            if (in_delta(sf | w)) return std::nullopt;  // interior face met
            Mask wsub = w;
            while (true) {
                wsub = (wsub - 1) & w;  // proper subsets of w
                if (!in_delta(sf | wsub)) return std::nullopt;
                if (wsub == 0) break;
            }
        }
        return idxs;
    }

    bool search_ears() {
        if (used_count == static_cast<int>(facets.size())) {
            result = current;
            return true;
        }
        int ears_left = target_ears - static_cast<int>(current.ears.size());
        if (ears_left <= 0) return false;
        long long remaining = static_cast<long long>(facets.size()) - used_count;
        if (remaining > static_cast<long long>(ears_left) * (1LL << (d - 1))) return false;
        if (failed.count(used)) return false;
        if (!tick()) return false;

        std::vector<int> delta_verts, fresh_verts;
        for (int v : verts) (vert_use[v] > 0 ? delta_verts : fresh_verts).push_back(v);

        bool explored_all = true;
        for (int ell = d - 1; ell >= 0; --ell) {
            for (const auto& parts : shapes_by_facets(d - 1 - ell)) {
                bool hit = enumerate_blocks(
                    parts, delta_verts, [&](Mask f) { return in_delta(f); },
                    [&](const std::vector<Mask>& blocks, const std::vector<Mask>& transversal) {
                        Mask blocked = 0;
                        for (Mask b : blocks) blocked |= b;
                        return try_w_choices(blocks, transversal, blocked, ell, delta_verts,
                                             fresh_verts);
                    });
                if (hit) return true;
                if (budget_hit) {
                    explored_all = false;
                    break;
                }
            }
            if (budget_hit) break;
        }
        if (explored_all)
            failed.insert(used);
        return false;
    }

    bool try_w_choices(const std::vector<Mask>& blocks, const std::vector<Mask>& transversal,
                       Mask blocked, int ell, const std::vector<int>& delta_verts,
                       const std::vector<int>& fresh_verts) {
        if (!tick()) return false;
        const std::vector<int>& pool = ell == 0 ? fresh_verts : delta_verts;
        std::vector<int> pick;
        auto choose = [&](auto&& self, size_t from, Mask w) -> bool {
            if (static_cast<int>(pick.size()) == ell + 1) {
                auto idxs = validate_ear(blocks, transversal, w);
                if (!idxs) return false;
                apply_facets(*idxs);
                current.ears.push_back(make_ear(blocks, w, ell));
                if (search_ears()) return true;
                current.ears.pop_back();
                rollback_facets(*idxs);
                return false;
            }
            for (size_t i = from; i < pool.size(); ++i) {
                int v = pool[i];
                if (has(blocked, v)) continue;
                pick.push_back(v);
                if (self(self, i + 1, w | bit(v))) return true;
                pick.pop_back();
                if (budget_hit) return false;
            }
            return false;
        };
        return choose(choose, 0, 0);
    }

    static EarEmbedding make_ear(const std::vector<Mask>& blocks, Mask w, int ell) {
        EarEmbedding ear;
        std::vector<int> parts;
        std::vector<int> vmap;
        for (Mask b : blocks) {
            parts.push_back(popcount(b) - 1);
            for (int v : elements_of(b)) vmap.push_back(v);
        }
        for (int v : elements_of(w)) vmap.push_back(v);
        ear.ball = BallShape{SphereShape{parts}, ell};
        ear.vertex_map = std::move(vmap);
        return ear;
    }

    // partitions of r ordered by decreasing realized facet count
    static const std::vector<std::vector<int>>& shapes_by_facets(int r) {
        static std::vector<std::vector<std::vector<int>>> cache;
        while (static_cast<int>(cache.size()) <= r) {
            int v = static_cast<int>(cache.size());
            auto parts = partitions_of(v);
            std::stable_sort(parts.begin(), parts.end(),
                             [](const std::vector<int>& a, const std::vector<int>& b) {
                                 long long fa = 1, fb = 1;
                                 for (int p : a) fa *= p + 1;
                                 for (int p : b) fb *= p + 1;
                                 return fa > fb;
                             });
            cache.push_back(std::move(parts));
        }
        return cache[r];
    }
};

}  // namespace

EarSearchResult find_ear_decomposition(const SimplicialComplex& c, long long node_budget) {
    if (c.is_void()) throw void_complex_error{};
    if (!c.pure()) throw std::invalid_argument("ear decomposition search requires a pure complex");

    EarSearchResult res;
    long long chi = reduced_euler(c);
    long long k = chi < 0 ? -chi : chi;
    if (k == 0) {
        res.status = SearchStatus::None;  // cones are never unions of sphere and balls here
        return res;
    }

    EarSearcher s;
    s.d = c.rank();
    s.n = c.n();
    s.facets = c.facets();
    for (size_t i = 0; i < s.facets.size(); ++i) s.facet_index[s.facets[i]] = static_cast<int>(i);
    s.all_faces = c.face_set();
    s.verts = elements_of(c.vertex_support());
    s.target_ears = static_cast<int>(k) - 1;
    s.budget = node_budget;
    s.used.assign((s.facets.size() + 63) / 64, 0);
    s.vert_use.assign(c.n(), 0);

    long long m = static_cast<long long>(s.facets.size());
    for (const auto& parts : EarSearcher::shapes_by_facets(s.d)) {
        SphereShape shape = SphereShape{parts};
        if (shape.facet_count() > m) continue;
        if (shape.vertex_count() > static_cast<int>(s.verts.size())) continue;
        if (s.d > 0 && m - shape.facet_count() >
                           static_cast<long long>(s.target_ears) * (1LL << (s.d - 1)))
            continue;
        bool hit = s.enumerate_blocks(
            parts, s.verts, [&](Mask f) { return s.all_faces.count(f) > 0; },
            [&](const std::vector<Mask>& blocks, const std::vector<Mask>& transversal) {
                if (!s.tick()) return false;
                std::vector<int> idxs;
                idxs.reserve(transversal.size());
                for (Mask f : transversal) {
                    auto it = s.facet_index.find(f);
                    if (it == s.facet_index.end()) return false;
                    idxs.push_back(it->second);
                }
                s.apply_facets(idxs);
                s.current.base = SphereShape{parts};
                s.current.base_map.clear();
                for (Mask b : blocks)
                    for (int v : elements_of(b)) s.current.base_map.push_back(v);
                bool ok = s.search_ears();
                if (!ok) s.rollback_facets(idxs);
                return ok;
            });
        if (hit) {
            res.status = SearchStatus::Found;
            res.decomposition = s.result;
            res.nodes = s.nodes;
            return res;
        }
        if (s.budget_hit) break;
    }
    res.status = s.budget_hit ? SearchStatus::Budget : SearchStatus::None;
    res.nodes = s.nodes;
    return res;
}

SimplicialComplex replay_decomposition(const EarDecomposition& dec, int n) {
    SimplicialComplex acc = embed(realize_sphere(dec.base), dec.base_map, n);
    for (const auto& ear : dec.ears) acc = attach_ear(acc, ear.ball, ear.vertex_map);
    return acc;
}

}  // namespace mtop
