#include "mtop/census.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace mtop {

namespace {

// ---------------------------------------------------------------------------
// Orderly generation: depth-first over the colex basis-indicator string.  A
// family is emitted iff it satisfies exchange and its indicator string is
// minimal ('*' before '0') over all ground-set permutations.  Permutation
// comparisons advance incrementally as positions get decided, so non-minimal
// prefixes are abandoned early; exchange requirements become pending
// constraints whose unfixability prunes the subtree.
// ---------------------------------------------------------------------------

struct GenShared {
    int n = 0, d = 0;
    int N = 0;
    std::vector<Mask> subsets;            // colex order
    std::vector<int> pos_of;              // mask -> position
    std::vector<std::vector<std::uint16_t>> inv;  // inv[sig][j] = pos(sig^{-1}(S_j))
    std::vector<Mask> suffix_union;       // union of subsets[q..]

    GenShared(int n_, int d_) : n(n_), d(d_) {
        if (n > 8) throw cap_exceeded_error("orderly generator capped at n <= 8");
        N = static_cast<int>(binomial(n, d));
        subsets.reserve(N);
        for_each_subset_of_size(n, d, [&](Mask s) { subsets.push_back(s); });
        pos_of.assign(size_t{1} << n, -1);
        for (int i = 0; i < N; ++i) pos_of[subsets[i]] = i;
        suffix_union.assign(N + 1, 0);
        for (int i = N - 1; i >= 0; --i) suffix_union[i] = suffix_union[i + 1] | subsets[i];

        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            std::vector<int> pinv(n);
            for (int i = 0; i < n; ++i) pinv[perm[i]] = i;
            std::vector<std::uint16_t> row(N);
            for (int j = 0; j < N; ++j) {
                Mask img = 0;
                for (int e : elements_of(subsets[j])) img |= bit(pinv[e]);
                row[j] = static_cast<std::uint16_t>(pos_of[img]);
            }
            inv.push_back(std::move(row));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
};

struct LiveSigma {
    int sig;
    int ptr;
};

struct Constraint {
    std::vector<int> cands;  // candidate positions, sorted ascending
    bool satisfied = false;
};

struct OrderlyGen {
    const GenShared& sh;
    bool loopless;
    std::vector<std::uint8_t> s;
    std::vector<Mask> family;
    std::vector<Mask> union_stack{0};
    std::vector<Constraint> constraints;
    int pending = 0;
    std::vector<std::vector<Mask>> out;

    explicit OrderlyGen(const GenShared& shared, bool loopless_)
        : sh(shared), loopless(loopless_), s(shared.N, 0) {}

    struct UndoInfo {
        size_t constraints_size;
        std::vector<int> satisfied_now;
    };

    // Returns false when some exchange requirement is definitely unfixable.
    bool include(int q, UndoInfo& undo) {
        s[q] = 1;
        Mask bq = sh.subsets[q];
        undo.constraints_size = constraints.size();
        // existing pending constraints may be satisfied by q
        for (size_t ci = 0; ci < undo.constraints_size; ++ci) {
            Constraint& c = constraints[ci];
            if (c.satisfied) continue;
            if (std::binary_search(c.cands.begin(), c.cands.end(), q)) {
                c.satisfied = true;
                --pending;
                undo.satisfied_now.push_back(static_cast<int>(ci));
            }
        }
        bool ok = true;
        for (Mask bi : family) {
            if (!add_pair_constraints(bi, bq, q) || !add_pair_constraints(bq, bi, q)) {
                ok = false;
                break;
            }
        }
        family.push_back(bq);
        union_stack.push_back(union_stack.back() | bq);
        return ok;
    }

    bool add_pair_constraints(Mask b1, Mask b2, int q) {
        Mask only1 = b1 & ~b2;
        Mask only2 = b2 & ~b1;
        for (int x : elements_of(only1)) {
            bool satisfied = false;
            std::vector<int> future;
            for (int y : elements_of(only2)) {
                int cpos = sh.pos_of[(b1 & ~bit(x)) | bit(y)];
                if (s[cpos]) {
                    satisfied = true;
                    break;
                }
                if (cpos > q) future.push_back(cpos);
            }
            if (satisfied) continue;
            if (future.empty()) return false;
            std::sort(future.begin(), future.end());
            constraints.push_back(Constraint{std::move(future), false});
            ++pending;
        }
        return true;
    }

    void rollback(int q, const UndoInfo& undo) {
        s[q] = 0;
        family.pop_back();
        union_stack.pop_back();
        pending -= static_cast<int>(constraints.size() - undo.constraints_size);
        // popped constraints counted in pending only if unsatisfied
        for (size_t ci = undo.constraints_size; ci < constraints.size(); ++ci)
            if (constraints[ci].satisfied) ++pending;
        constraints.resize(undo.constraints_size);
        for (int ci : undo.satisfied_now) {
            constraints[ci].satisfied = false;
            ++pending;
        }
    }

    enum class Verdict { Continue, Prune };

    // Advances comparison pointers given that positions [0, decided) are set.
    Verdict advance(const std::vector<LiveSigma>& live, int decided,
                    std::vector<LiveSigma>& next) const {
        next.clear();
        for (LiveSigma ls : live) {
            const auto& row = sh.inv[ls.sig];
            int j = ls.ptr;
            bool dead = false;
            while (j < sh.N && j < decided && row[j] < decided) {
                std::uint8_t t = s[row[j]];
                std::uint8_t sj = s[j];
                if (t != sj) {
                    if (t > sj) return Verdict::Prune;  // image has '*' earlier: smaller
                    dead = true;                        // image larger, never minimal
                    break;
                }
                ++j;
            }
            if (dead || j >= sh.N) continue;
            next.push_back({ls.sig, j});
        }
        return Verdict::Continue;
    }

    bool emit_if_canonical(const std::vector<LiveSigma>& live) {
        for (LiveSigma ls : live) {
            const auto& row = sh.inv[ls.sig];
            for (int j = ls.ptr; j < sh.N; ++j) {
                std::uint8_t t = s[row[j]];
                std::uint8_t sj = s[j];
                if (t != sj) {
                    if (t > sj) return false;  // a strictly smaller relabeling exists
                    break;
                }
            }
        }
        if (loopless && union_stack.back() != full_mask(sh.n)) return true;
        out.push_back(family);
        return true;
    }

    void dfs(int i_m, const std::vector<LiveSigma>& live) {
        // whether or not this complete family is canonical, extensions may be
        if (pending == 0) emit_if_canonical(live);
        int qmax = sh.N - 1;
        for (const Constraint& c : constraints)
            if (!c.satisfied) qmax = std::min(qmax, c.cands.back());
        std::vector<LiveSigma> next;
        for (int q = i_m + 1; q <= qmax; ++q) {
            if (loopless && (union_stack.back() | sh.suffix_union[q]) != full_mask(sh.n)) break;
            UndoInfo undo;
            bool feasible = include(q, undo);
            if (feasible && advance(live, q + 1, next) == Verdict::Continue) {
                dfs(q, next);
            }
            rollback(q, undo);
        }
    }
};

}  // namespace

std::vector<Matroid> enumerate_matroids(int n, int d, const GenOptions& opts) {
    if (n < 0 || d < 0 || d > n) throw std::invalid_argument("bad generator parameters");
    GenShared sh(n, d);
    if (sh.N == 0) return {};

    auto run_subtree = [&](int second_q /* -1: whole tree */) {
        OrderlyGen gen(sh, opts.loopless);
        std::vector<LiveSigma> live;
        live.reserve(sh.inv.size());
        for (size_t i = 0; i < sh.inv.size(); ++i) live.push_back({static_cast<int>(i), 0});
        // canonical families always include position 0
        OrderlyGen::UndoInfo u0;
        gen.include(0, u0);
        std::vector<LiveSigma> live1;
        if (gen.advance(live, 1, live1) == OrderlyGen::Verdict::Prune) return gen;
        if (second_q < 0) {
            gen.dfs(0, live1);
            return gen;
        }
        if (second_q == 0) {  // the single-basis leaf
            if (gen.pending == 0) gen.emit_if_canonical(live1);
            return gen;
        }
        int qmax = sh.N - 1;
        for (const Constraint& c : gen.constraints)
            if (!c.satisfied) qmax = std::min(qmax, c.cands.back());
        if (second_q > qmax) return gen;
        if (opts.loopless &&
            (gen.union_stack.back() | sh.suffix_union[second_q]) != full_mask(sh.n))
            return gen;
        OrderlyGen::UndoInfo u1;
        std::vector<LiveSigma> live2;
        if (gen.include(second_q, u1) &&
            gen.advance(live1, second_q + 1, live2) == OrderlyGen::Verdict::Continue)
            gen.dfs(second_q, live2);
        return gen;
    };

    std::vector<std::vector<Mask>> families;
    if (opts.threads <= 1 || sh.N <= 2) {
        OrderlyGen gen = run_subtree(-1);
        families = std::move(gen.out);
    } else {
        // distribute second-inclusion subtrees over workers; merge in order
        std::vector<int> jobs;
        jobs.push_back(0);
        for (int q = 1; q < sh.N; ++q) jobs.push_back(q);
        std::vector<std::vector<std::vector<Mask>>> results(jobs.size());
        std::atomic<size_t> cursor{0};
        int nthreads = std::min<int>(opts.threads, static_cast<int>(jobs.size()));
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                while (true) {
                    size_t i = cursor.fetch_add(1);
                    if (i >= jobs.size()) break;
                    OrderlyGen gen = run_subtree(jobs[i]);
                    results[i] = std::move(gen.out);
                }
            });
        for (auto& th : pool) th.join();
        for (auto& r : results)
            for (auto& f : r) families.push_back(std::move(f));
    }

    std::vector<Matroid> out;
    out.reserve(families.size());
    for (auto& f : families) out.push_back(Matroid::from_bases(n, std::move(f)));
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t fnv(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

CensusRecord make_record(const Matroid& m, int order_samples) {
    CensusRecord r;
    r.canonical = canonical_form(m);
    r.n = m.n();
    r.d = m.rank();
    r.basis_count = static_cast<long long>(m.bases().size());
    SimplicialComplex ind = m.independence_complex();
    r.h_ind = h_vector(ind);
    long long chi = reduced_euler(ind);
    r.chi_ind = chi < 0 ? -chi : chi;
    r.loopless = m.loops() == 0;
    r.simple = m.is_simple();
    r.connected = m.is_connected();
    r.coloop_free = m.is_coloop_free();
    if (r.loopless) {
        auto bc_chi = [&](const ElementOrder& o) {
            long long c = reduced_euler(reduced_bc_complex(OrderedMatroid(m, o)));
            return c < 0 ? -c : c;
        };
        r.chi_bc_reduced = bc_chi(ElementOrder::natural(m.n()));
        r.chi_bc_min = r.chi_bc_max = r.chi_bc_reduced;
        std::mt19937_64 rng(fnv(r.canonical));
        std::vector<int> perm(m.n());
        for (int i = 0; i < m.n(); ++i) perm[i] = i;
        for (int t = 0; t < order_samples; ++t) {
            std::shuffle(perm.begin(), perm.end(), rng);
            long long c = bc_chi(ElementOrder::of(perm));
            r.chi_bc_min = std::min(r.chi_bc_min, c);
            r.chi_bc_max = std::max(r.chi_bc_max, c);
        }
        long long mu = mobius(lattice_of_flats(m));
        r.chi_flats = mu < 0 ? -mu : mu;
    }
    return r;
}

PsiResult psi(const PsiQuery& q, const CensusCaps& caps, int threads) {
    if (q.d < 0 || q.k < 0) throw std::invalid_argument("bad psi parameters");
    PsiResult res;
    res.n_max_needed = 2 * q.d + q.k - 1;
    int limit = q.n_max > 0 ? q.n_max : res.n_max_needed;
    res.n_max_used = std::min(limit, std::min(caps.nmax_for(q.d), caps.hard_cap));
    res.complete = res.n_max_used >= res.n_max_needed;
    for (int n = q.d; n <= res.n_max_used; ++n) {
        for (Matroid& m : enumerate_matroids(n, q.d, GenOptions{true, threads})) {
            SimplicialComplex ind = m.independence_complex();
            long long chi = reduced_euler(ind);
            if ((chi < 0 ? -chi : chi) != q.k) continue;
            if (q.filter != PsiQuery::Filter::All && !m.is_simple()) continue;
            if (q.filter == PsiQuery::Filter::SimpleConnected && !m.is_connected()) continue;
            res.records.push_back(make_record(m));
            res.matroids.push_back(std::move(m));
        }
    }
    return res;
}

TdkResult tdk(int d, int k, const CensusCaps& caps) {
    if (d < 0 || k < 1) throw std::invalid_argument("bad parameters");
    TdkResult res;
    for (int r = 0; r <= d; ++r) {
        int lo = r == 0 ? 0 : r + 1;
        int hi = r == 0 ? 0 : r + k - 1;
        if (hi > caps.hard_cap) throw cap_exceeded_error("tdk sweep exceeds generator cap");
        for (int n = lo; n <= hi; ++n) {
            for (const Matroid& m : enumerate_matroids(n, r, GenOptions{true, 1})) {
                if (!m.is_coloop_free()) continue;
                if (static_cast<long long>(m.bases().size()) > k) continue;
                ++res.core_classes;
                res.count += d - r + 1;
            }
        }
        if (r == 0) {
            ++res.core_classes;  // the empty matroid
            res.count += d + 1;
        }
    }
    return res;
}

PureOResult pure_o_certificate(const HVector& h, long long budget) {
    PureOResult res;
    if (h.h.empty() || h.h[0] != 1) throw std::invalid_argument("h_0 must be 1");
    for (long long v : h.h)
        if (v < 0) throw std::invalid_argument("h entries must be nonnegative");
    int d = h.rank();
    if (d == 0) {
        res.status = SearchStatus::Found;
        res.tops = {{}};
        return res;
    }
    int v = static_cast<int>(h.h[1]);
    long long want_top = h.h[d];
    if (want_top == 0 || (v == 0 && d >= 1)) {
        res.status = SearchStatus::None;
        return res;
    }
    // all degree-d monomials in v variables
    std::vector<std::vector<int>> monos;
    std::vector<int> cur(v, 0);
    auto gen = [&](auto&& self, int var, int left) -> void {
        if (var == v - 1) {
            cur[var] = left;
            monos.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, left - e);
        }
    };
    gen(gen, 0, d);

    long long nodes = 0;
    std::vector<int> chosen;
    std::set<std::vector<int>> closure;
    std::vector<long long> degcount(d + 1, 0);

    auto divisors_ok = [&](const std::vector<int>& mono, auto&& add) {
        // enumerate divisors, add new ones; fail when a degree overflows h
        std::vector<int> e(v, 0);
        auto rec = [&](auto&& self, int var) -> bool {
            if (var == v) {
                if (!closure.count(e)) {
                    int deg = 0;
                    for (int x : e) deg += x;
                    if (degcount[deg] + 1 > h.h[deg]) return false;
                    add(e, deg);
                }
                return true;
            }
            for (int x = 0; x <= mono[var]; ++x) {
                e[var] = x;
                if (!self(self, var + 1)) return false;
            }
            return true;
        };
        return rec(rec, 0);
    };

    std::function<bool(size_t)> bt = [&](size_t from) -> bool {
        if (++nodes > budget) return false;
        if (static_cast<long long>(chosen.size()) == want_top) {
            for (int deg = 0; deg <= d; ++deg)
                if (degcount[deg] != h.h[deg]) return false;
            for (int idx : chosen) res.tops.push_back(monos[idx]);
            return true;
        }
        for (size_t i = from; i < monos.size(); ++i) {
            std::vector<std::vector<int>> added;
            bool ok = divisors_ok(monos[i], [&](const std::vector<int>& e, int deg) {
                closure.insert(e);
                ++degcount[deg];
                added.push_back(e);
            });
            if (ok) {
                chosen.push_back(static_cast<int>(i));
                if (bt(i + 1)) return true;
                chosen.pop_back();
            }
            for (const auto& e : added) {
                closure.erase(e);
                int deg = 0;
                for (int x : e) deg += x;
                --degcount[deg];
            }
            if (nodes > budget) return false;
        }
        return false;
    };
    bool found = bt(0);
    res.status = found ? SearchStatus::Found
                       : (nodes > budget ? SearchStatus::Budget : SearchStatus::None);
    return res;
}

// ---------------------------------------------------------------------------

namespace {

std::string join_csv(const std::vector<long long>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

bool flawless_ok(const HVector& h) {
    std::vector<long long> t = h.h;
    while (t.size() > 1 && t.back() == 0) t.pop_back();
    int s = static_cast<int>(t.size()) - 1;
    for (int i = 0; i + 1 <= s / 2; ++i)
        if (t[i] > t[i + 1]) return false;
    for (int i = 0; i <= s / 2; ++i)
        if (t[i] > t[s - i]) return false;
    return true;
}

bool logconcave_ok(const HVector& h) {
    for (size_t i = 1; i + 1 < h.h.size(); ++i)
        if (h.h[i] * h.h[i] < h.h[i - 1] * h.h[i + 1]) return false;
    return true;
}

}  // namespace

Report verify_suite(const std::string& name, int d_max, int k_max, const CensusCaps& caps,
                    int threads) {
    Report rep;
    rep.command = "verify " + name;
    rep.config = {{"dmax", std::to_string(d_max)},
                  {"kmax", std::to_string(k_max)},
                  {"nmax_low_rank", std::to_string(caps.nmax_low_rank)},
                  {"nmax_general", std::to_string(caps.nmax_general)}};

    auto sweep_psi = [&](int d, int k) { return psi(PsiQuery{d, k}, caps, threads); };

    if (name == "hb") {
        rep.table_header = {"d", "k", "classes", "violations"};
        for (int d = 1; d <= d_max; ++d)
            for (int k = 1; k <= k_max; ++k) {
                PsiResult r = sweep_psi(d, k);
                long long bad = 0;
                for (const auto& rec : r.records) {
                    FVector f = f_from_h(rec.h_ind);
                    for (int i = 0; i <= d; ++i)
                        if (rec.h_ind.h[i] > h_entry_bound(d, k, i)) {
                            ++bad;
                            rep.violations.push_back("h bound: d=" + std::to_string(d) +
                                                     " k=" + std::to_string(k) + " " + rec.canonical);
                        }
                    for (int i = -1; i <= d - 1; ++i)
                        if (f.counts[i + 1] > f_entry_bound(d, k, i)) {
                            ++bad;
                            rep.violations.push_back("f bound: d=" + std::to_string(d) +
                                                     " k=" + std::to_string(k) + " " + rec.canonical);
                        }
                    if (rec.h_ind.h[1] > static_cast<long long>(d) * k) {
                        ++bad;
                        rep.violations.push_back("h1 <= d*hd: " + rec.canonical);
                    }
                }
                rep.table.push_back({std::to_string(d), std::to_string(k),
                                     std::to_string(r.records.size()), std::to_string(bad)});
            }
    } else if (name == "f0" || name == "uniq") {
        rep.table_header = {"d", "k", "classes", "at_bound", "vdk_match"};
        for (int d = 1; d <= d_max; ++d)
            for (int k = 1; k <= k_max; ++k) {
                PsiResult r = sweep_psi(d, k);
                long long at_bound = 0;
                std::string at_bound_canon;
                for (const auto& rec : r.records) {
                    if (rec.n > 2 * d + k - 1)
                        rep.violations.push_back("f0 bound: " + rec.canonical);
                    if (rec.n == 2 * d + k - 1) {
                        ++at_bound;
                        at_bound_canon = rec.canonical;
                    }
                }
                bool match = false;
                if (r.complete) {
                    if (at_bound != 1)
                        rep.violations.push_back("expected unique maximizer at d=" +
                                                 std::to_string(d) + " k=" + std::to_string(k));
                    else {
                        match = at_bound_canon == canonical_form(vdk(d, k));
                        if (!match)
                            rep.violations.push_back("maximizer is not vdk at d=" +
                                                     std::to_string(d) + " k=" + std::to_string(k));
                    }
                }
                rep.table.push_back({std::to_string(d), std::to_string(k),
                                     std::to_string(r.records.size()), std::to_string(at_bound),
                                     match ? "yes" : "no"});
            }
    } else if (name == "basisbound") {
        rep.table_header = {"d", "k", "classes", "max_bases", "bound"};
        for (int d = 1; d <= d_max; ++d)
            for (int k = 1; k <= k_max; ++k) {
                PsiResult r = sweep_psi(d, k);
                long long mx = 0;
                long long bound = (1LL << d) * k;
                for (const auto& rec : r.records) {
                    mx = std::max(mx, rec.basis_count);
                    if (rec.basis_count > bound)
                        rep.violations.push_back("basis bound: " + rec.canonical);
                }
                rep.table.push_back({std::to_string(d), std::to_string(k),
                                     std::to_string(r.records.size()), std::to_string(mx),
                                     std::to_string(bound)});
            }
    } else if (name == "tref") {
        rep.table_header = {"d", "k", "psi", "tdk", "bound"};
        for (int d = 1; d <= d_max; ++d)
            for (int k = 1; k <= k_max; ++k) {
                PsiResult r = sweep_psi(d, k);
                TdkResult t = tdk(d, k, caps);
                long long bound = (1LL << d) * k * t.count;
                if (static_cast<long long>(r.records.size()) > bound)
                    rep.violations.push_back("tref bound fails at d=" + std::to_string(d) +
                                             " k=" + std::to_string(k));
                rep.table.push_back({std::to_string(d), std::to_string(k),
                                     std::to_string(r.records.size()), std::to_string(t.count),
                                     std::to_string(bound)});
            }
    } else if (name == "monot") {
        rep.table_header = {"d", "k", "psi_1", "psi_k"};
        for (int d = 1; d <= d_max; ++d) {
            PsiResult r1 = sweep_psi(d, 1);
            for (int k = 1; k <= k_max; ++k) {
                PsiResult rk = sweep_psi(d, k);
                if (rk.records.size() < r1.records.size())
                    rep.violations.push_back("monotonicity fails at d=" + std::to_string(d) +
                                             " k=" + std::to_string(k));
                rep.table.push_back({std::to_string(d), std::to_string(k),
                                     std::to_string(r1.records.size()),
                                     std::to_string(rk.records.size())});
            }
        }
    } else if (name == "flawless" || name == "logconc") {
        bool log = name == "logconc";
        rep.table_header = {"n", "d", "classes", "violations"};
        int nmax = std::min(caps.nmax_general, caps.hard_cap);
        for (int n = 0; n <= nmax; ++n)
            for (int d = 0; d <= n && d <= (d_max > 0 ? d_max : n); ++d) {
                auto ms = enumerate_matroids(n, d, GenOptions{true, threads});
                long long bad = 0;
                for (const Matroid& m : ms) {
                    std::vector<HVector> hs;
                    SimplicialComplex ind = m.independence_complex();
                    Mask cl = m.coloops();
                    if (cl == 0) hs.push_back(h_vector(ind));  // flawlessness needs no cone points
                    OrderedMatroid om = OrderedMatroid::natural(m);
                    hs.push_back(h_vector(reduced_bc_complex(om)));
                    if (log) hs.push_back(h_vector(bc_complex(om)));
                    if (m.is_simple()) {
                        FVector f = order_complex_f_vector(lattice_of_flats(m));
                        hs.push_back(h_from_f(f));
                    }
                    for (const HVector& h : hs) {
                        bool ok = log ? logconcave_ok(h) : flawless_ok(h);
                        if (!ok) {
                            ++bad;
                            rep.violations.push_back(name + " fails: n=" + std::to_string(n) +
                                                     " d=" + std::to_string(d) + " " +
                                                     canonical_form(m) + " h=" + h.str());
                        }
                    }
                }
                if (!ms.empty())
                    rep.table.push_back({std::to_string(n), std::to_string(d),
                                         std::to_string(ms.size()), std::to_string(bad)});
            }
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    return rep;
}

Report bc_conjecture_scan(int d, int k, int n_max, const CensusCaps& caps, int threads) {
    Report rep;
    rep.command = "bc-scan";
    int limit = std::min(n_max, caps.hard_cap);
    rep.config = {{"d", std::to_string(d)},
                  {"k", std::to_string(k)},
                  {"nmax", std::to_string(limit)},
                  {"orders", "exhaustive n<=6, 50 sampled otherwise"},
                  {"completeness", "lower bound only"}};
    rep.table_header = {"n", "canonical", "orders_swept", "top_values", "attains_k"};
    long long attaining = 0;
    for (int n = d; n <= limit; ++n) {
        for (const Matroid& m : enumerate_matroids(n, d, GenOptions{true, threads})) {
            if (!m.is_simple() || !m.is_connected()) continue;
            std::set<long long> tops;
            long long orders = 0;
            auto consider = [&](const ElementOrder& o) {
                SimplicialComplex r = reduced_bc_complex(OrderedMatroid(m, o));
                long long chi = reduced_euler(r);
                tops.insert(chi < 0 ? -chi : chi);
                ++orders;
            };
            if (n <= 6) {
                std::vector<int> perm(n);
                for (int i = 0; i < n; ++i) perm[i] = i;
                do consider(ElementOrder::of(perm));
                while (std::next_permutation(perm.begin(), perm.end()));
            } else {
                std::mt19937_64 rng(fnv(canonical_form(m)) ^ 0x9e3779b97f4a7c15ULL);
                std::vector<int> perm(n);
                for (int i = 0; i < n; ++i) perm[i] = i;
                consider(ElementOrder::natural(n));
                for (int t = 0; t < 49; ++t) {
                    std::shuffle(perm.begin(), perm.end(), rng);
                    consider(ElementOrder::of(perm));
                }
            }
            bool hit = tops.count(k) > 0;
            if (hit) ++attaining;
            std::vector<long long> tv(tops.begin(), tops.end());
            rep.table.push_back({std::to_string(n), canonical_form(m), std::to_string(orders),
                                 join_csv(tv), hit ? "yes" : "no"});
        }
    }
    rep.config.emplace_back("classes_attaining_k", std::to_string(attaining));
    return rep;
}

Catalog read_catalog(std::istream& in) {
    Catalog cat;
    if (!(in >> cat.n >> cat.d)) throw std::invalid_argument("catalog: bad header");
    long long N = binomial(cat.n, cat.d);
    std::vector<Mask> subsets;
    for_each_subset_of_size(cat.n, cat.d, [&](Mask s) { subsets.push_back(s); });
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (static_cast<long long>(line.size()) != N)
            throw std::invalid_argument("catalog: line length mismatch");
        std::vector<Mask> fam;
        for (long long i = 0; i < N; ++i) {
            if (line[i] == '*')
                fam.push_back(subsets[i]);
            else if (line[i] != '0')
                throw std::invalid_argument("catalog: bad character");
        }
        cat.families.push_back(std::move(fam));
    }
    return cat;
}

void write_catalog(std::ostream& out, int n, int d, const std::vector<Matroid>& matroids) {
    out << n << " " << d << "\n";
    for (const Matroid& m : matroids) {
        if (m.n() != n || m.rank() != d) throw std::invalid_argument("catalog: shape mismatch");
        out << basis_indicator(m) << "\n";
    }
}

}  // namespace mtop
