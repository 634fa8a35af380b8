#include "mtop/simplicial.hpp"

#include <algorithm>

namespace mtop {

std::string FVector::str() const {
    std::string out;
    for (size_t i = 0; i < counts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(counts[i]);
    }
    return out;
}

std::string HVector::str() const {
    std::string out;
    for (size_t i = 0; i < h.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(h[i]);
    }
    return out;
}

HVector convolve(const HVector& a, const HVector& b) {
    std::vector<long long> out(a.h.size() + b.h.size() - 1, 0);
    for (size_t i = 0; i < a.h.size(); ++i)
        for (size_t j = 0; j < b.h.size(); ++j) out[i + j] += a.h[i] * b.h[j];
    return HVector{out};
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<Mask> facets) {
    if (n < 0 || n > kMaxGroundSet) throw std::invalid_argument("ground set size out of range");
    for (Mask f : facets)
        if (!subset_of(f, full_mask(n))) throw std::invalid_argument("facet exceeds ground set");
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // keep maximal faces only
    std::vector<Mask> maximal;
    for (size_t i = 0; i < facets.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < facets.size() && !dominated; ++j)
            if (i != j && subset_of(facets[i], facets[j])) dominated = true;
        if (!dominated) maximal.push_back(facets[i]);
    }
    SimplicialComplex c;
    c.n_ = n;
    c.facets_ = std::move(maximal);
    return c;
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
    SimplicialComplex c;
    c.n_ = n;
    return c;
}

SimplicialComplex SimplicialComplex::empty_complex(int n) {
    return from_facets(n, {Mask{0}});
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
    return from_facets(n, {full_mask(n)});
}

int SimplicialComplex::rank() const {
    if (is_void()) throw void_complex_error{};
    int r = 0;
    for (Mask f : facets_) r = std::max(r, popcount(f));
    return r;
}

bool SimplicialComplex::pure() const {
    if (is_void()) throw void_complex_error{};
    int r = rank();
    for (Mask f : facets_)
        if (popcount(f) != r) return false;
    return true;
}

bool SimplicialComplex::contains(Mask face) const {
    for (Mask f : facets_)
        if (subset_of(face, f)) return true;
    return false;
}

Mask SimplicialComplex::vertex_support() const {
    Mask m = 0;
    for (Mask f : facets_) m |= f;
    return m;
}

std::unordered_set<Mask> SimplicialComplex::face_set() const {
    std::unordered_set<Mask> faces;
    for (Mask f : facets_) {
        Mask sub = f;
        while (true) {
            faces.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    return faces;
}

FVector f_vector(const SimplicialComplex& c) {
    if (c.is_void()) throw void_complex_error{};
    int r = c.rank();
    std::vector<long long> counts(r + 1, 0);
    for (Mask face : c.face_set()) counts[popcount(face)]++;
    return FVector{counts};
}

HVector h_from_f(const FVector& f) {
    int d = f.rank();
    std::vector<long long> h(d + 1, 0);
    for (int j = 0; j <= d; ++j)
        for (int i = 0; i <= j; ++i) {
            long long c = binomial(d - i, j - i);
            h[j] += ((j - i) % 2 == 0 ? c : -c) * f.counts[i];
        }
    return HVector{h};
}

FVector f_from_h(const HVector& h) {
    int d = h.rank();
    std::vector<long long> f(d + 1, 0);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= i; ++j) f[i] += binomial(d - j, i - j) * h.h[j];
    return FVector{f};
}

HVector h_vector(const SimplicialComplex& c) { return h_from_f(f_vector(c)); }

long long reduced_euler(const SimplicialComplex& c) {
    FVector f = f_vector(c);
    long long chi = 0;
    for (size_t j = 0; j < f.counts.size(); ++j) chi += (j % 2 == 0 ? -1 : 1) * f.counts[j];
    return chi;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(a.n() + b.n());
    if (a.n() + b.n() > kMaxGroundSet) throw std::invalid_argument("join exceeds ground set cap");
    std::vector<Mask> facets;
    facets.reserve(a.facets().size() * b.facets().size());
    for (Mask fa : a.facets())
        for (Mask fb : b.facets()) facets.push_back(fa | (fb << a.n()));
    return SimplicialComplex::from_facets(a.n() + b.n(), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& c, Mask face) {
    if (c.is_void()) throw void_complex_error{};
    if (!c.contains(face)) throw face_error{face};
    std::vector<Mask> facets;
    for (Mask f : c.facets())
        if (subset_of(face, f)) facets.push_back(f & ~face);
    return SimplicialComplex::from_facets(c.n(), std::move(facets));
}

SimplicialComplex restriction(const SimplicialComplex& c, Mask a) {
    if (c.is_void()) return c;
    std::vector<Mask> facets;
    for (Mask f : c.facets()) facets.push_back(f & a);
    return SimplicialComplex::from_facets(c.n(), std::move(facets));
}

Mask cone_points(const SimplicialComplex& c) {
    if (c.is_void()) throw void_complex_error{};
    Mask m = full_mask(c.n());
    for (Mask f : c.facets()) m &= f;
    return m;
}

SimplicialComplex remove_cone_points(const SimplicialComplex& c) {
    Mask cp = cone_points(c);
    std::vector<Mask> facets;
    for (Mask f : c.facets()) facets.push_back(f & ~cp);
    return SimplicialComplex::from_facets(c.n(), std::move(facets));
}

SimplicialComplex densify(const SimplicialComplex& c, std::vector<int>* old_of_new) {
    if (c.is_void()) {
        if (old_of_new) old_of_new->clear();
        return SimplicialComplex::void_complex(0);
    }
    std::vector<int> verts = elements_of(c.vertex_support());
    std::vector<int> new_of_old(c.n(), -1);
    for (size_t i = 0; i < verts.size(); ++i) new_of_old[verts[i]] = static_cast<int>(i);
    std::vector<Mask> facets;
    for (Mask f : c.facets()) {
        Mask g = 0;
        for (int e : elements_of(f)) g |= bit(new_of_old[e]);
        facets.push_back(g);
    }
    if (old_of_new) *old_of_new = verts;
    return SimplicialComplex::from_facets(static_cast<int>(verts.size()), std::move(facets));
}

}  // namespace mtop
