#pragma once

#include <functional>
#include <iosfwd>

#include "mtop/activity.hpp"
#include "mtop/lattice.hpp"
#include "mtop/psphere.hpp"

namespace mtop {

struct cap_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration caps are configuration, not constants.
struct CensusCaps {
    int nmax_low_rank = 8;  // ranks <= 3
    int nmax_general = 7;
    int hard_cap = 8;  // orderly generator limit
    int nmax_for(int d) const { return d <= 3 ? nmax_low_rank : nmax_general; }
};

struct GenOptions {
    bool loopless = false;
    int threads = 1;
};

// Exactly one representative per isomorphism class of rank-d matroids on n
// elements, as canonically labeled basis families (depth-first over the
// basis-indicator string in colex order, exchange-violation pruning,
// incremental canonical-minimality rejection).  Deterministic output order
// regardless of thread count.
std::vector<Matroid> enumerate_matroids(int n, int d, const GenOptions& opts = {});

struct CensusRecord {
    std::string canonical;
    int n = 0;
    int d = 0;
    long long basis_count = 0;
    HVector h_ind;
    long long chi_ind = 0;          // |chi~| of the independence complex
    long long chi_bc_reduced = 0;   // |chi~| of the reduced bc complex, natural order
    long long chi_bc_min = 0;       // min/max over sampled orders
    long long chi_bc_max = 0;
    long long chi_flats = 0;        // |mu| of the lattice of flats
    bool loopless = false, simple = false, connected = false, coloop_free = false;
};

CensusRecord make_record(const Matroid& m, int order_samples = 8);

struct PsiQuery {
    int d = 1;
    int k = 1;
    enum class Filter { All, Simple, SimpleConnected } filter = Filter::All;
    int n_max = -1;  // -1: the completeness bound 2d+k-1
};

struct PsiResult {
    std::vector<CensusRecord> records;
    std::vector<Matroid> matroids;
    bool complete = false;  // swept up to 2d+k-1
    int n_max_used = 0;
    int n_max_needed = 0;
};

// Loopless rank-d classes with |chi~(independence complex)| = k.
PsiResult psi(const PsiQuery& q, const CensusCaps& caps = {}, int threads = 1);

// Number of loopless matroids of rank <= d with <= k bases, counted via
// coloop-free cores with coloops re-attached symbolically.
struct TdkResult {
    long long count = 0;
    long long core_classes = 0;
};
TdkResult tdk(int d, int k, const CensusCaps& caps = {});

struct PureOResult {
    SearchStatus status = SearchStatus::None;
    std::vector<std::vector<int>> tops;  // exponent vectors of the degree-d monomials
};

// Searches for h_d monomials of degree d in h_1 variables whose divisibility
// closure has exactly h_i monomials per degree.
PureOResult pure_o_certificate(const HVector& h, long long budget = 2'000'000);

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::string> table_header;
    std::vector<std::vector<std::string>> table;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Universally quantified checks over the census, by suite name:
// hb, f0, uniq, basisbound, tref, flawless, monot, logconc.
Report verify_suite(const std::string& name, int d_max, int k_max, const CensusCaps& caps = {},
                    int threads = 1);

// Evidence scan: simple connected rank-d classes, reduced bc top entry per
// ground-set order (exhaustive n <= 6, else sampled).
Report bc_conjecture_scan(int d, int k, int n_max, const CensusCaps& caps = {}, int threads = 1);

// Catalog files: header "n d", one matroid per line as a '0'/'*' indicator
// over the colex-ordered d-subsets.
struct Catalog {
    int n = 0;
    int d = 0;
    std::vector<std::vector<Mask>> families;
};

Catalog read_catalog(std::istream& in);
void write_catalog(std::ostream& out, int n, int d, const std::vector<Matroid>& matroids);

}  // namespace mtop
