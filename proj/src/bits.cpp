#include "mtop/bits.hpp"

#include <array>

namespace mtop {

namespace {

struct BinomialTable {
    std::array<std::array<long long, 65>, 65> c{};
    BinomialTable() {
        for (int n = 0; n <= 64; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

const BinomialTable& table() {
    static const BinomialTable t;
    return t;
}

}  // namespace

long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    return table().c[n][k];
}

long long colex_rank(Mask s) {
    long long r = 0;
    int i = 1;
    while (s) {
        int e = std::countr_zero(s);
        r += binomial(e, i);
        ++i;
        s &= s - 1;
    }
    return r;
}

Mask colex_unrank(int size, long long rank) {
    Mask m = 0;
    for (int i = size; i >= 1; --i) {
        int e = i - 1;
        while (binomial(e + 1, i) <= rank) ++e;
        rank -= binomial(e, i);
        m |= bit(e);
    }
    return m;
}

std::string mask_to_string(Mask m, bool one_indexed) {
    std::string out = "{";
    bool first = true;
    for (int e : elements_of(m)) {
        if (!first) out += ",";
        out += std::to_string(e + (one_indexed ? 1 : 0));
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace mtop
