#include <doctest.h>

#include "mtop/bits.hpp"
#include "mtop/psphere.hpp"

using namespace mtop;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(6, 4) == 15);
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(64, 32) == 1832624140942590534LL);
}

TEST_CASE("colex rank and unrank agree with mask order") {
    // colex order on k-subsets is numeric order on masks
    for (int n : {4, 6}) {
        for (int k = 0; k <= n; ++k) {
            long long idx = 0;
            Mask prev = 0;
            bool first = true;
            for_each_subset_of_size(n, k, [&](Mask s) {
                if (!first) CHECK(prev < s);
                CHECK(colex_rank(s) == idx);
                CHECK(colex_unrank(k, idx) == s);
                prev = s;
                first = false;
                ++idx;
            });
            CHECK(idx == binomial(n, k));
        }
    }
}

TEST_CASE("element round trip") {
    Mask m = mask_of({0, 3, 5});
    CHECK(popcount(m) == 3);
    CHECK(elements_of(m) == std::vector<int>{0, 3, 5});
    CHECK(subset_of(mask_of({0, 5}), m));
    CHECK(!subset_of(mask_of({1}), m));
}

TEST_CASE("integer partitions") {
    // independent oracle: restricted partition recursion
    auto count = [](auto&& self, int n, int mx) -> long long {
        if (n == 0) return 1;
        if (n < 0 || mx == 0) return 0;
        return self(self, n - mx, mx) + self(self, n, mx - 1);
    };
    for (int d = 0; d <= 9; ++d)
        CHECK(static_cast<long long>(partitions_of(d).size()) == count(count, d, d == 0 ? 1 : d));
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(2).size() == 2);
    CHECK(partitions_of(4).size() == 5);
    for (const auto& p : partitions_of(6)) {
        int s = 0;
        for (size_t i = 0; i < p.size(); ++i) {
            s += p[i];
            if (i) CHECK(p[i - 1] >= p[i]);
        }
        CHECK(s == 6);
    }
}
