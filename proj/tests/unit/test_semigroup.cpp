#include <doctest.h>

#include <vector>

#include "../common/test_util.hpp"
#include "conlab/error.hpp"
#include "conlab/semigroup.hpp"

using conlab::NumericalSemigroup;

TEST_CASE("worked semigroup anchors") {
    const auto s469 = NumericalSemigroup::from_generators({4, 6, 9});
    // Membership begins {0,4,6,8,9,10,12,13,...}.
    const std::vector<long> first = {0, 4, 6, 8, 9, 10, 12, 13};
    std::vector<long> got;
    for (long n = 0; n <= 13; ++n)
        if (s469.contains(n))
            got.push_back(n);
    CHECK(got == first);
    CHECK(s469.gaps() == std::vector<long>{1, 2, 3, 5, 7, 11});
    CHECK(s469.conductor() == 12);
    CHECK(s469.frobenius() == 11);

    const auto s579 = NumericalSemigroup::from_generators({5, 7, 9});
    CHECK(s579.gaps() == std::vector<long>{1, 2, 3, 4, 6, 8, 11, 13});
    CHECK(s579.conductor() == 14);
    CHECK(s579.pseudo_frobenius() == std::vector<long>{11, 13});
    CHECK(s579.type() == 2);

    const auto s345 = NumericalSemigroup::from_generators({3, 4, 5});
    CHECK(s345.gaps() == std::vector<long>{1, 2});
    CHECK(s345.conductor() == 3);
    CHECK(s345.delta() == 2);
    CHECK(s345.pseudo_frobenius() == std::vector<long>{1, 2});
    CHECK(s345.type() == 2);
    CHECK_FALSE(s345.symmetric());
}

TEST_CASE("small semigroups") {
    const auto s23 = NumericalSemigroup::from_generators({2, 3});
    CHECK(s23.gaps() == std::vector<long>{1});
    CHECK(s23.delta() == 1);
    CHECK(s23.pseudo_frobenius() == std::vector<long>{1});
    CHECK(s23.symmetric());
    CHECK(s23.apery(2) == std::vector<long>{0, 3});

    const auto full = NumericalSemigroup::from_generators({1});
    CHECK(full.conductor() == 0);
    CHECK(full.frobenius() == -1);
    CHECK(full.gaps().empty());
    CHECK(full.delta() == 0);
    CHECK(full.type() == 1);
    CHECK(full.apery(1) == std::vector<long>{0});

    // Symmetry computed directly for <4,6,9>: members 0,4,6,8,9,10 pair with
    // gaps 11,7,5,3,2,1.
    CHECK(NumericalSemigroup::from_generators({4, 6, 9}).symmetric());
}

TEST_CASE("apery sets") {
    const auto s345 = NumericalSemigroup::from_generators({3, 4, 5});
    CHECK(s345.apery(3) == std::vector<long>{0, 4, 5});
    CHECK_THROWS_AS(s345.apery(2), conlab::Error);
    CHECK_THROWS_AS(s345.apery(0), conlab::Error);
}

TEST_CASE("constructor rejects bad generator sets") {
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({}), conlab::Error);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({2, 4}), conlab::Error);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({0, 3}), conlab::Error);
    try {
        NumericalSemigroup::from_generators({2, 4});
        FAIL("expected NotCoprime");
    } catch (const conlab::Error& e) {
        CHECK(e.kind() == conlab::ErrorKind::NotCoprime);
    }
}

TEST_CASE("family properties over generators from {2..12}") {
    for (const auto& gens : testutil::coprime_families(2, 12, 3)) {
        CAPTURE(gens);
        const auto s = NumericalSemigroup::from_generators(gens);
        const long c = s.conductor();

        // F = c - 1 is not a member unless c = 0; everything from c on is.
        if (c > 0)
            CHECK_FALSE(s.contains(c - 1));
        for (long n = c; n < 2 * c + 2; ++n)
            CHECK(s.contains(n));

        // Closed under addition on [0, 2c).
        for (long a = 0; a < 2 * c; ++a)
            for (long b = a; a + b < 2 * c; ++b)
                if (s.contains(a) && s.contains(b))
                    CHECK(s.contains(a + b));

        // Dynamic programming equals naive combination enumeration.
        const auto brute = testutil::brute_force_membership(gens, 2 * c + 2);
        for (long n = 0; n < 2 * c + 2; ++n)
            CHECK(s.contains(n) == static_cast<bool>(brute[static_cast<std::size_t>(n)]));

        // symmetric <=> c = 2*delta <=> type 1.
        const bool sym = s.symmetric();
        CHECK(sym == (c == 2 * s.delta()));
        CHECK(sym == (s.type() == 1));

        // The Frobenius number is always pseudo-Frobenius (c = 0 excluded).
        if (c > 0) {
            const auto pf = s.pseudo_frobenius();
            CHECK(std::find(pf.begin(), pf.end(), s.frobenius()) != pf.end());
        }

        // Gap count is the delta invariant.
        CHECK(static_cast<long>(s.gaps().size()) == s.delta());
    }
}
