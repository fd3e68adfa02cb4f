#include "qwonder/lattice.hpp"

#include <vector>

#include "doctest.h"

using namespace qwonder;

TEST_CASE("sl2 dominance order") {
    const auto& L = WeightLattice::sl2();
    // n - m must be a nonnegative multiple of 2
    CHECK(L.dominance_leq(Weight::of(1), Weight::of(3)));
    CHECK_FALSE(L.dominance_leq(Weight::of(1), Weight::of(2)));  // parity obstruction
    CHECK(L.dominance_leq(Weight::of(4), Weight::of(4)));
    CHECK_FALSE(L.dominance_leq(Weight::of(3), Weight::of(1)));
}

TEST_CASE("dominance is a partial order on a sample") {
    const auto& L = WeightLattice::sl2();
    std::vector<Weight> sample;
    for (long n = -4; n <= 6; ++n) sample.push_back(Weight::of(n));
    for (const auto& a : sample) {
        CHECK(L.dominance_leq(a, a));
        for (const auto& b : sample) {
            if (L.dominance_leq(a, b) && L.dominance_leq(b, a)) CHECK(a == b);
            for (const auto& c : sample)
                if (L.dominance_leq(a, b) && L.dominance_leq(b, c)) CHECK(L.dominance_leq(a, c));
        }
    }
}

TEST_CASE("quotient order") {
    const auto& L = WeightLattice::sl2();
    RootSubset empty;
    RootSubset all = L.full_subset();
    // I = Delta: any two weights of the same parity compare both ways
    CHECK(L.quotient_leq(Weight::of(5), Weight::of(1), all));
    CHECK(L.quotient_leq(Weight::of(1), Weight::of(5), all));
    CHECK_FALSE(L.quotient_leq(Weight::of(0), Weight::of(1), all));
    // I = empty set reduces to dominance, checked by enumeration
    for (long m = -4; m <= 6; ++m)
        for (long n = -4; n <= 6; ++n)
            CHECK(L.quotient_leq(Weight::of(m), Weight::of(n), empty) ==
                  L.dominance_leq(Weight::of(m), Weight::of(n)));
    CHECK(L.quotient_leq(Weight::of(1), Weight::of(5), empty));  // 5-1 = 2*alpha
}

TEST_CASE("lower set") {
    const auto& L = WeightLattice::sl2();
    auto set3 = L.lower_set(Weight::of(3), 10);
    CHECK(set3 == std::vector<Weight>{Weight::of(1), Weight::of(3)});
    CHECK(L.lower_set(Weight::of(0), 10) == std::vector<Weight>{Weight::of(0)});
    auto set4 = L.lower_set(Weight::of(4), 10);
    CHECK(set4 == std::vector<Weight>{Weight::of(0), Weight::of(2), Weight::of(4)});
    CHECK_THROWS_AS(L.lower_set(Weight::of(-1), 10), user_error);
}

TEST_CASE("lower set is downward closed") {
    const auto& L = WeightLattice::sl2();
    for (long n = 0; n <= 6; ++n) {
        auto set = L.lower_set(Weight::of(n), 10);
        for (const auto& mu : set)
            for (const auto& nu : L.lower_set(mu, 10)) {
                bool found = false;
                for (const auto& w2 : set) found = found || w2 == nu;
                CHECK(found);
            }
    }
}

TEST_CASE("quotient classes") {
    const auto& L = WeightLattice::sl2();
    RootSubset all = L.full_subset();
    QuotientClass odd = coset_class_of(L, Weight::of(5), all);
    QuotientClass even = coset_class_of(L, Weight::of(4), all);
    CHECK(odd.representative == Weight::of(1));
    CHECK(quotient_leq(L, odd, coset_class_of(L, Weight::of(3), all)));
    CHECK_FALSE(quotient_leq(L, odd, even));
    QuotientClass plain = coset_class_of(L, Weight::of(5), RootSubset());
    CHECK_THROWS_AS(quotient_leq(L, odd, plain), user_error);
}

TEST_CASE("coset class") {
    const auto& L = WeightLattice::sl2();
    RootSubset all = L.full_subset();
    CHECK(L.coset_class(Weight::of(5), all) == Weight::of(1));
    CHECK(L.coset_class(Weight::of(4), all) == Weight::of(0));
    CHECK(L.coset_class(Weight::of(-3), all) == Weight::of(1));
    CHECK(L.coset_class(Weight::of(7), RootSubset()) == Weight::of(7));
    // Constant on lambda + Lambda_I orbits
    for (long n = -5; n <= 5; ++n)
        for (long k = -3; k <= 3; ++k)
            CHECK(L.coset_class(Weight::of(n), all) == L.coset_class(Weight::of(n + 2 * k), all));
}

TEST_CASE("rank-2 lattice sanity") {
    // A1 x A1: two orthogonal roots.
    WeightLattice L(2, {{2, 0}, {0, 2}});
    CHECK(L.dominance_leq(Weight({0, 0}), Weight({2, 2})));
    CHECK_FALSE(L.dominance_leq(Weight({0, 0}), Weight({2, 1})));
    RootSubset first(std::set<int>{1});
    // modulo alpha_1 only: second coordinate must still descend evenly
    CHECK(L.quotient_leq(Weight({5, 0}), Weight({1, 2}), first));
    CHECK_FALSE(L.quotient_leq(Weight({5, 1}), Weight({1, 0}), first));
    CHECK(L.coset_class(Weight({5, 3}), first) == Weight({1, 3}));
    auto lower = L.lower_set(Weight({2, 2}), 4);
    CHECK(lower.size() == 4);  // (0,0),(0,2),(2,0),(2,2)
    CHECK_THROWS_AS(WeightLattice(2, {{2, 0}, {4, 0}}), user_error);
}
