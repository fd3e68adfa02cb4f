#include "qwonder/poisson.hpp"

#include "doctest.h"

using namespace qwonder;

namespace {

struct Rng {
    uint64_t state = 0xc3a5c85c97cb3127ull;
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1)); }
};

AlgebraElement gen(char role) {
    const Sl2Context& ctx = Sl2Context::classical();
    return ctx.sl2()->element(Word{static_cast<char>(ctx.sl2()->generator_index(std::string(1, role)))});
}

}  // namespace

TEST_CASE("the classical bracket table") {
    const PoissonPresentation& P = classical_sl2_poisson();
    CHECK(P.bracket(gen('a'), gen('b')) == gen('a') * gen('b'));
    CHECK(P.bracket(gen('a'), gen('c')) == gen('a') * gen('c'));
    CHECK(P.bracket(gen('b'), gen('c')).is_zero());
    CHECK(P.bracket(gen('b'), gen('d')) == gen('b') * gen('d'));
    CHECK(P.bracket(gen('c'), gen('d')) == gen('c') * gen('d'));
    CHECK(P.bracket(gen('a'), gen('d')) == gen('b') * gen('c') * QRational(2));
    // antisymmetry and {x,x} = 0
    CHECK(P.bracket(gen('b'), gen('a')) == -P.bracket(gen('a'), gen('b')));
    CHECK(P.bracket(gen('a'), gen('a')).is_zero());
    // Leibniz example: {a, bc} = {a,b}c + b{a,c} = 2abc
    CHECK(P.bracket(gen('a'), gen('b') * gen('c')) ==
          gen('a') * gen('b') * gen('c') * QRational(2));
}

TEST_CASE("jacobi and leibniz on random samples") {
    const PoissonPresentation& P = classical_sl2_poisson();
    const Sl2Context& ctx = Sl2Context::classical();
    Rng rng;
    auto random_element = [&](int max_len) {
        Word w;
        for (long i = 0; i < rng.range(0, max_len); ++i) w.push_back(static_cast<char>(rng.range(0, 3)));
        return ctx.sl2()->element(w, QRational(Rational(rng.range(1, 4))));
    };
    for (int trial = 0; trial < 20; ++trial) {
        AlgebraElement x = random_element(2);
        AlgebraElement y = random_element(2);
        AlgebraElement z = random_element(2);
        AlgebraElement jacobi = P.bracket(x, P.bracket(y, z)) + P.bracket(y, P.bracket(z, x)) +
                                P.bracket(z, P.bracket(x, y));
        CHECK(jacobi.is_zero());
        CHECK(P.bracket(x, y * z) == P.bracket(x, y) * z + y * P.bracket(x, z));
    }
}

TEST_CASE("bracket preserves the filtration") {
    const PoissonPresentation& P = classical_sl2_poisson();
    const Sl2Context& ctx = Sl2Context::classical();
    // level <= n times level <= m lands in level <= n+m
    for (size_t len1 = 1; len1 <= 3; ++len1)
        for (size_t len2 = 1; len2 <= 3; ++len2) {
            auto words1 = ctx.sl2()->normal_words_of_length(len1);
            auto words2 = ctx.sl2()->normal_words_of_length(len2);
            for (size_t i = 0; i < words1.size(); i += 3)
                for (size_t j = 0; j < words2.size(); j += 3) {
                    AlgebraElement value = P.bracket(ctx.sl2()->element(words1[i]),
                                                     ctx.sl2()->element(words2[j]));
                    CHECK(ctx.level_membership(value, static_cast<long>(len1 + len2)));
                }
        }
}

TEST_CASE("rees bracket") {
    const Sl2Context& ctx = Sl2Context::classical();
    ReesElement az = ReesElement::generator(ctx, 'a');
    ReesElement bz = ReesElement::generator(ctx, 'b');
    ReesElement cz = ReesElement::generator(ctx, 'c');
    ReesElement dz = ReesElement::generator(ctx, 'd');
    // {az, dz} = 2 bc z^2
    ReesElement expect = ReesElement::part(ctx, gen('b') * gen('c') * QRational(2), 2);
    CHECK(rees_bracket(az, dz) == expect);
    CHECK(rees_bracket(bz, cz).is_zero());
    CHECK(rees_bracket(az, az).is_zero());
    // the remaining table entries
    CHECK(rees_bracket(az, bz) == ReesElement::part(ctx, gen('a') * gen('b'), 2));
    CHECK(rees_bracket(az, cz) == ReesElement::part(ctx, gen('a') * gen('c'), 2));
    CHECK(rees_bracket(bz, dz) == ReesElement::part(ctx, gen('b') * gen('d'), 2));
    CHECK(rees_bracket(cz, dz) == ReesElement::part(ctx, gen('c') * gen('d'), 2));
    // output passes level membership by construction (part() checks)
}

TEST_CASE("localized bracket") {
    const Sl2Context& ctx = Sl2Context::classical();
    ReesElement az = ReesElement::generator(ctx, 'a');
    ReesElement z2 = ReesElement::z_power(ctx, 2);
    // {a, r^-1} with r = z^2: the bracket against 1*z^2 vanishes
    LocalizedReesElement lhs = localized_bracket({az, 0}, {ReesElement::unit(ctx), 1});
    CHECK(lhs.numerator.is_zero());
    // {x, 1} = 0
    CHECK(localized_bracket({az, 0}, {ReesElement::unit(ctx), 0}).numerator.is_zero());
    // degree-0 pairs close in degree 0: {az dz / z^2, az bz / z^2}
    LocalizedReesElement x{az * ReesElement::generator(ctx, 'd'), 1};
    LocalizedReesElement y{az * ReesElement::generator(ctx, 'b'), 1};
    LocalizedReesElement bracket = localized_bracket(x, y);
    for (const auto& [lambda, f] : bracket.numerator.parts())
        CHECK(lambda - 2 * bracket.inverse_power == 0);
    // the z^2 factor itself is Poisson-central in the localization
    CHECK(localized_bracket({z2, 0}, {az, 0}).numerator.is_zero());
}

TEST_CASE("semiclassical limits reproduce the bracket table") {
    // all six pairs of the coordinate algebra
    const char roles[] = {'a', 'b', 'c', 'd'};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            SemiclassicalResult result = semiclassical_check(roles[i], roles[j]);
            CHECK(result.matches);
        }
    // spot values: (a,b) -> ab, (b,c) -> 0, (a,d) -> 2bc
    CHECK(semiclassical_check('a', 'b').limit == gen('a') * gen('b'));
    CHECK(semiclassical_check('b', 'c').limit.is_zero());
    CHECK(semiclassical_check('a', 'd').limit == gen('b') * gen('c') * QRational(2));

    // all six pairs of the Rees algebra
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            SemiclassicalReesResult result = semiclassical_rees_check(roles[i], roles[j]);
            CHECK(result.matches);
        }
    const Sl2Context& cl = Sl2Context::classical();
    CHECK(semiclassical_rees_check('a', 'd').limit ==
          ReesElement::part(cl, gen('b') * gen('c') * QRational(2), 2));
    CHECK(semiclassical_rees_check('b', 'c').limit.is_zero());
}

TEST_CASE("table validation") {
    const Sl2Context& ctx = Sl2Context::classical();
    // a wrong table that breaks Jacobi is rejected: {a,b} = b^2, {a,c} = c a,
    // {b,c} = a^2 has {a,{b,c}} + cyc != 0
    std::map<std::pair<char, char>, AlgebraElement> bad;
    char a = ctx.gen_a(), b = ctx.gen_b(), c = ctx.gen_c();
    auto key = [](char g, char h) { return g < h ? std::make_pair(g, h) : std::make_pair(h, g); };
    bad[key(a, b)] = ctx.sl2()->element(Word{b, b});
    bad[key(a, c)] = ctx.sl2()->element(Word{c, a});
    bad[key(b, c)] = ctx.sl2()->element(Word{a, a});
    CHECK_THROWS_AS(PoissonPresentation(ctx.sl2(), std::move(bad)), user_error);
    // a noncommutative base is rejected
    const Sl2Context& qu = Sl2Context::quantum();
    CHECK_THROWS_AS(PoissonPresentation(qu.sl2(), {}), user_error);
}
