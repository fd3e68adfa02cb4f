#include "qwonder/ncalg.hpp"

#include <vector>

#include "doctest.h"
#include "qwonder/presentations.hpp"

using namespace qwonder;

namespace {

struct Rng {
    uint64_t state = 0x2545f4914f6cdd1dull;
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1)); }
};

AlgebraElement random_element(const PresentationPtr& p, Rng& rng, int max_terms, int max_len) {
    AlgebraElement out(p);
    int terms = static_cast<int>(rng.range(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        Word word;
        int len = static_cast<int>(rng.range(0, max_len));
        for (int i = 0; i < len; ++i)
            word.push_back(static_cast<char>(rng.range(0, static_cast<long>(p->generator_count()) - 1)));
        out += p->element(word, QRational::q_power(rng.range(-1, 1), Rational(rng.range(-3, 3))));
    }
    return out;
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

QRational qp(long e) { return QRational::q_power(e); }

}  // namespace

TEST_CASE("normal forms in the quantum matrix algebra") {
    const auto& P = quantum_presentations();
    auto mat2 = P.mat2;
    int a = 0, b = 1, c = 2, d = 3;

    CHECK(mat2->normal_form(Word{char(b), char(a)}) == mat2->element(Word{char(a), char(b)}, qp(-1)));
    // da = ad - (q - q^-1) bc
    AlgebraElement da = mat2->normal_form(Word{char(d), char(a)});
    AlgebraElement expect(mat2);
    expect.add_term(Word{char(a), char(d)}, 1);
    expect.add_term(Word{char(b), char(c)}, -(qp(1) - qp(-1)));
    CHECK(da == expect);
    CHECK(mat2->normal_form(Word()) == mat2->unit());
    // bc = cb
    CHECK(mat2->normal_form(Word{char(b), char(c)}) == mat2->normal_form(Word{char(c), char(b)}));
    CHECK_THROWS_AS(mat2->normal_form(Word{char(9)}), user_error);
    // elements of different presentations never combine
    CHECK_THROWS_AS(mat2->unit() * P.sl2->unit(), user_error);
    CHECK_THROWS_AS(mat2->unit() + P.sl2->unit(), user_error);
}

TEST_CASE("hand-reduced overlap word dba") {
    // Both reduction routes give q^-2 abd - q^-1 (q - q^-1) b^2 c.
    const auto& P = quantum_presentations();
    AlgebraElement nf = P.mat2->normal_form(Word{char(3), char(1), char(0)});
    AlgebraElement expect(P.mat2);
    expect.add_term(Word{char(0), char(1), char(3)}, qp(-2));
    expect.add_term(Word{char(1), char(1), char(2)}, qp(-2) - QRational(1));
    CHECK(nf == expect);
}

TEST_CASE("sl2 determinant elimination") {
    const auto& P = quantum_presentations();
    auto sl2 = P.sl2;
    char a = static_cast<char>(sl2->generator_index("a"));
    char b = static_cast<char>(sl2->generator_index("b"));
    char c = static_cast<char>(sl2->generator_index("c"));
    char d = static_cast<char>(sl2->generator_index("d"));
    // da = 1 + q^-1 bc
    AlgebraElement da = sl2->normal_form(Word{d, a});
    AlgebraElement expect = sl2->unit();
    expect.add_term(Word{b, c}, qp(-1));
    CHECK(da == expect);
    // a*d = 1 + q bc
    AlgebraElement ad = sl2->element(Word{a}) * sl2->element(Word{d});
    AlgebraElement expect2 = sl2->unit();
    expect2.add_term(Word{b, c}, qp(1));
    CHECK(ad == expect2);
    // words with a and d together always reduce: abd = q b + q^2 b^2 c
    AlgebraElement abd = sl2->normal_form(Word{a, b, d});
    AlgebraElement expect3 = sl2->element(Word{b}, qp(1));
    expect3.add_term(Word{b, b, c}, qp(2));
    CHECK(abd == expect3);
    // x*1 = x
    AlgebraElement x = sl2->element(Word{b, c, d});
    CHECK(x * sl2->unit() == x);
}

TEST_CASE("local confluence of the shipped presentations") {
    for (const auto* family : {&quantum_presentations(), &classical_presentations()}) {
        CHECK(family->mat2->check_local_confluence().empty());
        CHECK(family->sl2->check_local_confluence().empty());
        CHECK(family->vinberg->check_local_confluence().empty());
        CHECK(family->p1p1->check_local_confluence().empty());
    }
}

TEST_CASE("contrived ambiguity is reported") {
    Presentation::Config config;
    config.name = "conflict";
    config.generators = {"a", "b"};
    config.rules = {
        {Word{char(1), char(0)}, {{Word{char(0), char(1)}, QRational(1)}}},
        {Word{char(1), char(0)}, {{Word{char(0), char(1)}, QRational(2)}}},
    };
    auto p = Presentation::make(std::move(config));
    auto ambiguities = p->check_local_confluence();
    REQUIRE(ambiguities.size() == 1);
    CHECK(ambiguities[0].reduced_a != ambiguities[0].reduced_b);
}

TEST_CASE("rule orientation and nesting are validated") {
    Presentation::Config bad;
    bad.name = "bad";
    bad.generators = {"a", "b"};
    // ab -> ba is wrongly oriented under deg-lex with a < b
    bad.rules = {{Word{char(0), char(1)}, {{Word{char(1), char(0)}, QRational(1)}}}};
    CHECK_THROWS_AS(Presentation::make(std::move(bad)), user_error);

    Presentation::Config nested;
    nested.name = "nested";
    nested.generators = {"a", "b"};
    nested.rules = {
        {Word{char(1), char(0)}, {{Word{char(0), char(1)}, QRational(1)}}},
        {Word{char(1), char(1), char(0)}, {{Word(), QRational(1)}}},
    };
    CHECK_THROWS_AS(Presentation::make(std::move(nested)), user_error);
}

TEST_CASE("normal form is idempotent and multiplication associative") {
    Rng rng;
    const auto& P = quantum_presentations();
    for (const auto& p : {P.mat2, P.sl2, P.p1p1}) {
        for (int i = 0; i < 12; ++i) {
            AlgebraElement x = random_element(p, rng, 3, 4);
            std::vector<std::pair<Word, QRational>> again(x.terms().begin(), x.terms().end());
            CHECK(p->normal_form(again) == x);
            AlgebraElement y = random_element(p, rng, 2, 3);
            AlgebraElement z = random_element(p, rng, 2, 3);
            CHECK((x * y) * z == x * (y * z));
        }
    }
}

TEST_CASE("grading") {
    const auto& P = quantum_presentations();
    auto mat2 = P.mat2;
    CHECK(mat2->word_degree(Word{char(0), char(3)}) == Weight::of(2));
    Rng rng;
    for (int i = 0; i < 10; ++i) {
        // degree(x*y) = degree(x) + degree(y) for homogeneous x, y
        Word w1, w2;
        for (long j = 0; j < rng.range(1, 3); ++j) w1.push_back(static_cast<char>(rng.range(0, 3)));
        for (long j = 0; j < rng.range(1, 3); ++j) w2.push_back(static_cast<char>(rng.range(0, 3)));
        AlgebraElement x = mat2->element(w1), y = mat2->element(w2);
        auto dx = mat2->element_degree(x), dy = mat2->element_degree(y);
        auto dxy = mat2->element_degree(x * y);
        REQUIRE(dx);
        REQUIRE(dy);
        REQUIRE(dxy);
        CHECK(*dxy == *dx + *dy);
    }
    // graded_component picks out terms by degree
    AlgebraElement mixed = mat2->unit() + mat2->element(Word{char(0), char(1)});
    CHECK(graded_component(mixed, Weight::of(2)) == mat2->element(Word{char(0), char(1)}));
    CHECK(graded_component(mixed, Weight::of(0)) == mat2->unit());
    CHECK(graded_component(mixed, Weight::of(1)).is_zero());
    CHECK_THROWS_AS(P.sl2->word_degree(Word{char(0)}), user_error);
}

TEST_CASE("the classical family is commutative") {
    const auto& C = classical_presentations();
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            CHECK(C.mat2->generator(i) * C.mat2->generator(j) ==
                  C.mat2->generator(j) * C.mat2->generator(i));
}

TEST_CASE("centrality of the quantum determinant") {
    const auto& P = quantum_presentations();
    AlgebraElement det = quantum_determinant(P.mat2, P.q);
    CHECK(P.mat2->is_central(det));
    CHECK(P.mat2->is_central(P.mat2->unit()));
    CHECK_FALSE(P.mat2->is_central(P.mat2->generator(0)));
}

TEST_CASE("graded dimensions") {
    const auto& P = quantum_presentations();
    // Monomials a^i b^j c^k d^l with i+j+k+l = n: C(n+3, 3) of them.
    for (long n = 0; n <= 6; ++n)
        CHECK(P.mat2->dimension_of_graded_piece(Weight::of(n), 10) ==
              static_cast<size_t>(binomial(n + 3, 3)));
    CHECK(P.p1p1->dimension_of_graded_piece(Weight({1, 1}), 10) == 4);
    CHECK(P.p1p1->dimension_of_graded_piece(Weight({2, 2}), 10) == 9);
}

TEST_CASE("veronese tables") {
    const auto& P = quantum_presentations();
    auto table = P.vinberg->veronese(Weight::of(1), 3, 12);
    REQUIRE(table.size() == 4);
    for (long n = 0; n <= 3; ++n)
        CHECK(table[static_cast<size_t>(n)].basis_words.size() ==
              static_cast<size_t>(binomial(n + 3, 3)));
    auto trivial = P.vinberg->veronese(Weight::of(0), 3, 12);
    for (const auto& level : trivial) CHECK(level.basis_words.size() == 1);
    auto squares = P.p1p1->veronese(Weight({1, 1}), 3, 12);
    for (long n = 0; n <= 3; ++n)
        CHECK(squares[static_cast<size_t>(n)].basis_words.size() ==
              static_cast<size_t>((n + 1) * (n + 1)));
}

TEST_CASE("exact division by a central element") {
    const auto& P = quantum_presentations();
    AlgebraElement det = quantum_determinant(P.mat2, P.q);
    Rng rng;
    for (int i = 0; i < 8; ++i) {
        AlgebraElement x = random_element(P.mat2, rng, 2, 3);
        auto back = divide_by_central(det * x, det);
        REQUIRE(back);
        CHECK(*back == x);
    }
    CHECK_FALSE(divide_by_central(P.mat2->generator(0), det).has_value());
}

TEST_CASE("degree-zero strata of the determinant localization") {
    for (const auto* family : {&quantum_presentations(), &classical_presentations()}) {
        AlgebraElement det = quantum_determinant(family->mat2, family->q);
        CentralLocalization loc(family->mat2, det);
        auto strata = loc.degree_zero_strata(4);
        REQUIRE(strata.size() == 5);
        CHECK(strata[0].new_dimension == 1);
        CHECK(strata[1].new_dimension == 0);  // odd stratum is empty
        CHECK(strata[2].piece_dimension == 10);
        CHECK(strata[2].image_dimension == 1);
        CHECK(strata[2].new_dimension == 9);  // 10 pairs minus one relation
        CHECK(strata[3].new_dimension == 0);
        CHECK(strata[4].new_dimension == 25);  // 35 - 10
    }
}

TEST_CASE("localization at a unit returns the degree-zero part") {
    const auto& P = quantum_presentations();
    CentralLocalization loc(P.mat2, P.mat2->unit());
    auto strata = loc.degree_zero_strata(4);
    REQUIRE(strata.size() == 1);
    CHECK(strata[0].new_dimension == 1);
    CHECK_THROWS_AS(CentralLocalization(P.mat2, P.mat2->unit() + P.mat2->generator(0) * P.mat2->generator(3)),
                    user_error);
    CHECK_THROWS_AS(CentralLocalization(P.mat2, P.mat2->generator(0)), user_error);
}

TEST_CASE("localized element arithmetic") {
    const auto& P = quantum_presentations();
    AlgebraElement det = quantum_determinant(P.mat2, P.q);
    CentralLocalization loc(P.mat2, det);
    auto x = loc.make(det * P.mat2->generator(1), 1);
    CHECK(x.inverse_power == 0);  // det cancels
    CHECK(x.numerator == P.mat2->generator(1));
    auto y = loc.multiply(loc.make(P.mat2->generator(0), 1), loc.make(P.mat2->generator(3), 1));
    // a d / Dq^2 does not reduce: ad is not a multiple of Dq
    CHECK(y.inverse_power == 2);
}

TEST_CASE("step budget surfaces runaway rewriting") {
    const auto& P = quantum_presentations();
    long saved = rewrite_step_budget();
    set_rewrite_step_budget(3);
    Word big;
    for (int i = 0; i < 12; ++i) big.push_back(static_cast<char>(3 - (i % 4)));
    CHECK_THROWS_AS(P.mat2->normal_form(big), user_error);
    set_rewrite_step_budget(saved);
    CHECK_NOTHROW(P.mat2->normal_form(big));
}

TEST_CASE("weighted monomial orders") {
    // with order weights a,d = 2 and b,c = 1 the rule ad -> 1 + q bc is
    // oriented even though bc > ad lexicographically
    auto p = parse_presentation(
        "name: weighted\n"
        "generators: a b c d\n"
        "weights: 2 1 1 2\n"
        "rule: a d -> 1 + q b c\n");
    CHECK(p->generator_count() == 4);
    AlgebraElement nf = p->normal_form(Word{char(0), char(3)});
    AlgebraElement expect = p->unit() + p->element(Word{char(1), char(2)}, qp(1));
    CHECK(nf == expect);
    // the same rule is rejected under the default all-ones weights
    CHECK_THROWS_AS(parse_presentation("name: plain\n"
                                       "generators: a b c d\n"
                                       "rule: a d -> 1 + q b c\n"),
                    user_error);
}

TEST_CASE("presentation text format") {
    auto p = parse_presentation(
        "# quantum plane\n"
        "name: qplane\n"
        "generators: x y\n"
        "grading: 1 1\n"
        "rule: y x -> q^-1 x y\n");
    CHECK(p->generator_count() == 2);
    CHECK(p->check_local_confluence().empty());
    CHECK(p->normal_form(Word{char(1), char(0)}) == p->element(Word{char(0), char(1)}, qp(-1)));
    CHECK(p->dimension_of_graded_piece(Weight::of(3), 8) == 4);

    auto mixed = parse_presentation(
        "name: toy\n"
        "generators: a b\n"
        "rule: b a -> a b + 1 - 3/2 a a\n");
    AlgebraElement nf = mixed->normal_form(Word{char(1), char(0)});
    AlgebraElement expect = mixed->element(Word{char(0), char(1)}) + mixed->unit() +
                            mixed->element(Word{char(0), char(0)}, Rational(-3, 2));
    CHECK(nf == expect);
}
