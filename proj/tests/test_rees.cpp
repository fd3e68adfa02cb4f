#include "qwonder/rees.hpp"

#include "doctest.h"

using namespace qwonder;

namespace {

QRational qp(long e) { return QRational::q_power(e); }

struct Rng {
    uint64_t state = 0xda3e39cb94b95bdbull;
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1)); }
};

}  // namespace

TEST_CASE("rees multiplication") {
    const Sl2Context& ctx = Sl2Context::quantum();
    ReesElement az = ReesElement::generator(ctx, 'a');
    ReesElement bz = ReesElement::generator(ctx, 'b');
    ReesElement cz = ReesElement::generator(ctx, 'c');
    ReesElement dz = ReesElement::generator(ctx, 'd');

    // (az)(dz) - q (bz)(cz) = z^2
    CHECK(az * dz - (bz * cz) * ctx.q() == ReesElement::z_power(ctx, 2));
    // unit acts trivially
    ReesElement x = az * bz + ReesElement::z_power(ctx, 2);
    CHECK(ReesElement::unit(ctx) * x == x);
    // (az)(bz) = q (bz)(az)
    CHECK(az * bz == (bz * az) * ctx.q());
    // degree additivity: parts multiply into the summed level
    ReesElement prod = x * x;
    for (const auto& [lambda, f] : prod.parts()) {
        CHECK(lambda == 4);
        CHECK(ctx.level_membership(f, lambda));
    }
    // membership violations are rejected
    CHECK_THROWS_AS(ReesElement::part(ctx, ctx.sl2()->element(Word{ctx.gen_a()}), 2), user_error);
    CHECK_THROWS_AS(ReesElement::z_power(ctx, 1), user_error);
    CHECK_THROWS_AS(ReesElement::z_power(ctx, -2), user_error);
}

TEST_CASE("rees coproduct") {
    const Sl2Context& ctx = Sl2Context::quantum();
    ReesElement az = ReesElement::generator(ctx, 'a');
    ReesTensor delta = rees_coproduct(az);
    REQUIRE(delta.parts.size() == 1);
    AlgebraElement a = ctx.sl2()->element(Word{ctx.gen_a()});
    AlgebraElement b = ctx.sl2()->element(Word{ctx.gen_b()});
    AlgebraElement c = ctx.sl2()->element(Word{ctx.gen_c()});
    // Delta(az) = az (x) az + bz (x) cz
    CHECK(delta.parts.at(1) == TensorElement::tensor(a, a) + TensorElement::tensor(b, c));
    // Delta(z^0) = z^0 (x) z^0
    ReesTensor unit_delta = rees_coproduct(ReesElement::unit(ctx));
    CHECK(unit_delta.parts.at(0) == TensorElement::tensor(ctx.sl2()->unit(), ctx.sl2()->unit()));
    // Delta(z^2) = z^2 (x) z^2, expanded through the determinant relation
    ReesTensor z2_delta = rees_coproduct(ReesElement::z_power(ctx, 2));
    REQUIRE(z2_delta.parts.size() == 1);
    CHECK(z2_delta.parts.at(2) == TensorElement::tensor(ctx.sl2()->unit(), ctx.sl2()->unit()));
    // counit
    CHECK(rees_counit(az) == QRational(1));
    CHECK(rees_counit(ReesElement::generator(ctx, 'b')) == QRational(0));
}

TEST_CASE("the isomorphism with the quantum matrix algebra") {
    for (const Sl2Context* ctx : {&Sl2Context::quantum(), &Sl2Context::classical()}) {
        ReesElement az = ReesElement::generator(*ctx, 'a');
        CHECK(vinberg_to_matq(az) == ctx->mat2()->element(Word{static_cast<char>(ctx->mat2()->generator_index("a"))}));
        // z^2 -> quantum determinant
        CHECK(vinberg_to_matq(ReesElement::z_power(*ctx, 2)) == quantum_determinant(ctx->mat2(), ctx->q()));
        CHECK(vinberg_to_matq(ReesElement::unit(*ctx)) == ctx->mat2()->unit());

        // degreewise bijection: round trips on every basis word, degrees 0..6
        for (long n = 0; n <= 6; ++n) {
            auto words = ctx->mat2()->normal_words_of_degree(Weight::of(n), 8);
            // graded dimensions match the filtration dimensions
            CHECK(words.size() == ctx->filtration_dimension_by_words(n));
            for (const Word& w : words) {
                AlgebraElement y = ctx->mat2()->element(w);
                ReesElement lifted = matq_to_vinberg(*ctx, y);
                CHECK(vinberg_to_matq(lifted) == y);
            }
        }
        // and the reverse round trip on rees parts
        Rng rng;
        for (int trial = 0; trial < 6; ++trial) {
            long lambda = rng.range(0, 3);
            AlgebraElement f(ctx->sl2());
            for (long len = lambda % 2; len <= lambda; len += 2) {
                auto words = ctx->sl2()->normal_words_of_length(static_cast<size_t>(len));
                f += ctx->sl2()->element(words[static_cast<size_t>(rng.range(0, static_cast<long>(words.size()) - 1))],
                                         QRational(Rational(rng.range(1, 5))));
            }
            ReesElement x = ReesElement::part(*ctx, f, lambda);
            auto parts = matq_to_vinberg(*ctx, vinberg_to_matq(x)).parts();
            AlgebraElement back(ctx->sl2());
            for (const auto& [l, part] : parts) back += part;
            CHECK(back == f);
        }
    }
}

TEST_CASE("coproducts transport through the isomorphism") {
    // (map (x) map)(Delta_rees(gz)) = Delta_mat2(g) for every generator
    const Sl2Context& ctx = Sl2Context::quantum();
    for (char role : {'a', 'b', 'c', 'd'}) {
        ReesElement gz = ReesElement::generator(ctx, role);
        ReesTensor delta = rees_coproduct(gz);
        TensorElement mapped(ctx.mat2(), 2);
        for (const auto& [lambda, tensor] : delta.parts)
            for (const auto& [slots, coeff] : tensor.terms()) {
                AlgebraElement left =
                    vinberg_to_matq(ReesElement::part(ctx, ctx.sl2()->element(slots[0]), lambda));
                AlgebraElement right =
                    vinberg_to_matq(ReesElement::part(ctx, ctx.sl2()->element(slots[1]), lambda));
                mapped = mapped + TensorElement::tensor(left, right) * coeff;
            }
        AlgebraElement g = ctx.mat2()->element(Word{static_cast<char>(ctx.mat2()->generator_index(std::string(1, role)))});
        CHECK(mapped == ctx.matrix_bialgebra().coproduct(g));
    }
}

TEST_CASE("gr multiplication") {
    const Sl2Context& ctx = Sl2Context::quantum();
    RootSubset empty;
    RootSubset full({1});
    AlgebraElement a = ctx.sl2()->element(Word{ctx.gen_a()});
    AlgebraElement b = ctx.sl2()->element(Word{ctx.gen_b()});
    AlgebraElement c = ctx.sl2()->element(Word{ctx.gen_c()});
    AlgebraElement d = ctx.sl2()->element(Word{ctx.gen_d()});

    // I = {}: the unit term of a*d = 1 + q bc is discarded
    GrElement abar = GrElement::from_element(ctx, empty, a);
    GrElement dbar = GrElement::from_element(ctx, empty, d);
    GrElement bc_bar = GrElement::from_element(ctx, empty, b * c) * ctx.q();
    GrElement prod = abar * dbar;
    // q * (class-2 part of bc): the scalar block of bc dies in gr
    GrElement expect(ctx, empty);
    expect = GrElement::from_element(ctx, empty, ctx.pw_component(b * c, 2)) * ctx.q();
    CHECK(prod == expect);
    // and the q*bc gr-image has the same class-2 residue plus a dead scalar class
    CHECK(bc_bar.classes().at(2) == prod.classes().at(2));

    // I = full: nothing is discarded
    GrElement abar_f = GrElement::from_element(ctx, full, a);
    GrElement dbar_f = GrElement::from_element(ctx, full, d);
    GrElement prod_f = abar_f * dbar_f;
    CHECK(prod_f == GrElement::from_element(ctx, full, a * d));

    // commuting residues
    GrElement bbar = GrElement::from_element(ctx, empty, b);
    GrElement cbar = GrElement::from_element(ctx, empty, c);
    CHECK(bbar * cbar == cbar * bbar);
    CHECK_THROWS_AS(gr_multiply(abar, abar_f), user_error);
}

TEST_CASE("gr maps onto the two q-plane factors") {
    const Sl2Context& ctx = Sl2Context::quantum();
    RootSubset empty;
    auto p1p1 = ctx.p1p1();
    char x = static_cast<char>(p1p1->generator_index("x"));
    char y = static_cast<char>(p1p1->generator_index("y"));
    char u = static_cast<char>(p1p1->generator_index("u"));
    char w = static_cast<char>(p1p1->generator_index("w"));

    AlgebraElement a = ctx.sl2()->element(Word{ctx.gen_a()});
    GrElement abar = GrElement::from_element(ctx, empty, a);
    CHECK(gr_to_p1p1(abar) == p1p1->element(Word{x, u}));
    CHECK(gr_to_p1p1(GrElement::from_element(ctx, empty, ctx.sl2()->unit())) == p1p1->unit());

    // products respect the map on all generator pairs
    std::vector<char> roles = {ctx.gen_a(), ctx.gen_b(), ctx.gen_c(), ctx.gen_d()};
    for (char g : roles)
        for (char h : roles) {
            GrElement gbar = GrElement::from_element(ctx, empty, ctx.sl2()->element(Word{g}));
            GrElement hbar = GrElement::from_element(ctx, empty, ctx.sl2()->element(Word{h}));
            CHECK(gr_to_p1p1(gbar * hbar) == gr_to_p1p1(gbar) * gr_to_p1p1(hbar));
        }

    // and on random degree <= 3 residues
    Rng rng;
    for (int trial = 0; trial < 20; ++trial) {
        Word w1, w2;
        for (long i = 0; i < rng.range(1, 3); ++i) w1.push_back(static_cast<char>(rng.range(0, 3)));
        for (long i = 0; i < rng.range(1, 3); ++i) w2.push_back(static_cast<char>(rng.range(0, 3)));
        GrElement g1 = GrElement::from_element(ctx, empty, ctx.sl2()->element(w1));
        GrElement g2 = GrElement::from_element(ctx, empty, ctx.sl2()->element(w2));
        CHECK(gr_to_p1p1(g1 * g2) == gr_to_p1p1(g1) * gr_to_p1p1(g2));
    }

    // graded dimension of gr in class n is (n+1)^2, matching the bidegree count
    for (long n = 0; n <= 5; ++n) {
        CHECK(gr_dimension(ctx, n) == static_cast<size_t>((n + 1) * (n + 1)));
        CHECK(p1p1->dimension_of_graded_piece(Weight({n, n}), 16) ==
              static_cast<size_t>((n + 1) * (n + 1)));
    }
}

TEST_CASE("gr multiplication is associative across projections") {
    // (x y) z and x (y z) pass through different intermediate
    // block projections; equality certifies the projection coherence.
    const Sl2Context& ctx = Sl2Context::quantum();
    RootSubset empty;
    Rng rng;
    for (int trial = 0; trial < 8; ++trial) {
        Word w1, w2, w3;
        for (long i = 0; i < rng.range(1, 2); ++i) w1.push_back(static_cast<char>(rng.range(0, 3)));
        for (long i = 0; i < rng.range(1, 2); ++i) w2.push_back(static_cast<char>(rng.range(0, 3)));
        for (long i = 0; i < rng.range(1, 2); ++i) w3.push_back(static_cast<char>(rng.range(0, 3)));
        GrElement x = GrElement::from_element(ctx, empty, ctx.sl2()->element(w1));
        GrElement y = GrElement::from_element(ctx, empty, ctx.sl2()->element(w2));
        GrElement z = GrElement::from_element(ctx, empty, ctx.sl2()->element(w3));
        CHECK((x * y) * z == x * (y * z));
    }
}

TEST_CASE("orbit algebra") {
    const Sl2Context& ctx = Sl2Context::quantum();
    RootSubset full({1});
    AlgebraElement a = ctx.sl2()->element(Word{ctx.gen_a()});
    AlgebraElement d = ctx.sl2()->element(Word{ctx.gen_d()});
    // (a (x) z^2)(d (x) z^-2) = ad (x) 1
    OrbitAlgebraElement lhs =
        OrbitAlgebraElement::make(GrElement::from_element(ctx, full, a), 2) *
        OrbitAlgebraElement::make(GrElement::from_element(ctx, full, d), -2);
    OrbitAlgebraElement expect =
        OrbitAlgebraElement::make(GrElement::from_element(ctx, full, a * d), 0);
    CHECK(lhs == expect);
    // unit acts trivially
    OrbitAlgebraElement unit =
        OrbitAlgebraElement::make(GrElement::from_element(ctx, full, ctx.sl2()->unit()), 0);
    CHECK(unit * lhs == lhs);
    // I = {}: plain gr multiplication in the trivial Laurent factor
    RootSubset empty;
    OrbitAlgebraElement abar =
        OrbitAlgebraElement::make(GrElement::from_element(ctx, empty, a), 0);
    OrbitAlgebraElement dbar =
        OrbitAlgebraElement::make(GrElement::from_element(ctx, empty, d), 0);
    OrbitAlgebraElement prod = abar * dbar;
    REQUIRE(prod.parts().size() == 1);
    CHECK(prod.parts().at(0) ==
          GrElement::from_element(ctx, empty, ctx.pw_component(a * d, 2)));
    CHECK_THROWS_AS(OrbitAlgebraElement::make(GrElement::from_element(ctx, empty, a), 2), user_error);
}

TEST_CASE("parabolic subspace bases") {
    const Sl2Context& ctx = Sl2Context::quantum();
    RootSubset empty;
    RootSubset full({1});
    CHECK(vI_basis(ctx, 3, empty) == std::vector<size_t>{0});
    CHECK(vI_basis(ctx, 3, full) == std::vector<size_t>{0, 1, 2, 3});
    // the kernel-of-E verification runs for every n <= 6
    for (long n = 0; n <= 6; ++n) CHECK(vI_basis(ctx, n, empty) == std::vector<size_t>{0});
}

TEST_CASE("phi on matrix coefficients") {
    const Sl2Context& ctx = Sl2Context::quantum();
    RootSubset empty;
    RootSubset full({1});
    AlgebraElement a = ctx.sl2()->element(Word{ctx.gen_a()});

    // I = full: phi is the coproduct
    CHECK(phi(ctx, full, {1, 0, 0}) == ctx.hopf().coproduct(a));
    // I = {}: the rank-one tensor through the highest-weight line
    CHECK(phi(ctx, empty, {1, 0, 0}) == TensorElement::tensor(a, a));
    // phi(1) = 1 (x) 1
    CHECK(phi(ctx, empty, {0, 0, 0}) ==
          TensorElement::tensor(ctx.sl2()->unit(), ctx.sl2()->unit()));
}

TEST_CASE("phi multiplicativity") {
    const Sl2Context& ctx = Sl2Context::quantum();
    RootSubset empty;
    RootSubset full({1});
    // highest-weight coefficients multiply trivially: both sides a^2 (x) a^2
    CHECK(phi_multiplicativity_check(ctx, empty, {1, 0, 0}, {1, 0, 0}));
    // a and d: both sides equal phi of the q bc residue
    CHECK(phi_multiplicativity_check(ctx, empty, {1, 0, 0}, {1, 1, 1}));
    AlgebraElement a = ctx.sl2()->element(Word{ctx.gen_a()});
    AlgebraElement d = ctx.sl2()->element(Word{ctx.gen_d()});
    TensorElement lhs = phi(ctx, empty, {1, 0, 0}) * phi(ctx, empty, {1, 1, 1});
    // independent route: the class-2 residue of a*d through the solver
    AlgebraElement residue = ctx.pw_component(a * d, 2);
    TensorElement expect(ctx.sl2(), 2);
    for (const auto& [n, comp] : ctx.pw_components(residue)) {
        REQUIRE(n == 2);
    }
    // expand residue over the c^{V_2} block and apply phi symbol-wise
    // residue = sum coeff * c^{V_2}_{t,t'}: recover through the product route
    CHECK(coefficient_gr_product(ctx, empty, {1, 0, 0}, {1, 1, 1}) == residue);
    CHECK_FALSE(lhs.is_zero());

    // for I = full multiplicativity reduces to Delta being an algebra map
    CHECK(phi_multiplicativity_check(ctx, full, {1, 0, 1}, {2, 1, 2}));
    // a spot check beyond the acceptance band, at rep weight 3
    CHECK(phi_multiplicativity_check(ctx, empty, {3, 1, 2}, {2, 0, 1}));
    CHECK(phi_multiplicativity_check(ctx, full, {3, 1, 2}, {1, 1, 0}));
}

TEST_CASE("coproduct respects the filtration levels") {
    // each tensor factor of Delta(x) stays inside the level of x
    const Sl2Context& ctx = Sl2Context::quantum();
    for (size_t len = 0; len <= 4; ++len)
        for (const Word& w : ctx.sl2()->normal_words_of_length(len)) {
            TensorElement delta = ctx.hopf().coproduct(ctx.sl2()->element(w));
            for (const auto& [slots, coeff] : delta.terms()) {
                CHECK(ctx.level_membership(ctx.sl2()->element(slots[0]), static_cast<long>(len)));
                CHECK(ctx.level_membership(ctx.sl2()->element(slots[1]), static_cast<long>(len)));
            }
        }
}

TEST_CASE("filtered-algebra level additivity") {
    const Sl2Context& ctx = Sl2Context::quantum();
    FilteredAlgebra filtered{&ctx};
    Rng rng;
    for (int trial = 0; trial < 15; ++trial) {
        Word w1, w2;
        for (long i = 0; i < rng.range(0, 3); ++i) w1.push_back(static_cast<char>(rng.range(0, 3)));
        for (long i = 0; i < rng.range(0, 3); ++i) w2.push_back(static_cast<char>(rng.range(0, 3)));
        AlgebraElement x = ctx.sl2()->element(w1);
        AlgebraElement y = ctx.sl2()->element(w2);
        if (x.is_zero() || y.is_zero()) continue;
        auto lx = filtered.level(x);
        auto ly = filtered.level(y);
        AlgebraElement xy = x * y;
        if (xy.is_zero()) continue;
        for (const auto& [parity, level] : filtered.level(xy))
            CHECK(level <= lx.front().second + ly.front().second);
    }
}
