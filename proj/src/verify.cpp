#include "qwonder/verify.hpp"

#include <functional>
#include <sstream>

#include "qwonder/graded_module.hpp"
#include "qwonder/poisson.hpp"
#include "qwonder/rees.hpp"

namespace qwonder {

namespace {

struct Check {
    SuiteResult* result;

    void operator()(bool condition, const std::string& what) {
        result->pass = result->pass && condition;
        if (!condition) result->details.push_back("FAILED: " + what);
    }
    void note(const std::string& what) { result->details.push_back(what); }
};

struct Rng {
    uint64_t state = 0xa0761d6478bd642full;
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1)); }
};

constexpr size_t kFiltrationDims[] = {1, 4, 10, 20, 35, 56, 84};

void suite_confluence(SuiteResult& r) {
    Check check{&r};
    for (const Sl2Context* ctx : {&Sl2Context::quantum(), &Sl2Context::classical()}) {
        std::string tag = ctx->is_classical() ? " (q=1)" : "";
        check(ctx->mat2()->check_local_confluence().empty(), "mat2 confluent" + tag);
        check(ctx->sl2()->check_local_confluence().empty(), "sl2 confluent" + tag);
        check(ctx->vinberg()->check_local_confluence().empty(), "vinberg confluent" + tag);
        check(ctx->p1p1()->check_local_confluence().empty(), "p1p1 confluent" + tag);
    }
    check.note("all overlap ambiguities of the shipped presentations resolve");
}

void suite_centrality(SuiteResult& r) {
    Check check{&r};
    const Sl2Context& ctx = Sl2Context::quantum();
    AlgebraElement det = quantum_determinant(ctx.mat2(), ctx.q());
    for (size_t g = 0; g < 4; ++g) {
        AlgebraElement gen = ctx.mat2()->generator(g);
        check(det * gen == gen * det,
              "determinant commutes with " + ctx.mat2()->generator_names()[g]);
    }
    check(ctx.mat2()->is_central(det), "determinant is central");
}

void suite_pw_dims(SuiteResult& r) {
    Check check{&r};
    const Sl2Context& ctx = Sl2Context::quantum();
    std::ostringstream os;
    for (long n = 0; n <= 6; ++n) {
        size_t by_words = ctx.filtration_dimension_by_words(n);
        size_t by_coefficients = ctx.filtration_dimension_checked(n);
        check(by_words == kFiltrationDims[n],
              "level " + std::to_string(n) + " word count = " + std::to_string(kFiltrationDims[n]));
        check(by_coefficients == by_words,
              "level " + std::to_string(n) + " coefficient count agrees");
        os << (n ? ", " : "") << by_words;
    }
    check.note("levels 0..6: " + os.str());
}

void suite_vinberg_iso(SuiteResult& r) {
    Check check{&r};
    const Sl2Context& ctx = Sl2Context::quantum();
    ReesElement az = ReesElement::generator(ctx, 'a');
    ReesElement bz = ReesElement::generator(ctx, 'b');
    ReesElement cz = ReesElement::generator(ctx, 'c');
    ReesElement dz = ReesElement::generator(ctx, 'd');
    const QRational& q = ctx.q();
    QRational qi = q.inverse();
    // the defining relations hold among the rees generators and map over
    check(az * bz == (bz * az) * q, "az bz = q bz az");
    check(az * cz == (cz * az) * q, "az cz = q cz az");
    check(bz * cz == cz * bz, "bz cz = cz bz");
    check(bz * dz == (dz * bz) * q, "bz dz = q dz bz");
    check(cz * dz == (dz * cz) * q, "cz dz = q dz cz");
    check(az * dz - dz * az == (bz * cz) * (q - qi), "az dz - dz az = (q - q^-1) bz cz");
    check(az * dz - (bz * cz) * q == ReesElement::z_power(ctx, 2), "az dz - q bz cz = z^2");
    check(vinberg_to_matq(ReesElement::z_power(ctx, 2)) == quantum_determinant(ctx.mat2(), q),
          "z^2 maps to the quantum determinant");
    // graded dimensions agree with the matrix algebra in degrees 0..6,
    // witnessed by a bijective round trip on every basis word
    for (long n = 0; n <= 6; ++n) {
        auto words = ctx.mat2()->normal_words_of_degree(Weight::of(n), 8);
        check(words.size() == kFiltrationDims[n],
              "matrix algebra degree " + std::to_string(n) + " dimension");
        check(ctx.filtration_dimension_by_words(n) == words.size(),
              "rees degree " + std::to_string(n) + " dimension");
        bool round_trips = true;
        for (const Word& w : words) {
            AlgebraElement y = ctx.mat2()->element(w);
            round_trips = round_trips && vinberg_to_matq(matq_to_vinberg(ctx, y)) == y;
        }
        check(round_trips, "round trip on degree " + std::to_string(n) + " basis");
    }
    // coproducts of the four generators map to the matrix coproducts
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
        AlgebraElement g = ctx.mat2()->element(
            Word{static_cast<char>(ctx.mat2()->generator_index(std::string(1, role)))});
        check(mapped == ctx.matrix_bialgebra().coproduct(g),
              std::string("coproduct of ") + role + "z transports");
    }
}

void suite_gr_p1p1(SuiteResult& r) {
    Check check{&r};
    const Sl2Context& ctx = Sl2Context::quantum();
    RootSubset empty;
    std::vector<char> roles = {ctx.gen_a(), ctx.gen_b(), ctx.gen_c(), ctx.gen_d()};
    for (char g : roles)
        for (char h : roles) {
            GrElement gbar = GrElement::from_element(ctx, empty, ctx.sl2()->element(Word{g}));
            GrElement hbar = GrElement::from_element(ctx, empty, ctx.sl2()->element(Word{h}));
            check(gr_to_p1p1(gbar * hbar) == gr_to_p1p1(gbar) * gr_to_p1p1(hbar),
                  std::string("product ") + ctx.sl2()->generator_names()[static_cast<size_t>(g)] +
                      "*" + ctx.sl2()->generator_names()[static_cast<size_t>(h)]);
        }
    for (long n = 0; n <= 5; ++n) {
        check(gr_dimension(ctx, n) == static_cast<size_t>((n + 1) * (n + 1)),
              "gr class " + std::to_string(n) + " has dimension (n+1)^2");
        check(ctx.p1p1()->dimension_of_graded_piece(Weight({n, n}), 16) ==
                  static_cast<size_t>((n + 1) * (n + 1)),
              "bidegree (" + std::to_string(n) + "," + std::to_string(n) + ") count");
    }
}

void suite_semiclassical(SuiteResult& r) {
    Check check{&r};
    const char roles[] = {'a', 'b', 'c', 'd'};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            SemiclassicalResult plain = semiclassical_check(roles[i], roles[j]);
            check(plain.matches,
                  std::string("coordinate bracket {") + roles[i] + "," + roles[j] + "}");
            SemiclassicalReesResult rees = semiclassical_rees_check(roles[i], roles[j]);
            check(rees.matches,
                  std::string("rees bracket {") + roles[i] + "z," + roles[j] + "z}");
        }
    check.note("all twelve generator brackets match the classical tables");
}

void suite_hopf(SuiteResult& r) {
    Check check{&r};
    const Sl2Context& ctx = Sl2Context::quantum();
    const HopfStructure& H = ctx.hopf();
    Rng rng;
    std::vector<AlgebraElement> samples;
    for (char g : {ctx.gen_a(), ctx.gen_b(), ctx.gen_c(), ctx.gen_d()})
        samples.push_back(ctx.sl2()->element(Word{g}));
    for (int i = 0; i < 20; ++i) {
        AlgebraElement x(ctx.sl2());
        int terms = static_cast<int>(rng.range(1, 3));
        for (int t = 0; t < terms; ++t) {
            Word w;
            for (long l = 0; l < rng.range(0, 3); ++l) w.push_back(static_cast<char>(rng.range(0, 3)));
            x += ctx.sl2()->element(w, QRational::q_power(rng.range(-1, 1), Rational(rng.range(-2, 3))));
        }
        samples.push_back(x);
    }
    size_t index = 0;
    for (const AlgebraElement& x : samples) {
        std::string tag = "sample " + std::to_string(index++);
        TensorElement delta = H.coproduct(x);
        check(H.coproduct_slot(delta, 0) == H.coproduct_slot(delta, 1), "coassociativity on " + tag);
        check(H.counit_slot(delta, 0).to_element() == x, "left counit on " + tag);
        check(H.counit_slot(delta, 1).to_element() == x, "right counit on " + tag);
        AlgebraElement eta_eps = ctx.sl2()->unit() * H.counit(x);
        check(H.antipode_slot(delta, 0).multiply_out() == eta_eps, "left antipode on " + tag);
        check(H.antipode_slot(delta, 1).multiply_out() == eta_eps, "right antipode on " + tag);
    }
}

void suite_phi_mult(SuiteResult& r) {
    Check check{&r};
    const Sl2Context& ctx = Sl2Context::quantum();
    RootSubset empty;
    RootSubset full({1});
    std::vector<MatrixCoefficient> symbols;
    for (long n = 0; n <= 2; ++n)
        for (long i = 0; i <= n; ++i)
            for (long j = 0; j <= n; ++j) symbols.push_back({n, i, j});
    size_t failures_empty = 0, failures_full = 0, delta_mismatch = 0;
    for (const auto& c1 : symbols)
        for (const auto& c2 : symbols) {
            if (!phi_multiplicativity_check(ctx, empty, c1, c2)) ++failures_empty;
            if (!phi_multiplicativity_check(ctx, full, c1, c2)) ++failures_full;
        }
    for (const auto& c : symbols)
        if (phi(ctx, full, c) != ctx.hopf().coproduct(ctx.coefficient_element(c))) ++delta_mismatch;
    check(failures_empty == 0, "multiplicativity for I = {} on all pairs of rep weight <= 2");
    check(failures_full == 0, "multiplicativity for I = full on all pairs of rep weight <= 2");
    check(delta_mismatch == 0, "phi with I = full coincides with the coproduct");
    check.note(std::to_string(symbols.size() * symbols.size()) + " pairs per subset checked");
}

void suite_torsion(SuiteResult& r) {
    Check check{&r};
    const Sl2Context& ctx = Sl2Context::quantum();
    auto vinberg = ctx.vinberg();
    std::vector<AlgebraElement> gens;
    for (size_t g = 0; g < 4; ++g) gens.push_back(vinberg->generator(g));
    auto R = GradedModulePresentation::free_module(vinberg, Weight::of(0));
    auto M = GradedModulePresentation::cyclic_quotient(vinberg, gens);
    auto N = GradedModulePresentation::cyclic_quotient(
        vinberg, {quantum_determinant(vinberg, ctx.q())});
    check(is_torsion(M, Weight::of(1), 6).verdict == TorsionCertificate::Verdict::torsion,
          "quotient by the four degree-1 generators is torsion");
    check(is_torsion(R, Weight::of(0), 5).verdict == TorsionCertificate::Verdict::not_torsion,
          "the free module is not torsion");
    check(is_torsion(N, Weight::of(0), 4).verdict == TorsionCertificate::Verdict::not_torsion,
          "the quotient by z^2 is not torsion");
    for (long n = 0; n <= 4; ++n)
        check(GradedPiece(N, Weight::of(n), 12).dimension() ==
                  static_cast<size_t>((n + 1) * (n + 1)),
              "z^2 quotient degree " + std::to_string(n) + " has dimension (n+1)^2");
}

void suite_q1(SuiteResult& r) {
    Check check{&r};
    const Sl2Context& ctx = Sl2Context::classical();
    // commutativity of the q=1 matrix algebra
    for (size_t g = 0; g < 4; ++g)
        for (size_t h = 0; h < 4; ++h)
            check(ctx.mat2()->generator(g) * ctx.mat2()->generator(h) ==
                      ctx.mat2()->generator(h) * ctx.mat2()->generator(g),
                  "q=1 generators commute");
    // monomial description of the filtration levels
    for (long n = 0; n <= 6; ++n) {
        check(ctx.filtration_dimension_by_words(n) == kFiltrationDims[n],
              "q=1 level " + std::to_string(n) + " by the monomial description");
        check(ctx.filtration_dimension_checked(n) == kFiltrationDims[n],
              "q=1 level " + std::to_string(n) + " by matrix coefficients");
    }
    // associated graded dimensions (n+1)^2
    for (long n = 0; n <= 5; ++n) {
        check(gr_dimension(ctx, n) == static_cast<size_t>((n + 1) * (n + 1)),
              "q=1 gr class " + std::to_string(n));
        check(ctx.p1p1()->dimension_of_graded_piece(Weight({n, n}), 16) ==
                  static_cast<size_t>((n + 1) * (n + 1)),
              "q=1 bidegree count " + std::to_string(n));
    }
    // the q=1 rees algebra is the classical matrix algebra
    for (long n = 0; n <= 6; ++n) {
        auto words = ctx.mat2()->normal_words_of_degree(Weight::of(n), 8);
        bool round_trips = true;
        for (const Word& w : words) {
            AlgebraElement y = ctx.mat2()->element(w);
            round_trips = round_trips && vinberg_to_matq(matq_to_vinberg(ctx, y)) == y;
        }
        check(round_trips, "q=1 rees round trip in degree " + std::to_string(n));
    }
    // gr products through the q=1 projective coordinates
    RootSubset empty;
    std::vector<char> roles = {ctx.gen_a(), ctx.gen_b(), ctx.gen_c(), ctx.gen_d()};
    for (char g : roles)
        for (char h : roles) {
            GrElement gbar = GrElement::from_element(ctx, empty, ctx.sl2()->element(Word{g}));
            GrElement hbar = GrElement::from_element(ctx, empty, ctx.sl2()->element(Word{h}));
            check(gr_to_p1p1(gbar * hbar) == gr_to_p1p1(gbar) * gr_to_p1p1(hbar),
                  "q=1 gr product respects the coordinate map");
        }
    // hopf axioms specialize
    const HopfStructure& H = ctx.hopf();
    for (char g : roles) {
        AlgebraElement x = ctx.sl2()->element(Word{g});
        TensorElement delta = H.coproduct(x);
        check(H.coproduct_slot(delta, 0) == H.coproduct_slot(delta, 1), "q=1 coassociativity");
        check(H.counit_slot(delta, 0).to_element() == x, "q=1 counit");
        check(H.antipode_slot(delta, 0).multiply_out() == ctx.sl2()->unit() * H.counit(x),
              "q=1 antipode");
    }
    // orbit-embedding multiplicativity specializes
    RootSubset full({1});
    std::vector<MatrixCoefficient> symbols;
    for (long n = 0; n <= 2; ++n)
        for (long i = 0; i <= n; ++i)
            for (long j = 0; j <= n; ++j) symbols.push_back({n, i, j});
    size_t failures = 0;
    for (const auto& c1 : symbols)
        for (const auto& c2 : symbols) {
            if (!phi_multiplicativity_check(ctx, empty, c1, c2)) ++failures;
            if (!phi_multiplicativity_check(ctx, full, c1, c2)) ++failures;
        }
    check(failures == 0, "q=1 orbit-embedding multiplicativity on all pairs of rep weight <= 2");
    // torsion verdicts specialize
    auto vinberg = ctx.vinberg();
    std::vector<AlgebraElement> gens;
    for (size_t g = 0; g < 4; ++g) gens.push_back(vinberg->generator(g));
    check(is_torsion(GradedModulePresentation::cyclic_quotient(vinberg, gens), Weight::of(1), 6)
                  .verdict == TorsionCertificate::Verdict::torsion,
          "q=1 augmentation quotient is torsion");
    check(is_torsion(GradedModulePresentation::free_module(vinberg, Weight::of(0)), Weight::of(0),
                     5)
                  .verdict == TorsionCertificate::Verdict::not_torsion,
          "q=1 free module is not torsion");
    check(is_torsion(GradedModulePresentation::cyclic_quotient(
                         vinberg, {quantum_determinant(vinberg, ctx.q())}),
                     Weight::of(0), 4)
                  .verdict == TorsionCertificate::Verdict::not_torsion,
          "q=1 quotient by the determinant is not torsion");
}

void suite_veronese(SuiteResult& r) {
    Check check{&r};
    const Sl2Context& ctx = Sl2Context::quantum();
    auto table = ctx.vinberg()->veronese(Weight::of(1), 3, 12);
    size_t expect[] = {1, 4, 10, 20};
    for (long n = 0; n <= 3; ++n)
        check(table[static_cast<size_t>(n)].basis_words.size() == expect[n],
              "veronese level " + std::to_string(n) + " has dimension " +
                  std::to_string(expect[n]));
}

void suite_irreps(SuiteResult& r) {
    Check check{&r};
    const QRational q = QRational::q_power(1);
    UqElement E = UqElement::gen_e(q);
    UqElement F = UqElement::gen_f(q);
    UqElement K = UqElement::gen_k(q);
    UqElement Kinv = UqElement::gen_k(q, -1);
    for (long n = 0; n <= 6; ++n) {
        IrrepVn rep{n};
        bool relations_hold = true;
        for (size_t k = 0; k < rep.dimension(); ++k) {
            QVector v(rep.dimension(), QRational(0));
            v[k] = QRational(1);
            QVector ef = act(q, E, rep, act(q, F, rep, v));
            QVector fe = act(q, F, rep, act(q, E, rep, v));
            QVector kk = act(q, Kinv, rep, act(q, K, rep, v));
            QVector ke = act(q, K, rep, act(q, E, rep, v));
            QVector ek = act(q, E, rep, act(q, K, rep, v));
            QVector kf = act(q, K, rep, act(q, F, rep, v));
            QVector fk = act(q, F, rep, act(q, K, rep, v));
            for (size_t t = 0; t < rep.dimension(); ++t) {
                QRational bracket = (t == k) ? QRational(quantum_integer(rep.weight_of(k))) : QRational(0);
                relations_hold = relations_hold && (ef[t] - fe[t] == bracket);
                relations_hold = relations_hold && (kk[t] == (t == k ? QRational(1) : QRational(0)));
                relations_hold = relations_hold && (ke[t] == QRational::q_power(2) * ek[t]);
                relations_hold = relations_hold && (kf[t] == QRational::q_power(-2) * fk[t]);
            }
        }
        check(relations_hold, "defining relations hold on V_" + std::to_string(n));
    }
    for (long n = 0; n <= 6; ++n)
        for (long m = 0; n + m <= 6; ++m) {
            auto cg = cg_decompose(q, n, m);
            size_t total = static_cast<size_t>(n + 1) * static_cast<size_t>(m + 1);
            bool ok = true;
            long expect_k = n + m;
            for (const auto& s : cg->summands) {
                ok = ok && s.k == expect_k;
                expect_k -= 2;
            }
            ok = ok && expect_k == (n > m ? n - m : m - n) - 2;
            for (const auto& s1 : cg->summands)
                for (const auto& s2 : cg->summands) {
                    QMatrix prod = qmat_multiply(s1.projection, s2.inclusion);
                    for (size_t row = 0; row < prod.size(); ++row)
                        for (size_t col = 0; col < prod[row].size(); ++col)
                            ok = ok && prod[row][col] ==
                                           (s1.k == s2.k && row == col ? QRational(1) : QRational(0));
                }
            QMatrix completeness(total, QVector(total, QRational(0)));
            for (const auto& s : cg->summands) {
                QMatrix p = qmat_multiply(s.inclusion, s.projection);
                for (size_t row = 0; row < total; ++row)
                    for (size_t col = 0; col < total; ++col) completeness[row][col] += p[row][col];
            }
            for (size_t row = 0; row < total; ++row)
                for (size_t col = 0; col < total; ++col)
                    ok = ok && completeness[row][col] == (row == col ? QRational(1) : QRational(0));
            check(ok, "decomposition invariants for V_" + std::to_string(n) + " (x) V_" +
                          std::to_string(m));
        }
}

const std::vector<std::pair<std::string, std::function<void(SuiteResult&)>>>& suite_table() {
    static const std::vector<std::pair<std::string, std::function<void(SuiteResult&)>>> table = {
        {"confluence", suite_confluence},
        {"centrality", suite_centrality},
        {"pw-dims", suite_pw_dims},
        {"vinberg-iso", suite_vinberg_iso},
        {"gr-p1p1", suite_gr_p1p1},
        {"semiclassical", suite_semiclassical},
        {"hopf", suite_hopf},
        {"phi-mult", suite_phi_mult},
        {"torsion", suite_torsion},
        {"q1-specialization", suite_q1},
        {"veronese", suite_veronese},
        {"irreps", suite_irreps},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name) {
    for (const auto& [suite_name, fn] : suite_table()) {
        if (suite_name != name) continue;
        SuiteResult result;
        result.name = suite_name;
        result.pass = true;
        try {
            fn(result);
        } catch (const std::exception& e) {
            result.pass = false;
            result.details.push_back(std::string("exception: ") + e.what());
        }
        return result;
    }
    throw user_error("unknown verification suite: " + name);
}

std::vector<SuiteResult> run_all_suites() {
    std::vector<SuiteResult> out;
    for (const std::string& name : suite_names()) out.push_back(run_suite(name));
    return out;
}

}  // namespace qwonder
