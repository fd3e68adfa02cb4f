#include "qwonder/presentations.hpp"

namespace qwonder {

namespace {

Word w(std::initializer_list<int> letters) {
    Word out;
    for (int g : letters) out.push_back(static_cast<char>(g));
    return out;
}

// Generators a=0, b=1, c=2, d=3. Relations of the quantum 2x2 matrix
// bialgebra: ab=qba, ac=qca, bc=cb, bd=qdb, cd=qdc, ad-da=(q-q^-1)bc,
// oriented to sort words into a^i b^j c^k d^l.
std::vector<Rule> mat2_rules(const QRational& q) {
    QRational qi = q.inverse();
    return {
        {w({1, 0}), {{w({0, 1}), qi}}},                            // ba -> q^-1 ab
        {w({2, 0}), {{w({0, 2}), qi}}},                            // ca -> q^-1 ac
        {w({2, 1}), {{w({1, 2}), QRational(1)}}},                  // cb -> bc
        {w({3, 1}), {{w({1, 3}), qi}}},                            // db -> q^-1 bd
        {w({3, 2}), {{w({2, 3}), qi}}},                            // dc -> q^-1 cd
        {w({3, 0}), {{w({0, 3}), QRational(1)}, {w({1, 2}), -(q - qi)}}},  // da -> ad - (q-q^-1)bc
    };
}

}  // namespace

Sl2Presentations make_sl2_presentations(const QRational& q, const std::string& suffix) {
    Sl2Presentations family;
    family.q = q;
    QRational qi = q.inverse();

    {
        Presentation::Config config;
        config.name = "mat2" + suffix;
        config.generators = {"a", "b", "c", "d"};
        config.rules = mat2_rules(q);
        config.grading = std::vector<Weight>{Weight::of(1), Weight::of(1), Weight::of(1), Weight::of(1)};
        family.mat2 = Presentation::make(std::move(config));
    }
    {
        // Determinant eliminated: ad -> 1 + q bc, da -> 1 + q^-1 bc.
        // Generator order b < c < a < d keeps a and d adjacent in sorted
        // words, which makes the seven-rule system confluent; normal words
        // are b^j c^k a^i and b^j c^k d^l, so no word mixes a and d.
        Presentation::Config config;
        config.name = "sl2" + suffix;
        config.generators = {"b", "c", "a", "d"};
        const int b = 0, c = 1, a = 2, d = 3;
        config.rules = {
            {w({a, b}), {{w({b, a}), q}}},             // ab -> q ba
            {w({a, c}), {{w({c, a}), q}}},             // ac -> q ca
            {w({c, b}), {{w({b, c}), QRational(1)}}},  // cb -> bc
            {w({d, b}), {{w({b, d}), qi}}},            // db -> q^-1 bd
            {w({d, c}), {{w({c, d}), qi}}},            // dc -> q^-1 cd
            {w({a, d}), {{Word(), QRational(1)}, {w({b, c}), q}}},   // ad -> 1 + q bc
            {w({d, a}), {{Word(), QRational(1)}, {w({b, c}), qi}}},  // da -> 1 + q^-1 bc
        };
        family.sl2 = Presentation::make(std::move(config));
    }
    {
        Presentation::Config config;
        config.name = "vinberg" + suffix;
        config.generators = {"az", "bz", "cz", "dz"};
        config.rules = mat2_rules(q);
        config.grading = std::vector<Weight>{Weight::of(1), Weight::of(1), Weight::of(1), Weight::of(1)};
        family.vinberg = Presentation::make(std::move(config));
    }
    {
        // Two commuting q-plane factors: xy = q yx, uw = q wu.
        Presentation::Config config;
        config.name = "p1p1" + suffix;
        config.generators = {"x", "y", "u", "w"};
        config.rules = {
            {w({1, 0}), {{w({0, 1}), qi}}},            // yx -> q^-1 xy
            {w({2, 0}), {{w({0, 2}), QRational(1)}}},  // ux -> xu
            {w({2, 1}), {{w({1, 2}), QRational(1)}}},  // uy -> yu
            {w({3, 0}), {{w({0, 3}), QRational(1)}}},  // wx -> xw
            {w({3, 1}), {{w({1, 3}), QRational(1)}}},  // wy -> yw
            {w({3, 2}), {{w({2, 3}), qi}}},            // wu -> q^-1 uw
        };
        config.grading = std::vector<Weight>{Weight({1, 0}), Weight({1, 0}), Weight({0, 1}), Weight({0, 1})};
        family.p1p1 = Presentation::make(std::move(config));
    }
    return family;
}

const Sl2Presentations& quantum_presentations() {
    static const Sl2Presentations family = make_sl2_presentations(QRational::q_power(1), "");
    return family;
}

const Sl2Presentations& classical_presentations() {
    static const Sl2Presentations family = make_sl2_presentations(QRational(1), "-classical");
    return family;
}

AlgebraElement quantum_determinant(const PresentationPtr& mat2, const QRational& q) {
    AlgebraElement det(mat2);
    det.add_term(w({0, 3}), 1);
    det.add_term(w({1, 2}), -q);
    return det;
}

}  // namespace qwonder
