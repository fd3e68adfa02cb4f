#include "qwonder/poisson.hpp"

namespace qwonder {

PoissonPresentation::PoissonPresentation(PresentationPtr base,
                                         std::map<std::pair<char, char>, AlgebraElement> table)
    : base_(std::move(base)), table_(std::move(table)) {
    size_t n = base_->generator_count();
    for (size_t g = 0; g < n; ++g)
        for (size_t h = 0; h < n; ++h)
            if (base_->generator(g) * base_->generator(h) != base_->generator(h) * base_->generator(g))
                throw user_error("poisson base algebra must be commutative");
    for (const auto& [key, value] : table_) {
        if (key.first >= key.second) throw user_error("bracket table keys must have g < h");
        if (!value.is_zero() && value.presentation() != base_)
            throw user_error("bracket table presentation mismatch");
    }
    // Jacobi on all generator triples.
    for (size_t g = 0; g < n; ++g)
        for (size_t h = 0; h < n; ++h)
            for (size_t k = 0; k < n; ++k) {
                AlgebraElement x = base_->generator(g);
                AlgebraElement y = base_->generator(h);
                AlgebraElement z = base_->generator(k);
                AlgebraElement jacobi = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                                        bracket(z, bracket(x, y));
                if (!jacobi.is_zero()) throw user_error("bracket table violates the Jacobi identity");
            }
}

AlgebraElement PoissonPresentation::generator_bracket(char g, char h) const {
    if (g == h) return base_->zero();
    bool flip = g > h;
    auto it = table_.find(flip ? std::make_pair(h, g) : std::make_pair(g, h));
    if (it == table_.end()) return base_->zero();
    return flip ? -it->second : it->second;
}

AlgebraElement PoissonPresentation::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
    if ((!x.is_zero() && x.presentation() != base_) || (!y.is_zero() && y.presentation() != base_))
        throw user_error("presentation mismatch");
    AlgebraElement out = base_->zero();
    // Leibniz on commutative words:
    // {u_1...u_m, v_1...v_l} = sum_{i,j} {u_i, v_j} (u without i)(v without j).
    for (const auto& [u, cu] : x.terms())
        for (const auto& [v, cv] : y.terms()) {
            for (size_t i = 0; i < u.size(); ++i)
                for (size_t j = 0; j < v.size(); ++j) {
                    AlgebraElement core = generator_bracket(u[i], v[j]);
                    if (core.is_zero()) continue;
                    Word rest = u.substr(0, i) + u.substr(i + 1) + v.substr(0, j) + v.substr(j + 1);
                    out += core * base_->element(rest, cu * cv);
                }
        }
    return out;
}

const PoissonPresentation& classical_sl2_poisson() {
    static const PoissonPresentation structure = [] {
        const Sl2Context& ctx = Sl2Context::classical();
        const PresentationPtr& p = ctx.sl2();
        char a = ctx.gen_a(), b = ctx.gen_b(), c = ctx.gen_c(), d = ctx.gen_d();
        auto word2 = [&](char g, char h) { return p->element(Word{g, h}); };
        std::map<std::pair<char, char>, AlgebraElement> table;
        auto put = [&](char g, char h, const AlgebraElement& v) {
            table[g < h ? std::make_pair(g, h) : std::make_pair(h, g)] =
                g < h ? v : -v;
        };
        put(a, b, word2(a, b));
        put(a, c, word2(a, c));
        put(b, c, p->zero());
        put(b, d, word2(b, d));
        put(c, d, word2(c, d));
        put(a, d, word2(b, c) * QRational(2));
        return PoissonPresentation(p, std::move(table));
    }();
    return structure;
}

ReesElement rees_bracket(const ReesElement& x, const ReesElement& y) {
    const Sl2Context& ctx = x.context();
    if (!ctx.is_classical()) throw user_error("rees_bracket needs the q=1 context");
    const PoissonPresentation& poisson = classical_sl2_poisson();
    ReesElement out(ctx);
    for (const auto& [la, f] : x.parts())
        for (const auto& [mu, g] : y.parts()) {
            AlgebraElement value = poisson.bracket(f, g);
            if (!value.is_zero()) out = out + ReesElement::part(ctx, value, la + mu);
        }
    return out;
}

LocalizedReesElement localized_bracket(const LocalizedReesElement& x,
                                       const LocalizedReesElement& y) {
    const Sl2Context& ctx = x.numerator.context();
    if (x.inverse_power < 0 || y.inverse_power < 0) throw user_error("negative inverse power");
    ReesElement r = ReesElement::z_power(ctx, 2);
    ReesElement main = rees_bracket(x.numerator, y.numerator);
    // correction terms from {x, r^-k} = -k r^-(k+1) {x, r}
    ReesElement corr_x = rees_bracket(x.numerator, r) * y.numerator * QRational(-y.inverse_power);
    ReesElement corr_y = rees_bracket(y.numerator, r) * x.numerator * QRational(x.inverse_power);
    long k = x.inverse_power + y.inverse_power;
    // align denominators: main / r^k, corrections / r^(k+1)
    LocalizedReesElement out{main * r + corr_x + corr_y, k + 1};
    // cancel r when possible to keep a small canonical form
    while (out.inverse_power > 0) {
        bool divisible = true;
        ReesElement quotient(ctx);
        for (const auto& [lambda, f] : out.numerator.parts()) {
            if (lambda < 2 || !ctx.level_membership(f, lambda - 2)) {
                divisible = false;
                break;
            }
            quotient = quotient + ReesElement::part(ctx, f, lambda - 2);
        }
        if (!divisible) break;
        out.numerator = quotient;
        --out.inverse_power;
    }
    return out;
}

namespace {

// The quantum and classical towers share generator indices by construction.
AlgebraElement transport_to_classical(const AlgebraElement& x) {
    const Sl2Context& cl = Sl2Context::classical();
    AlgebraElement out(cl.sl2());
    for (const auto& [w, c] : x.terms()) {
        if (c.eval_at_one() != 0)
            throw user_error("commutator does not vanish at q=1");
        out += cl.sl2()->element(w, QRational(c.semiclassical_coefficient()));
    }
    return out;
}

}  // namespace

SemiclassicalResult semiclassical_check(char role_x, char role_y) {
    const Sl2Context& qu = Sl2Context::quantum();
    const Sl2Context& cl = Sl2Context::classical();
    int ix = qu.sl2()->generator_index(std::string(1, role_x));
    int iy = qu.sl2()->generator_index(std::string(1, role_y));
    if (ix < 0 || iy < 0) throw user_error("unknown generator role");
    AlgebraElement x = qu.sl2()->generator(static_cast<size_t>(ix));
    AlgebraElement y = qu.sl2()->generator(static_cast<size_t>(iy));
    SemiclassicalResult result{cl.sl2()->zero(), cl.sl2()->zero(), false};
    result.limit = transport_to_classical(x * y - y * x);
    result.table_value = classical_sl2_poisson().bracket(
        cl.sl2()->generator(static_cast<size_t>(ix)), cl.sl2()->generator(static_cast<size_t>(iy)));
    result.matches = result.limit == result.table_value;
    return result;
}

SemiclassicalReesResult semiclassical_rees_check(char role_x, char role_y) {
    const Sl2Context& qu = Sl2Context::quantum();
    const Sl2Context& cl = Sl2Context::classical();
    ReesElement x = ReesElement::generator(qu, role_x);
    ReesElement y = ReesElement::generator(qu, role_y);
    ReesElement commutator = x * y - y * x;
    SemiclassicalReesResult result{ReesElement(cl), ReesElement(cl), false};
    for (const auto& [lambda, f] : commutator.parts())
        result.limit = result.limit + ReesElement::part(cl, transport_to_classical(f), lambda);
    result.table_value =
        rees_bracket(ReesElement::generator(cl, role_x), ReesElement::generator(cl, role_y));
    result.matches = result.limit == result.table_value;
    return result;
}

}  // namespace qwonder
