#include "qwonder/rees.hpp"

#include <sstream>

namespace qwonder {

ReesElement ReesElement::unit(const Sl2Context& context) {
    ReesElement out(context);
    out.add_part(0, context.sl2()->unit());
    return out;
}

ReesElement ReesElement::part(const Sl2Context& context, const AlgebraElement& f, long lambda) {
    if (f.presentation() != context.sl2()) throw user_error("presentation mismatch");
    ReesElement out(context);
    out.add_part(lambda, f);
    return out;
}

ReesElement ReesElement::generator(const Sl2Context& context, char role) {
    int index = context.sl2()->generator_index(std::string(1, role));
    if (index < 0) throw user_error("unknown generator role");
    ReesElement out(context);
    out.add_part(1, context.sl2()->generator(static_cast<size_t>(index)));
    return out;
}

ReesElement ReesElement::z_power(const Sl2Context& context, long lambda) {
    if (lambda < 0 || lambda % 2 != 0)
        throw user_error("z^" + std::to_string(lambda) +
                         " is not an element: bare powers of z must be even and nonnegative");
    ReesElement out(context);
    out.add_part(lambda, context.sl2()->unit());
    return out;
}

void ReesElement::add_part(long lambda, const AlgebraElement& f) {
    if (f.is_zero()) return;
    if (!ctx_->level_membership(f, lambda))
        throw user_error("part violates filtration-level membership at level " +
                         std::to_string(lambda));
    auto it = parts_.find(lambda);
    if (it == parts_.end()) {
        parts_[lambda] = f;
    } else {
        it->second += f;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

ReesElement ReesElement::operator+(const ReesElement& other) const {
    ReesElement out = *this;
    for (const auto& [lambda, f] : other.parts_) out.add_part(lambda, f);
    return out;
}

ReesElement ReesElement::operator-(const ReesElement& other) const {
    return *this + other * QRational(-1);
}

ReesElement ReesElement::operator*(const QRational& scalar) const {
    ReesElement out(*ctx_);
    if (scalar.is_zero()) return out;
    for (const auto& [lambda, f] : parts_) out.parts_[lambda] = f * scalar;
    return out;
}

ReesElement ReesElement::operator*(const ReesElement& other) const {
    if (ctx_ != other.ctx_) throw user_error("context mismatch");
    ReesElement out(*ctx_);
    for (const auto& [la, f] : parts_)
        for (const auto& [mu, g] : other.parts_) out.add_part(la + mu, f * g);
    return out;
}

std::string ReesElement::to_string() const {
    if (parts_.empty()) return "0";
    // Printed in the generator surface syntax: a word w at level lambda is
    // (letters with z attached) * z^(lambda - |w|).
    std::ostringstream os;
    const auto& names = ctx_->sl2()->generator_names();
    bool first = true;
    for (const auto& [lambda, f] : parts_)
        for (const auto& [w, c] : f.terms()) {
            if (!first) os << " + ";
            first = false;
            std::vector<std::string> factors;
            for (char g : w) factors.push_back(names[static_cast<size_t>(g)] + "z");
            long rest = lambda - static_cast<long>(w.size());
            if (rest > 0) factors.push_back("z^" + std::to_string(rest));
            std::string cs = c.to_string();
            if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
            if (factors.empty()) {
                os << cs;
                continue;
            }
            bool lead = true;
            if (!c.is_one()) {
                os << cs;
                lead = false;
            }
            for (const std::string& factor : factors) {
                if (!lead) os << "*";
                lead = false;
                os << factor;
            }
        }
    return os.str();
}

ReesTensor rees_coproduct(const ReesElement& x) {
    ReesTensor out;
    for (const auto& [lambda, f] : x.parts()) {
        TensorElement delta = x.context().hopf().coproduct(f);
        auto [it, fresh] = out.parts.emplace(lambda, delta);
        if (!fresh) it->second = it->second + delta;
    }
    for (auto it = out.parts.begin(); it != out.parts.end();)
        it = it->second.is_zero() ? out.parts.erase(it) : std::next(it);
    return out;
}

QRational rees_counit(const ReesElement& x) {
    QRational out(0);
    for (const auto& [lambda, f] : x.parts()) out += x.context().hopf().counit(f);
    return out;
}

namespace {

// Map a word letterwise between presentations that share generator roles.
Word map_word(const Word& w, const std::vector<int>& letter_map) {
    Word out;
    out.reserve(w.size());
    for (char g : w) out.push_back(static_cast<char>(letter_map[static_cast<size_t>(g)]));
    return out;
}

std::vector<int> role_map(const PresentationPtr& from, const PresentationPtr& to,
                          const std::vector<std::pair<std::string, std::string>>& roles) {
    std::vector<int> map(from->generator_count(), -1);
    for (const auto& [src, dst] : roles) {
        int si = from->generator_index(src);
        int di = to->generator_index(dst);
        if (si < 0 || di < 0) throw internal_error("role map generator missing");
        map[static_cast<size_t>(si)] = di;
    }
    return map;
}

}  // namespace

AlgebraElement vinberg_to_matq(const ReesElement& x) {
    const Sl2Context& ctx = x.context();
    AlgebraElement det = quantum_determinant(ctx.mat2(), ctx.q());
    auto letters = role_map(ctx.sl2(), ctx.mat2(),
                            {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}});
    AlgebraElement out(ctx.mat2());
    for (const auto& [lambda, f] : x.parts())
        for (const auto& [w, c] : f.terms()) {
            long k = (lambda - static_cast<long>(w.size())) / 2;
            AlgebraElement term = ctx.mat2()->element(map_word(w, letters), c);
            for (long count = 0; count < k; ++count) term = term * det;
            out += term;
        }
    return out;
}

ReesElement matq_to_vinberg(const Sl2Context& context, const AlgebraElement& y) {
    if (y.presentation() != context.mat2()) throw user_error("presentation mismatch");
    auto letters = role_map(context.mat2(), context.sl2(),
                            {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}});
    ReesElement out(context);
    for (const auto& [w, c] : y.terms()) {
        long degree = static_cast<long>(w.size());
        out = out + ReesElement::part(context, context.sl2()->element(map_word(w, letters), c),
                                      degree);
    }
    return out;
}

GrElement GrElement::from_element(const Sl2Context& context, const RootSubset& I,
                                  const AlgebraElement& x) {
    GrElement out(context, I);
    if (I.contains(1)) {
        // Classes are parities; residues keep the whole parity part.
        for (const auto& [w, c] : x.terms()) {
            AlgebraElement piece(context.sl2());
            piece.add_term(w, c);
            out.add_class(static_cast<long>(w.size() % 2), piece);
        }
    } else {
        for (const auto& [n, component] : context.pw_components(x)) out.add_class(n, component);
    }
    return out;
}

void GrElement::add_class(long key, const AlgebraElement& value) {
    if (value.is_zero()) return;
    auto it = classes_.find(key);
    if (it == classes_.end()) {
        classes_[key] = value;
    } else {
        it->second += value;
        if (it->second.is_zero()) classes_.erase(it);
    }
}

GrElement GrElement::operator+(const GrElement& other) const {
    if (subset_ != other.subset_) throw user_error("root subset mismatch");
    GrElement out = *this;
    for (const auto& [k, v] : other.classes_) out.add_class(k, v);
    return out;
}

GrElement GrElement::operator*(const QRational& scalar) const {
    GrElement out(*ctx_, subset_);
    if (scalar.is_zero()) return out;
    for (const auto& [k, v] : classes_) out.classes_[k] = v * scalar;
    return out;
}

GrElement GrElement::operator*(const GrElement& other) const { return gr_multiply(*this, other); }

GrElement gr_multiply(const GrElement& x, const GrElement& y) {
    if (x.subset() != y.subset()) throw user_error("root subset mismatch");
    if (&x.context() != &y.context()) throw user_error("context mismatch");
    const Sl2Context& ctx = x.context();
    GrElement out(ctx, x.subset());
    bool full = x.full_subset();
    for (const auto& [la, f] : x.classes())
        for (const auto& [mu, g] : y.classes()) {
            AlgebraElement product = f * g;
            if (product.is_zero()) continue;
            if (full) {
                out.add_class((la + mu) % 2, product);
            } else {
                // Keep only the top matrix-coefficient block: the classes
                // nu with la + mu - nu in Lambda_I = {0}.
                out.add_class(la + mu, ctx.pw_component(product, la + mu));
            }
        }
    return out;
}

std::string GrElement::to_string() const {
    if (classes_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : classes_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << k << "]{" << v.to_string() << "}";
    }
    return os.str();
}

AlgebraElement gr_to_p1p1(const GrElement& x) {
    if (x.full_subset()) throw user_error("gr_to_p1p1 needs I = {}");
    const Sl2Context& ctx = x.context();
    const PresentationPtr& target = ctx.p1p1();
    char px = static_cast<char>(target->generator_index("x"));
    char py = static_cast<char>(target->generator_index("y"));
    char pu = static_cast<char>(target->generator_index("u"));
    char pw = static_cast<char>(target->generator_index("w"));
    // a -> x u, b -> x w, c -> y u, d -> y w (slot pairs of the two
    // commuting factors).
    std::vector<Word> image(ctx.sl2()->generator_count());
    image[static_cast<size_t>(ctx.gen_a())] = Word{px, pu};
    image[static_cast<size_t>(ctx.gen_b())] = Word{px, pw};
    image[static_cast<size_t>(ctx.gen_c())] = Word{py, pu};
    image[static_cast<size_t>(ctx.gen_d())] = Word{py, pw};
    AlgebraElement out(target);
    for (const auto& [n, residue] : x.classes())
        for (const auto& [w, c] : residue.terms()) {
            // Words shorter than the class die in the quotient.
            if (static_cast<long>(w.size()) != n) continue;
            Word mapped;
            for (char g : w) mapped += image[static_cast<size_t>(g)];
            out += target->element(mapped, c);
        }
    return out;
}

size_t gr_dimension(const Sl2Context& context, long n) {
    // The class-n piece is the c^{V_n} block; the level data verifies the
    // block ranks, giving (n+1)^2 independent residues.
    context.filtration_dimension_checked(n);
    return static_cast<size_t>((n + 1) * (n + 1));
}

OrbitAlgebraElement OrbitAlgebraElement::make(const GrElement& gr_part, long laurent_exponent) {
    if (!gr_part.full_subset() && laurent_exponent != 0)
        throw user_error("Lambda_I is trivial for I = {}: exponent must be 0");
    if (gr_part.full_subset() && laurent_exponent % 2 != 0)
        throw user_error("Lambda_I exponents are even for the full subset");
    OrbitAlgebraElement out(gr_part.context(), gr_part.subset());
    out.add_part(laurent_exponent, gr_part);
    return out;
}

void OrbitAlgebraElement::add_part(long exponent, const GrElement& value) {
    if (value.is_zero()) return;
    auto it = parts_.find(exponent);
    if (it == parts_.end()) {
        parts_.emplace(exponent, value);
    } else {
        it->second = it->second + value;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

OrbitAlgebraElement OrbitAlgebraElement::operator+(const OrbitAlgebraElement& other) const {
    if (subset_ != other.subset_) throw user_error("root subset mismatch");
    OrbitAlgebraElement out = *this;
    for (const auto& [e, v] : other.parts_) out.add_part(e, v);
    return out;
}

OrbitAlgebraElement OrbitAlgebraElement::operator*(const OrbitAlgebraElement& other) const {
    if (subset_ != other.subset_) throw user_error("root subset mismatch");
    OrbitAlgebraElement out(*ctx_, subset_);
    for (const auto& [e1, v1] : parts_)
        for (const auto& [e2, v2] : other.parts_) out.add_part(e1 + e2, gr_multiply(v1, v2));
    return out;
}

bool OrbitAlgebraElement::operator==(const OrbitAlgebraElement& other) const {
    return subset_ == other.subset_ && parts_ == other.parts_;
}

std::string OrbitAlgebraElement::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : parts_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.to_string() << ") (x) z^" << e;
    }
    return os.str();
}

std::vector<size_t> vI_basis(const Sl2Context& context, long n, const RootSubset& I) {
    if (n < 0) throw user_error("negative highest weight");
    IrrepVn rep{n};
    if (I.contains(1)) {
        std::vector<size_t> all(rep.dimension());
        for (size_t k = 0; k < all.size(); ++k) all[k] = k;
        return all;
    }
    // I = {}: the subspace is the highest-weight line; verify it equals
    // the kernel of the raising operator.
    QMatrix e_action(rep.dimension(), QVector(rep.dimension(), QRational(0)));
    for (size_t k = 0; k < rep.dimension(); ++k) {
        QVector basis(rep.dimension(), QRational(0));
        basis[k] = QRational(1);
        QVector image = act(context.q(), UqElement::gen_e(context.q()), rep, basis);
        for (size_t r = 0; r < rep.dimension(); ++r) e_action[r][k] = image[r];
    }
    auto kernel = qmat_nullspace(e_action);
    if (kernel.size() != 1) throw internal_error("raising-operator kernel is not a line");
    for (size_t k = 1; k < rep.dimension(); ++k)
        if (!kernel[0][k].is_zero()) throw internal_error("raising-operator kernel is not v_0");
    return {0};
}

TensorElement phi(const Sl2Context& context, const RootSubset& I, const MatrixCoefficient& c) {
    TensorElement out(context.sl2(), 2);
    for (size_t k : vI_basis(context, c.n, I)) {
        const AlgebraElement& left = context.coefficient_element({c.n, c.i, static_cast<long>(k)});
        const AlgebraElement& right = context.coefficient_element({c.n, static_cast<long>(k), c.j});
        out = out + TensorElement::tensor(left, right);
    }
    return out;
}

AlgebraElement coefficient_gr_product(const Sl2Context& context, const RootSubset& I,
                                      const MatrixCoefficient& c1, const MatrixCoefficient& c2) {
    auto cg = cg_decompose(context.q(), c1.n, c2.n);
    size_t cols = static_cast<size_t>(c2.n) + 1;
    size_t row_pair = static_cast<size_t>(c1.i) * cols + static_cast<size_t>(c2.i);
    size_t col_pair = static_cast<size_t>(c1.j) * cols + static_cast<size_t>(c2.j);
    AlgebraElement out(context.sl2());
    for (const auto& summand : cg->summands) {
        // Allowed classes: c1.n + c2.n - k in Lambda_I. The difference is
        // always even; only the top class survives for I = {}.
        if (!I.contains(1) && summand.k != c1.n + c2.n) continue;
        for (long t = 0; t <= summand.k; ++t) {
            const QRational& alpha = summand.inclusion[row_pair][static_cast<size_t>(t)];
            if (alpha.is_zero()) continue;
            for (long t2 = 0; t2 <= summand.k; ++t2) {
                const QRational& beta = summand.projection[static_cast<size_t>(t2)][col_pair];
                if (beta.is_zero()) continue;
                out += context.coefficient_element({summand.k, t, t2}) * (alpha * beta);
            }
        }
    }
    return out;
}

bool phi_multiplicativity_check(const Sl2Context& context, const RootSubset& I,
                                const MatrixCoefficient& c1, const MatrixCoefficient& c2) {
    auto cg = cg_decompose(context.q(), c1.n, c2.n);
    size_t cols = static_cast<size_t>(c2.n) + 1;
    size_t row_pair = static_cast<size_t>(c1.i) * cols + static_cast<size_t>(c2.i);
    size_t col_pair = static_cast<size_t>(c1.j) * cols + static_cast<size_t>(c2.j);
    TensorElement lhs(context.sl2(), 2);
    for (const auto& summand : cg->summands) {
        if (!I.contains(1) && summand.k != c1.n + c2.n) continue;
        for (long t = 0; t <= summand.k; ++t) {
            const QRational& alpha = summand.inclusion[row_pair][static_cast<size_t>(t)];
            if (alpha.is_zero()) continue;
            for (long t2 = 0; t2 <= summand.k; ++t2) {
                const QRational& beta = summand.projection[static_cast<size_t>(t2)][col_pair];
                if (beta.is_zero()) continue;
                lhs = lhs + phi(context, I, {summand.k, t, t2}) * (alpha * beta);
            }
        }
    }
    TensorElement rhs = phi(context, I, c1) * phi(context, I, c2);
    return lhs == rhs;
}

}  // namespace qwonder
