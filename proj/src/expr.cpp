#include "qwonder/expr.hpp"

#include <cctype>

namespace qwonder {

namespace {

EvalContext make_context(const std::string& name, ContextKind kind, const Sl2Context& tower) {
    EvalContext ctx;
    ctx.name = name;
    ctx.kind = kind;
    ctx.tower = &tower;
    switch (kind) {
        case ContextKind::Mat2:
            ctx.algebra = tower.mat2();
            break;
        case ContextKind::Sl2:
        case ContextKind::Gr0:
        case ContextKind::GrD:
            ctx.algebra = tower.sl2();
            break;
        case ContextKind::Vinberg:
            ctx.algebra = tower.sl2();  // rees parts live in the coordinate algebra
            break;
        case ContextKind::P1p1:
            ctx.algebra = tower.p1p1();
            break;
        case ContextKind::Gl2:
            ctx.algebra = tower.mat2();
            ctx.localization = std::make_shared<CentralLocalization>(
                tower.mat2(), quantum_determinant(tower.mat2(), tower.q()));
            break;
    }
    return ctx;
}

const std::map<std::string, EvalContext>& context_table() {
    static const std::map<std::string, EvalContext> table = [] {
        std::map<std::string, EvalContext> t;
        auto fill = [&](const Sl2Context& tower, const std::string& prefix) {
            t.emplace(prefix + "mat2", make_context(prefix + "mat2", ContextKind::Mat2, tower));
            t.emplace(prefix + "sl2", make_context(prefix + "sl2", ContextKind::Sl2, tower));
            t.emplace(prefix + "gl2", make_context(prefix + "gl2", ContextKind::Gl2, tower));
            t.emplace(prefix + "vinberg",
                      make_context(prefix + "vinberg", ContextKind::Vinberg, tower));
            t.emplace(prefix + "gr0", make_context(prefix + "gr0", ContextKind::Gr0, tower));
            t.emplace(prefix + "grD", make_context(prefix + "grD", ContextKind::GrD, tower));
            t.emplace(prefix + "p1p1", make_context(prefix + "p1p1", ContextKind::P1p1, tower));
        };
        fill(Sl2Context::quantum(), "");
        fill(Sl2Context::classical(), "c");
        return t;
    }();
    return table;
}

}  // namespace

const EvalContext& lookup_context(const std::string& name) {
    const auto& table = context_table();
    auto it = table.find(name);
    if (it == table.end()) throw user_error("unknown context: " + name);
    return it->second;
}

std::vector<std::string> context_names() {
    std::vector<std::string> out;
    for (const auto& [name, ctx] : context_table()) out.push_back(name);
    return out;
}

const char* Value::kind_name() const {
    switch (data.index()) {
        case 0: return "scalar";
        case 1: return "element";
        case 2: return "tensor";
        case 3: return "rees";
        case 4: return "gr";
        default: return "localized";
    }
}

std::string Value::to_string(const EvalContext& context) const {
    switch (data.index()) {
        case 0: return std::get<QRational>(data).to_string();
        case 1: return std::get<AlgebraElement>(data).to_string();
        case 2: return std::get<TensorElement>(data).to_string();
        case 3: return std::get<ReesElement>(data).to_string();
        case 4: return std::get<GrElement>(data).to_string();
        default: {
            const auto& loc = std::get<CentralLocalization::Element>(data);
            std::string out = "(" + loc.numerator.to_string() + ")";
            if (loc.inverse_power > 0) out += " * D^-" + std::to_string(loc.inverse_power);
            (void)context;
            return out;
        }
    }
}

namespace {

Value scalar_value(const QRational& r) { return Value{r}; }

AlgebraElement scalar_to_element(const EvalContext& ctx, const QRational& r) {
    return ctx.algebra->unit() * r;
}

ReesElement scalar_to_rees(const EvalContext& ctx, const QRational& r) {
    return ReesElement::unit(*ctx.tower) * r;
}

GrElement scalar_to_gr(const EvalContext& ctx, const QRational& r) {
    return GrElement::from_element(*ctx.tower, ctx.subset(),
                                   ctx.tower->sl2()->unit() * r);
}

CentralLocalization::Element scalar_to_localized(const EvalContext& ctx, const QRational& r) {
    return ctx.localization->make(ctx.algebra->unit() * r, 0);
}

}  // namespace

Value add_values(const EvalContext& ctx, const Value& a, const Value& b) {
    // Scalars promote to the partner's kind.
    if (std::holds_alternative<QRational>(a.data) && !std::holds_alternative<QRational>(b.data))
        return add_values(ctx, b, a);
    if (std::holds_alternative<QRational>(b.data)) {
        const QRational& s = std::get<QRational>(b.data);
        if (std::holds_alternative<QRational>(a.data))
            return scalar_value(std::get<QRational>(a.data) + s);
        if (std::holds_alternative<AlgebraElement>(a.data))
            return Value{std::get<AlgebraElement>(a.data) + scalar_to_element(ctx, s)};
        if (std::holds_alternative<ReesElement>(a.data))
            return Value{std::get<ReesElement>(a.data) + scalar_to_rees(ctx, s)};
        if (std::holds_alternative<GrElement>(a.data))
            return Value{std::get<GrElement>(a.data) + scalar_to_gr(ctx, s)};
        if (std::holds_alternative<CentralLocalization::Element>(a.data)) {
            Value bs{scalar_to_localized(ctx, s)};
            return add_values(ctx, a, bs);
        }
        throw user_error("cannot add a scalar to a tensor");
    }
    if (a.data.index() != b.data.index())
        throw user_error(std::string("cannot add ") + a.kind_name() + " and " + b.kind_name());
    if (std::holds_alternative<AlgebraElement>(a.data))
        return Value{std::get<AlgebraElement>(a.data) + std::get<AlgebraElement>(b.data)};
    if (std::holds_alternative<TensorElement>(a.data))
        return Value{std::get<TensorElement>(a.data) + std::get<TensorElement>(b.data)};
    if (std::holds_alternative<ReesElement>(a.data))
        return Value{std::get<ReesElement>(a.data) + std::get<ReesElement>(b.data)};
    if (std::holds_alternative<GrElement>(a.data))
        return Value{std::get<GrElement>(a.data) + std::get<GrElement>(b.data)};
    // localized elements: align the inverse powers
    const auto& x = std::get<CentralLocalization::Element>(a.data);
    const auto& y = std::get<CentralLocalization::Element>(b.data);
    const CentralLocalization& loc = *ctx.localization;
    long k = std::max(x.inverse_power, y.inverse_power);
    auto lift = [&](const CentralLocalization::Element& e) {
        AlgebraElement num = e.numerator;
        for (long i = e.inverse_power; i < k; ++i) num = num * loc.inverted();
        return num;
    };
    return Value{loc.make(lift(x) + lift(y), k)};
}

Value negate_value(const Value& a) {
    if (std::holds_alternative<QRational>(a.data)) return Value{-std::get<QRational>(a.data)};
    if (std::holds_alternative<AlgebraElement>(a.data)) return Value{-std::get<AlgebraElement>(a.data)};
    if (std::holds_alternative<TensorElement>(a.data))
        return Value{std::get<TensorElement>(a.data) * QRational(-1)};
    if (std::holds_alternative<ReesElement>(a.data))
        return Value{std::get<ReesElement>(a.data) * QRational(-1)};
    if (std::holds_alternative<GrElement>(a.data))
        return Value{std::get<GrElement>(a.data) * QRational(-1)};
    auto e = std::get<CentralLocalization::Element>(a.data);
    e.numerator = -e.numerator;
    return Value{e};
}

Value multiply_values(const EvalContext& ctx, const Value& a, const Value& b) {
    if (std::holds_alternative<QRational>(a.data) && !std::holds_alternative<QRational>(b.data))
        return multiply_values(ctx, b, a);
    if (std::holds_alternative<QRational>(b.data)) {
        const QRational& s = std::get<QRational>(b.data);
        if (std::holds_alternative<QRational>(a.data))
            return scalar_value(std::get<QRational>(a.data) * s);
        if (std::holds_alternative<AlgebraElement>(a.data))
            return Value{std::get<AlgebraElement>(a.data) * s};
        if (std::holds_alternative<TensorElement>(a.data))
            return Value{std::get<TensorElement>(a.data) * s};
        if (std::holds_alternative<ReesElement>(a.data))
            return Value{std::get<ReesElement>(a.data) * s};
        if (std::holds_alternative<GrElement>(a.data))
            return Value{std::get<GrElement>(a.data) * s};
        auto e = std::get<CentralLocalization::Element>(a.data);
        e.numerator = e.numerator * s;
        return Value{e};
    }
    if (a.data.index() != b.data.index())
        throw user_error(std::string("cannot multiply ") + a.kind_name() + " and " + b.kind_name());
    if (std::holds_alternative<AlgebraElement>(a.data))
        return Value{std::get<AlgebraElement>(a.data) * std::get<AlgebraElement>(b.data)};
    if (std::holds_alternative<TensorElement>(a.data))
        return Value{std::get<TensorElement>(a.data) * std::get<TensorElement>(b.data)};
    if (std::holds_alternative<ReesElement>(a.data))
        return Value{std::get<ReesElement>(a.data) * std::get<ReesElement>(b.data)};
    if (std::holds_alternative<GrElement>(a.data))
        return Value{gr_multiply(std::get<GrElement>(a.data), std::get<GrElement>(b.data))};
    return Value{ctx.localization->multiply(std::get<CentralLocalization::Element>(a.data),
                                            std::get<CentralLocalization::Element>(b.data))};
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const EvalContext& ctx) : text_(text), ctx_(ctx) {}

    Value run() {
        Value v = parse_expr();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        size_t line = 1, column = 1;
        for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw parse_error(message, line, column);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    long parse_integer() {
        skip_space();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected an integer");
        return std::stol(text_.substr(start, pos_ - start));
    }

    Value parse_expr() {
        skip_space();
        bool negative = consume('-');
        Value acc = parse_term();
        if (negative) acc = negate_value(acc);
        while (true) {
            skip_space();
            if (consume('+')) {
                acc = add_values(ctx_, acc, parse_term());
            } else if (consume('-')) {
                acc = add_values(ctx_, acc, negate_value(parse_term()));
            } else {
                return acc;
            }
        }
    }

    bool starts_factor() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
    }

    Value parse_term() {
        skip_space();
        bool negative = consume('-');
        Value acc = parse_factor();
        if (negative) acc = negate_value(acc);
        while (true) {
            skip_space();
            if (consume('*')) {
                acc = multiply_values(ctx_, acc, parse_factor());
            } else if (starts_factor()) {
                acc = multiply_values(ctx_, acc, parse_factor());
            } else {
                return acc;
            }
        }
    }

    Value power_value(const Value& base, long exponent) {
        if (std::holds_alternative<QRational>(base.data)) {
            const QRational& s = std::get<QRational>(base.data);
            QRational out(1);
            long steps = exponent < 0 ? -exponent : exponent;
            for (long i = 0; i < steps; ++i) out = out * s;
            return Value{exponent < 0 ? out.inverse() : out};
        }
        if (std::holds_alternative<CentralLocalization::Element>(base.data) && exponent < 0) {
            // inverses exist only for pure powers of the inverted element
            const auto& e = std::get<CentralLocalization::Element>(base.data);
            const CentralLocalization& loc = *ctx_.localization;
            if (e.inverse_power == 0 && e.numerator == loc.inverted()) {
                return Value{loc.make(ctx_.algebra->unit(), -exponent)};
            }
            fail("only the inverted central element has negative powers");
        }
        if (exponent < 0) fail("negative powers exist only for scalars");
        Value acc = base;
        if (exponent == 0) return scalar_value(QRational(1));
        for (long i = 1; i < exponent; ++i) acc = multiply_values(ctx_, acc, base);
        return acc;
    }

    Value parse_factor() {
        Value base = parse_primary();
        skip_space();
        if (consume('^')) {
            long e = parse_integer();
            return power_value(base, e);
        }
        return base;
    }

    Value parse_primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = parse_integer();
            if (consume('/')) {
                long den = parse_integer();
                if (den == 0) fail("division by zero");
                return scalar_value(QRational(Rational(num, den)));
            }
            return scalar_value(QRational(num));
        }
        if (c == '(') {
            ++pos_;
            Value inner = parse_expr();
            expect(')');
            skip_space();
            if (consume('|')) {
                expect('(');
                Value right = parse_expr();
                expect(')');
                return make_tensor(inner, right);
            }
            return inner;
        }
        return parse_symbol();
    }

    Value make_tensor(const Value& left, const Value& right) {
        auto as_element = [&](const Value& v) {
            if (std::holds_alternative<AlgebraElement>(v.data)) return std::get<AlgebraElement>(v.data);
            if (std::holds_alternative<QRational>(v.data))
                return scalar_to_element(ctx_, std::get<QRational>(v.data));
            fail("tensor slots must be algebra elements");
        };
        return Value{TensorElement::tensor(as_element(left), as_element(right))};
    }

    Value parse_symbol() {
        skip_space();
        size_t start = pos_;
        // gr wrapper
        if (text_.compare(pos_, 3, "gr[") == 0 &&
            (ctx_.kind == ContextKind::Gr0 || ctx_.kind == ContextKind::GrD)) {
            pos_ += 3;
            RootSubset subset;
            if (consume('D') || consume('1')) subset = RootSubset({1});
            expect(']');
            if (subset != ctx_.subset()) fail("gr subset does not match the context");
            expect('{');
            // The interior evaluates in the plain coordinate algebra; the
            // wrapper is the vector-space identification with gr.
            size_t depth = 1;
            size_t inner_start = pos_;
            while (pos_ < text_.size() && depth > 0) {
                if (text_[pos_] == '{') ++depth;
                if (text_[pos_] == '}') --depth;
                if (depth > 0) ++pos_;
            }
            if (depth != 0) fail("unterminated gr wrapper");
            std::string inner_text = text_.substr(inner_start, pos_ - inner_start);
            expect('}');
            AlgebraElement inner =
                parse_element(inner_text, lookup_context(ctx_.classical() ? "csl2" : "sl2"));
            return Value{GrElement::from_element(*ctx_.tower, subset, inner)};
        }
        // matrix coefficient c[n;i,j]
        if (text_.compare(pos_, 2, "c[") == 0 &&
            (ctx_.kind == ContextKind::Sl2 || ctx_.kind == ContextKind::Gr0 ||
             ctx_.kind == ContextKind::GrD)) {
            pos_ += 2;
            long n = parse_integer();
            expect(';');
            long i = parse_integer();
            expect(',');
            long j = parse_integer();
            expect(']');
            if (n < 0 || i < 0 || j < 0 || i > n || j > n) fail("matrix coefficient indices out of range");
            AlgebraElement element = ctx_.tower->coefficient_element({n, i, j});
            return wrap_element(element);
        }
        if (c_at() == 'q') {
            // 'q' only when not the prefix of a longer generator name
            bool generator_prefix = false;
            for (const std::string& g : generator_names())
                if (g.size() > 1 && g[0] == 'q' && text_.compare(pos_, g.size(), g) == 0)
                    generator_prefix = true;
            if (!generator_prefix) {
                ++pos_;
                return scalar_value(QRational::q_power(1));
            }
        }
        if (c_at() == 'z' && ctx_.kind == ContextKind::Vinberg) {
            // bare z is rejected; z^even is an element
            size_t save = pos_;
            ++pos_;
            skip_space();
            if (consume('^')) {
                long e = parse_integer();
                try {
                    return Value{ReesElement::z_power(*ctx_.tower, e)};
                } catch (const user_error& err) {
                    pos_ = save;
                    fail(err.what());
                }
            }
            pos_ = save;
            fail("z alone is not an element; only even powers z^2k exist");
        }
        if (c_at() == 'D' && ctx_.kind == ContextKind::Gl2) {
            ++pos_;
            return Value{ctx_.localization->make(ctx_.localization->inverted(), 0)};
        }
        // generator names: maximal munch
        std::string best;
        for (const std::string& g : generator_names())
            if (text_.compare(pos_, g.size(), g) == 0 && g.size() > best.size()) best = g;
        if (best.empty()) {
            pos_ = start;
            fail("unknown symbol");
        }
        pos_ += best.size();
        return make_generator(best);
    }

    char c_at() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::vector<std::string> generator_names() const {
        switch (ctx_.kind) {
            case ContextKind::Vinberg:
                return ctx_.tower->vinberg()->generator_names();
            default:
                return ctx_.algebra->generator_names();
        }
    }

    Value wrap_element(const AlgebraElement& element) {
        switch (ctx_.kind) {
            case ContextKind::Gr0:
            case ContextKind::GrD:
                return Value{GrElement::from_element(*ctx_.tower, ctx_.subset(), element)};
            default:
                return Value{element};
        }
    }

    Value make_generator(const std::string& name) {
        switch (ctx_.kind) {
            case ContextKind::Vinberg:
                return Value{ReesElement::generator(*ctx_.tower, name[0])};
            case ContextKind::Gl2: {
                int index = ctx_.algebra->generator_index(name);
                return Value{
                    ctx_.localization->make(ctx_.algebra->generator(static_cast<size_t>(index)), 0)};
            }
            default: {
                int index = ctx_.algebra->generator_index(name);
                return wrap_element(ctx_.algebra->generator(static_cast<size_t>(index)));
            }
        }
    }

    const std::string& text_;
    const EvalContext& ctx_;
    size_t pos_ = 0;
};

}  // namespace

Value parse_expression(const std::string& text, const EvalContext& context) {
    return Parser(text, context).run();
}

AlgebraElement parse_element(const std::string& text, const EvalContext& context) {
    Value v = parse_expression(text, context);
    if (std::holds_alternative<QRational>(v.data))
        return context.algebra->unit() * std::get<QRational>(v.data);
    if (!std::holds_alternative<AlgebraElement>(v.data))
        throw user_error(std::string("expected an algebra element, got ") + v.kind_name());
    return std::get<AlgebraElement>(v.data);
}

ReesElement parse_rees(const std::string& text, const EvalContext& context) {
    Value v = parse_expression(text, context);
    if (std::holds_alternative<QRational>(v.data))
        return ReesElement::unit(*context.tower) * std::get<QRational>(v.data);
    if (!std::holds_alternative<ReesElement>(v.data))
        throw user_error(std::string("expected a rees element, got ") + v.kind_name());
    return std::get<ReesElement>(v.data);
}

GrElement parse_gr(const std::string& text, const EvalContext& context) {
    Value v = parse_expression(text, context);
    if (std::holds_alternative<QRational>(v.data))
        return GrElement::from_element(*context.tower, context.subset(),
                                       context.tower->sl2()->unit() * std::get<QRational>(v.data));
    if (std::holds_alternative<AlgebraElement>(v.data))
        return GrElement::from_element(*context.tower, context.subset(),
                                       std::get<AlgebraElement>(v.data));
    if (!std::holds_alternative<GrElement>(v.data))
        throw user_error(std::string("expected a gr element, got ") + v.kind_name());
    return std::get<GrElement>(v.data);
}

}  // namespace qwonder
