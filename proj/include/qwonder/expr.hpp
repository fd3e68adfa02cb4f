#pragma once

#include <memory>
#include <variant>

#include "qwonder/graded_module.hpp"
#include "qwonder/poisson.hpp"
#include "qwonder/rees.hpp"

namespace qwonder {

/// Syntax error with 1-based line/column position.
struct parse_error : user_error {
    parse_error(const std::string& message, size_t line, size_t column)
        : user_error(message + " at " + std::to_string(line) + ":" + std::to_string(column)),
          line(line),
          column(column) {}
    size_t line;
    size_t column;
};

enum class ContextKind { Mat2, Sl2, Gl2, Vinberg, Gr0, GrD, P1p1 };

/// A named evaluation context: which algebra of which tower (quantum or
/// q=1) expressions live in.
struct EvalContext {
    std::string name;
    ContextKind kind;
    const Sl2Context* tower = nullptr;
    PresentationPtr algebra;  // the presentation of plain algebra contexts
    std::shared_ptr<const CentralLocalization> localization;  // gl2 only

    bool classical() const { return tower->is_classical(); }
    RootSubset subset() const {
        return kind == ContextKind::GrD ? RootSubset({1}) : RootSubset();
    }
};

/// Contexts: mat2, sl2, gl2, vinberg, gr0, grD, p1p1 and their q=1
/// variants prefixed with 'c' (cmat2, csl2, ...).
const EvalContext& lookup_context(const std::string& name);
std::vector<std::string> context_names();

/// Evaluated expression value.
struct Value {
    std::variant<QRational, AlgebraElement, TensorElement, ReesElement, GrElement,
                 CentralLocalization::Element>
        data;

    const char* kind_name() const;
    std::string to_string(const EvalContext& context) const;
};

Value add_values(const EvalContext& context, const Value& a, const Value& b);
Value multiply_values(const EvalContext& context, const Value& a, const Value& b);
Value negate_value(const Value& a);

/// Parse and evaluate an expression in the given context. Grammar:
/// sums and differences of terms; terms are products (explicit '*' or
/// juxtaposition) of powers; primaries are rational literals, q, z
/// (vinberg contexts, only even powers), generators, matrix-coefficient
/// symbols c[n;i,j], parenthesized expressions, tensors "(x)|(y)" and
/// gr wrappers "gr[I]{...}".
Value parse_expression(const std::string& text, const EvalContext& context);

/// Parse helpers with the expression's natural target type.
AlgebraElement parse_element(const std::string& text, const EvalContext& context);
ReesElement parse_rees(const std::string& text, const EvalContext& context);
GrElement parse_gr(const std::string& text, const EvalContext& context);

}  // namespace qwonder
