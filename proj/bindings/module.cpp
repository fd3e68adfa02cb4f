#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qwonder/json_io.hpp"
#include "qwonder/verify.hpp"

namespace py = pybind11;
using namespace qwonder;

namespace {

std::string nf(const std::string& context, const std::string& expr) {
    const EvalContext& ctx = lookup_context(context);
    return parse_expression(expr, ctx).to_string(ctx);
}

std::string nf_json(const std::string& context, const std::string& expr) {
    const EvalContext& ctx = lookup_context(context);
    return value_to_json(ctx, parse_expression(expr, ctx)).dump();
}

std::string mul(const std::string& context, const std::string& x, const std::string& y) {
    const EvalContext& ctx = lookup_context(context);
    Value product =
        multiply_values(ctx, parse_expression(x, ctx), parse_expression(y, ctx));
    return product.to_string(ctx);
}

std::map<long, std::string> pw_components_py(const std::string& expr, bool classical) {
    const EvalContext& ctx = lookup_context(classical ? "csl2" : "sl2");
    std::map<long, std::string> out;
    for (const auto& [n, part] : ctx.tower->pw_components(parse_element(expr, ctx)))
        out[n] = part.to_string();
    return out;
}

std::string rees_mul(const std::string& x, const std::string& y, bool classical) {
    const EvalContext& ctx = lookup_context(classical ? "cvinberg" : "vinberg");
    return (parse_rees(x, ctx) * parse_rees(y, ctx)).to_string();
}

std::string gr_mul(const std::string& subset, const std::string& x, const std::string& y,
                   bool classical) {
    std::string name = subset == "D" ? "grD" : "gr0";
    const EvalContext& ctx = lookup_context(classical ? "c" + name : name);
    return gr_multiply(parse_gr(x, ctx), parse_gr(y, ctx)).to_string();
}

std::string phi_py(const std::string& subset, long n, long i, long j) {
    RootSubset I = subset == "D" ? RootSubset({1}) : RootSubset();
    return phi(Sl2Context::quantum(), I, {n, i, j}).to_string();
}

std::string poisson_bracket(const std::string& x, const std::string& y) {
    const EvalContext& ctx = lookup_context("csl2");
    return classical_sl2_poisson().bracket(parse_element(x, ctx), parse_element(y, ctx)).to_string();
}

py::dict semiclassical_py(const std::string& role_x, const std::string& role_y) {
    if (role_x.size() != 1 || role_y.size() != 1) throw user_error("roles are single letters");
    SemiclassicalResult result = semiclassical_check(role_x[0], role_y[0]);
    py::dict out;
    out["limit"] = result.limit.to_string();
    out["bracket"] = result.table_value.to_string();
    out["matches"] = result.matches;
    return out;
}

size_t dims_py(const std::string& context, long degree, long horizon) {
    const EvalContext& ctx = lookup_context(context);
    switch (ctx.kind) {
        case ContextKind::Vinberg:
            return ctx.tower->vinberg()->dimension_of_graded_piece(Weight::of(degree),
                                                                   static_cast<size_t>(horizon));
        case ContextKind::Sl2:
            return ctx.tower->filtration_dimension_by_words(degree);
        case ContextKind::P1p1:
            return ctx.algebra->dimension_of_graded_piece(Weight({degree, degree}),
                                                          static_cast<size_t>(horizon));
        case ContextKind::Gr0:
        case ContextKind::GrD:
            return gr_dimension(*ctx.tower, degree);
        default:
            return ctx.algebra->dimension_of_graded_piece(Weight::of(degree),
                                                          static_cast<size_t>(horizon));
    }
}

std::vector<size_t> veronese_dims(const std::string& context, const std::vector<long>& weight,
                                  long max_n, long horizon) {
    const EvalContext& ctx = lookup_context(context);
    PresentationPtr algebra = ctx.kind == ContextKind::Vinberg ? ctx.tower->vinberg() : ctx.algebra;
    std::vector<size_t> out;
    for (const auto& level :
         algebra->veronese(Weight(std::vector<long>(weight)), max_n, static_cast<size_t>(horizon)))
        out.push_back(level.basis_words.size());
    return out;
}

py::dict torsion_py(const std::string& module_json, long band_base, long horizon) {
    GradedModulePresentation module = module_from_json(Json::parse(module_json));
    TorsionCertificate cert = is_torsion(module, Weight::of(band_base), static_cast<size_t>(horizon));
    Json j = torsion_certificate_to_json(cert);
    py::dict out;
    out["verdict"] = j["verdict"].get<std::string>();
    out["note"] = j["note"].get<std::string>();
    out["json"] = j.dump();
    return out;
}

std::string cg_json(long n, long m, bool classical) {
    const Sl2Context& ctx = classical ? Sl2Context::classical() : Sl2Context::quantum();
    return cg_to_json(*cg_decompose(ctx.q(), n, m)).dump();
}

py::dict verify_py(const std::string& suite) {
    SuiteResult result = run_suite(suite);
    py::dict out;
    out["suite"] = result.name;
    out["pass"] = result.pass;
    out["details"] = result.details;
    return out;
}

py::list verify_all_py() {
    py::list out;
    for (const SuiteResult& result : run_all_suites()) {
        py::dict entry;
        entry["suite"] = result.name;
        entry["pass"] = result.pass;
        entry["details"] = result.details;
        out.append(entry);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_qwonder, m) {
    m.doc() = "exact computer algebra for the quantum SL2 family";

    py::register_exception<internal_error>(m, "InternalError");
    py::register_exception<user_error>(m, "UserError", PyExc_ValueError);

    m.def("contexts", &context_names, "names of the evaluation contexts");
    m.def("nf", &nf, py::arg("context"), py::arg("expr"),
          "normal form of an expression, as a display string");
    m.def("nf_json", &nf_json, py::arg("context"), py::arg("expr"),
          "normal form of an expression, as canonical JSON");
    m.def("mul", &mul, py::arg("context"), py::arg("x"), py::arg("y"));
    m.def("pw_components", &pw_components_py, py::arg("expr"), py::arg("classical") = false,
          "matrix-coefficient block components of a coordinate-algebra element");
    m.def("rees_mul", &rees_mul, py::arg("x"), py::arg("y"), py::arg("classical") = false);
    m.def("gr_mul", &gr_mul, py::arg("subset"), py::arg("x"), py::arg("y"),
          py::arg("classical") = false);
    m.def("phi", &phi_py, py::arg("subset"), py::arg("n"), py::arg("i"), py::arg("j"),
          "the orbit embedding of a matrix coefficient, as a tensor string");
    m.def("poisson_bracket", &poisson_bracket, py::arg("x"), py::arg("y"));
    m.def("semiclassical", &semiclassical_py, py::arg("x"), py::arg("y"),
          "semiclassical limit of a generator commutator vs. the bracket table");
    m.def("dims", &dims_py, py::arg("context"), py::arg("degree"), py::arg("horizon") = 12);
    m.def("veronese_dims", &veronese_dims, py::arg("context"), py::arg("weight"),
          py::arg("max_n") = 3, py::arg("horizon") = 12);
    m.def("torsion", &torsion_py, py::arg("module_json"), py::arg("band_base") = 0,
          py::arg("horizon") = 8);
    m.def("cg_json", &cg_json, py::arg("n"), py::arg("m"), py::arg("classical") = false,
          "tensor-product decomposition matrices as JSON");
    m.def("verify", &verify_py, py::arg("suite"));
    m.def("verify_all", &verify_all_py);
}
