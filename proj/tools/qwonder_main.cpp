#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "qwonder/json_io.hpp"
#include "qwonder/verify.hpp"

namespace {

using namespace qwonder;

struct GlobalOptions {
    std::string context = "sl2";
    std::string q_eval;
    long horizon = 12;
    bool pretty = false;
};

std::optional<Rational> parse_q_eval(const std::string& text) {
    if (text.empty()) return std::nullopt;
    Rational r(text);
    r.canonicalize();
    if (r == 0) throw user_error("--q-eval must be nonzero");
    return r;
}

// Contexts may come from the builtin table or from a presentation file
// ("file:<path>" (text format)); file contexts behave like plain graded
// algebras.
struct ResolvedContext {
    EvalContext context;
    PresentationPtr owned;  // keeps file-loaded presentations alive
};

ResolvedContext resolve_context(const std::string& name) {
    if (name.rfind("file:", 0) == 0) {
        std::ifstream in(name.substr(5));
        if (!in) throw user_error("cannot open presentation file: " + name.substr(5));
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        PresentationPtr p = parse_presentation(text);
        EvalContext ctx;
        ctx.name = p->name().empty() ? name : p->name();
        ctx.kind = ContextKind::Mat2;  // plain element semantics
        ctx.tower = &Sl2Context::quantum();
        ctx.algebra = p;
        return {ctx, p};
    }
    return {lookup_context(name), nullptr};
}

void emit(const Json& out, const GlobalOptions& options) {
    if (options.pretty)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << out.dump() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact computer algebra for the quantum SL2 family: normal forms, "
                 "matrix-coefficient filtrations, Rees and orbit algebras, Poisson limits, "
                 "graded-module torsion"};
    app.require_subcommand(1);
    GlobalOptions options;
    app.add_option("--context", options.context, "evaluation context (or file:<path>)");
    app.add_option("--q-eval", options.q_eval, "display coefficients at a numeric q");
    app.add_option("--horizon", options.horizon, "search bound for enumerations");
    app.add_flag("--pretty", options.pretty, "indent the JSON output");
    bool plain_json = false;
    app.add_flag("--json", plain_json, "compact JSON output (default)");

    std::string expr1, expr2, subset_name = "0", suite = "all", module_path;
    long component = -1, band_base = 0, dims_degree = 0, veronese_max = 3;
    std::string veronese_weight = "1";

    CLI::App* nf = app.add_subcommand("nf", "normal form of an expression");
    nf->add_option("expr", expr1)->required();

    CLI::App* mul = app.add_subcommand("mul", "product of two expressions");
    mul->add_option("x", expr1)->required();
    mul->add_option("y", expr2)->required();

    CLI::App* pw = app.add_subcommand("pw", "matrix-coefficient block components");
    pw->add_option("expr", expr1)->required();
    pw->add_option("--component", component, "single block level (default: all)");

    CLI::App* rees_mul = app.add_subcommand("rees-mul", "product in the Rees algebra");
    rees_mul->add_option("x", expr1)->required();
    rees_mul->add_option("y", expr2)->required();

    CLI::App* gr_mul = app.add_subcommand("gr-mul", "product in the associated graded algebra");
    gr_mul->add_option("x", expr1)->required();
    gr_mul->add_option("y", expr2)->required();
    gr_mul->add_option("--subset", subset_name, "root subset: 0 (empty) or D (full)");

    CLI::App* phi_cmd = app.add_subcommand("phi", "the orbit embedding of a matrix coefficient");
    phi_cmd->add_option("coefficient", expr1, "a c[n;i,j] expression")->required();
    phi_cmd->add_option("--subset", subset_name, "root subset: 0 (empty) or D (full)");

    CLI::App* poisson_cmd =
        app.add_subcommand("poisson", "bracket, quantum commutator, and semiclassical limit");
    poisson_cmd->add_option("x", expr1)->required();
    poisson_cmd->add_option("y", expr2)->required();

    CLI::App* torsion_cmd = app.add_subcommand("torsion", "torsion certificate for a module file");
    torsion_cmd->add_option("module", module_path, "module presentation (JSON)")->required();
    torsion_cmd->add_option("--band-base", band_base, "base degree of the vanishing band");

    CLI::App* dims_cmd = app.add_subcommand("dims", "graded or filtration dimension");
    dims_cmd->add_option("degree", dims_degree)->required();

    CLI::App* veronese_cmd = app.add_subcommand("veronese", "graded dimensions along a weight");
    veronese_cmd->add_option("--weight", veronese_weight, "weight, e.g. 1 or 1,1");
    veronese_cmd->add_option("--max-n", veronese_max, "levels 0..max-n");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run named verification suites");
    verify_cmd->add_option("suite", suite, "suite name or 'all'");
    bool list_suites = false;
    verify_cmd->add_flag("--list", list_suites, "list suite names");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
    CLI11_PARSE(app, argc, argv);
    auto q_eval = parse_q_eval(options.q_eval);

    if (nf->parsed()) {
        auto resolved = resolve_context(options.context);
        Value v = parse_expression(expr1, resolved.context);
        emit(value_to_json(resolved.context, v, q_eval), options);
        return 0;
    }
    if (mul->parsed()) {
        auto resolved = resolve_context(options.context);
        Value x = parse_expression(expr1, resolved.context);
        Value y = parse_expression(expr2, resolved.context);
        emit(value_to_json(resolved.context, multiply_values(resolved.context, x, y), q_eval), options);
        return 0;
    }
    if (pw->parsed()) {
        std::string name = options.context == "vinberg" ? "sl2" : options.context;
        auto resolved = resolve_context(name);
        AlgebraElement x = parse_element(expr1, resolved.context);
        Json out{{"context", resolved.context.name}, {"input", x.to_string()}};
        if (component >= 0) {
            out["component"] = component;
            out["value"] = element_to_json(resolved.context.name,
                                           resolved.context.tower->pw_component(x, component), q_eval);
        } else {
            Json comps = Json::array();
            for (const auto& [n, part] : resolved.context.tower->pw_components(x))
                comps.push_back(Json{{"level", n},
                                     {"value", element_to_json(resolved.context.name, part, q_eval)}});
            out["components"] = std::move(comps);
        }
        emit(out, options);
        return 0;
    }
    if (rees_mul->parsed()) {
        std::string name = options.context;
        if (name != "vinberg" && name != "cvinberg") name = "vinberg";
        auto resolved = resolve_context(name);
        ReesElement x = parse_rees(expr1, resolved.context);
        ReesElement y = parse_rees(expr2, resolved.context);
        emit(rees_to_json(resolved.context.name, x * y, q_eval), options);
        return 0;
    }
    if (gr_mul->parsed()) {
        std::string name = subset_name == "D" ? "grD" : "gr0";
        if (!options.context.empty() && options.context[0] == 'c') name = "c" + name;
        auto resolved = resolve_context(name);
        GrElement x = parse_gr(expr1, resolved.context);
        GrElement y = parse_gr(expr2, resolved.context);
        emit(gr_to_json(resolved.context.name, gr_multiply(x, y)), options);
        return 0;
    }
    if (phi_cmd->parsed()) {
        bool full = subset_name == "D";
        std::string name = options.context;
        if (name != "sl2" && name != "csl2") name = "sl2";
        auto resolved = resolve_context(name);
        // accept any element expression that is a single matrix coefficient symbol
        std::string text = expr1;
        size_t open = text.find('[');
        if (text.rfind("c[", 0) != 0 || open == std::string::npos)
            throw user_error("phi takes a matrix-coefficient symbol c[n;i,j]");
        long n = 0, i = 0, j = 0;
        if (std::sscanf(text.c_str(), "c[%ld;%ld,%ld]", &n, &i, &j) != 3)
            throw user_error("phi takes a matrix-coefficient symbol c[n;i,j]");
        RootSubset I = full ? RootSubset({1}) : RootSubset();
        TensorElement result = phi(*resolved.context.tower, I, {n, i, j});
        emit(tensor_to_json(resolved.context.name, result), options);
        return 0;
    }
    if (poisson_cmd->parsed()) {
        bool rees_context = options.context == "cvinberg" || options.context == "vinberg";
        Json out;
        if (rees_context) {
            const EvalContext& classical = lookup_context("cvinberg");
            const EvalContext& quantum = lookup_context("vinberg");
            ReesElement xc = parse_rees(expr1, classical);
            ReesElement yc = parse_rees(expr2, classical);
            ReesElement bracket = rees_bracket(xc, yc);
            ReesElement xq = parse_rees(expr1, quantum);
            ReesElement yq = parse_rees(expr2, quantum);
            ReesElement commutator = xq * yq - yq * xq;
            ReesElement limit(*classical.tower);
            for (const auto& [lambda, f] : commutator.parts()) {
                AlgebraElement transported(classical.tower->sl2());
                for (const auto& [w, c] : f.terms()) {
                    if (c.eval_at_one() != 0) throw internal_error("commutator not O(q-1)");
                    transported += classical.tower->sl2()->element(
                        w, QRational(c.semiclassical_coefficient()));
                }
                limit = limit + ReesElement::part(*classical.tower, transported, lambda);
            }
            out = Json{{"bracket", rees_to_json("cvinberg", bracket)},
                       {"commutator", rees_to_json("vinberg", commutator)},
                       {"limit", rees_to_json("cvinberg", limit)},
                       {"matches", bracket == limit}};
        } else {
            const EvalContext& classical = lookup_context("csl2");
            const EvalContext& quantum = lookup_context("sl2");
            AlgebraElement xc = parse_element(expr1, classical);
            AlgebraElement yc = parse_element(expr2, classical);
            AlgebraElement bracket = classical_sl2_poisson().bracket(xc, yc);
            AlgebraElement xq = parse_element(expr1, quantum);
            AlgebraElement yq = parse_element(expr2, quantum);
            AlgebraElement commutator = xq * yq - yq * xq;
            AlgebraElement limit(classical.tower->sl2());
            for (const auto& [w, c] : commutator.terms()) {
                if (c.eval_at_one() != 0) throw internal_error("commutator not O(q-1)");
                limit += classical.tower->sl2()->element(w, QRational(c.semiclassical_coefficient()));
            }
            out = Json{{"bracket", element_to_json("csl2", bracket)},
                       {"commutator", element_to_json("sl2", commutator)},
                       {"limit", element_to_json("csl2", limit)},
                       {"matches", bracket == limit}};
        }
        emit(out, options);
        return 0;
    }
    if (torsion_cmd->parsed()) {
        std::ifstream in(module_path);
        if (!in) throw user_error("cannot open module file: " + module_path);
        Json definition = Json::parse(in);
        GradedModulePresentation module = module_from_json(definition);
        TorsionCertificate cert =
            is_torsion(module, Weight::of(band_base), static_cast<size_t>(options.horizon));
        emit(torsion_certificate_to_json(cert), options);
        return 0;
    }
    if (dims_cmd->parsed()) {
        auto resolved = resolve_context(options.context);
        const EvalContext& ctx = resolved.context;
        size_t dimension = 0;
        switch (ctx.kind) {
            case ContextKind::Vinberg:
                dimension = ctx.tower->vinberg()->dimension_of_graded_piece(
                    Weight::of(dims_degree), static_cast<size_t>(options.horizon));
                break;
            case ContextKind::Sl2:
                dimension = ctx.tower->filtration_dimension_by_words(dims_degree);
                break;
            case ContextKind::P1p1:
                dimension = ctx.algebra->dimension_of_graded_piece(
                    Weight({dims_degree, dims_degree}), static_cast<size_t>(options.horizon));
                break;
            case ContextKind::Gr0:
            case ContextKind::GrD:
                dimension = gr_dimension(*ctx.tower, dims_degree);
                break;
            default:
                dimension = ctx.algebra->dimension_of_graded_piece(
                    Weight::of(dims_degree), static_cast<size_t>(options.horizon));
        }
        emit(Json{{"context", ctx.name}, {"degree", dims_degree}, {"dimension", dimension}},
             options);
        return 0;
    }
    if (veronese_cmd->parsed()) {
        auto resolved = resolve_context(options.context == "sl2" ? "vinberg" : options.context);
        const EvalContext& ctx = resolved.context;
        PresentationPtr algebra =
            ctx.kind == ContextKind::Vinberg ? ctx.tower->vinberg() : ctx.algebra;
        if (!algebra->is_graded()) throw user_error("veronese needs a graded context");
        Weight lambda;
        {
            std::istringstream ws(veronese_weight);
            std::string part;
            while (std::getline(ws, part, ',')) lambda.coords.push_back(std::stol(part));
        }
        auto table = algebra->veronese(lambda, veronese_max, static_cast<size_t>(options.horizon));
        Json levels = Json::array();
        for (size_t n = 0; n < table.size(); ++n) {
            Json words = Json::array();
            for (const Word& w : table[n].basis_words)
                words.push_back(word_to_json_string(*algebra, w));
            levels.push_back(Json{{"n", n},
                                  {"degree", table[n].degree.to_string()},
                                  {"dimension", table[n].basis_words.size()},
                                  {"basis", std::move(words)}});
        }
        emit(Json{{"context", ctx.name}, {"weight", lambda.to_string()}, {"levels", levels}},
             options);
        return 0;
    }
    if (verify_cmd->parsed()) {
        if (list_suites) {
            Json names = Json::array();
            for (const std::string& name : suite_names()) names.push_back(name);
            emit(Json{{"suites", names}}, options);
            return 0;
        }
        std::vector<SuiteResult> results;
        if (suite == "all")
            results = run_all_suites();
        else
            results.push_back(run_suite(suite));
        bool all_pass = true;
        Json report = Json::array();
        for (const SuiteResult& result : results) {
            all_pass = all_pass && result.pass;
            std::cerr << (result.pass ? "[PASS] " : "[FAIL] ") << result.name << "\n";
            report.push_back(
                Json{{"suite", result.name}, {"pass", result.pass}, {"details", result.details}});
        }
        emit(Json{{"results", report}, {"pass", all_pass}}, options);
        return all_pass ? 0 : 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qwonder::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const qwonder::user_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
