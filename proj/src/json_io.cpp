#include "qwonder/json_io.hpp"

namespace qwonder {

namespace {

Json laurent_to_json(const QLaurent& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.coefficients()) out.push_back({e, rational_to_string(c)});
    return out;
}

}  // namespace

Json scalar_to_json(const QRational& value) {
    return Json{{"num", laurent_to_json(value.numerator())},
                {"den", laurent_to_json(value.denominator())}};
}

std::string word_to_json_string(const Presentation& p, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!out.empty()) out += " ";
        out += p.generator_names()[static_cast<size_t>(w[i])];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

Json element_to_json(const std::string& context, const AlgebraElement& x,
                     const std::optional<Rational>& q_eval) {
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms()) {
        Json term{{"coeff", scalar_to_json(c)},
                  {"word", word_to_json_string(*x.presentation(), w)}};
        if (q_eval) term["coeff_at_q"] = rational_to_string(c.eval_at(*q_eval));
        terms.push_back(std::move(term));
    }
    return Json{{"context", context}, {"terms", std::move(terms)}};
}

Json tensor_to_json(const std::string& context, const TensorElement& x) {
    Json terms = Json::array();
    for (const auto& [slots, c] : x.terms()) {
        Json slot_array = Json::array();
        for (const Word& w : slots) slot_array.push_back(word_to_json_string(*x.presentation(), w));
        terms.push_back(Json{{"coeff", scalar_to_json(c)}, {"slots", std::move(slot_array)}});
    }
    return Json{{"context", context}, {"arity", x.arity()}, {"terms", std::move(terms)}};
}

Json rees_to_json(const std::string& context, const ReesElement& x,
                  const std::optional<Rational>& q_eval) {
    Json parts = Json::array();
    for (const auto& [lambda, f] : x.parts()) {
        Json part{{"level", lambda},
                  {"terms", element_to_json(context, f, q_eval)["terms"]}};
        parts.push_back(std::move(part));
    }
    return Json{{"context", context}, {"parts", std::move(parts)}};
}

Json gr_to_json(const std::string& context, const GrElement& x) {
    Json classes = Json::array();
    for (const auto& [key, residue] : x.classes()) {
        classes.push_back(Json{{"class", key},
                               {"terms", element_to_json(context, residue)["terms"]}});
    }
    Json subset = Json::array();
    for (int i : x.subset().members) subset.push_back(i);
    return Json{{"context", context}, {"subset", std::move(subset)}, {"classes", std::move(classes)}};
}

Json value_to_json(const EvalContext& context, const Value& v,
                   const std::optional<Rational>& q_eval) {
    if (std::holds_alternative<QRational>(v.data)) {
        Json out{{"context", context.name}, {"scalar", scalar_to_json(std::get<QRational>(v.data))}};
        if (q_eval) out["scalar_at_q"] = rational_to_string(std::get<QRational>(v.data).eval_at(*q_eval));
        return out;
    }
    if (std::holds_alternative<AlgebraElement>(v.data))
        return element_to_json(context.name, std::get<AlgebraElement>(v.data), q_eval);
    if (std::holds_alternative<TensorElement>(v.data))
        return tensor_to_json(context.name, std::get<TensorElement>(v.data));
    if (std::holds_alternative<ReesElement>(v.data))
        return rees_to_json(context.name, std::get<ReesElement>(v.data), q_eval);
    if (std::holds_alternative<GrElement>(v.data))
        return gr_to_json(context.name, std::get<GrElement>(v.data));
    const auto& loc = std::get<CentralLocalization::Element>(v.data);
    Json out = element_to_json(context.name, loc.numerator, q_eval);
    out["det_inverse_power"] = loc.inverse_power;
    return out;
}

Json torsion_certificate_to_json(const TorsionCertificate& cert) {
    Json out;
    switch (cert.verdict) {
        case TorsionCertificate::Verdict::torsion: out["verdict"] = "torsion"; break;
        case TorsionCertificate::Verdict::not_torsion: out["verdict"] = "not_torsion"; break;
        default: out["verdict"] = "unknown";
    }
    out["checked_degrees"] = cert.checked_degrees;
    if (cert.verdict == TorsionCertificate::Verdict::torsion)
        out["vanishing_degree"] = cert.vanishing_degree;
    if (cert.verdict == TorsionCertificate::Verdict::not_torsion) {
        out["witness_degree"] = cert.witness_degree;
        out["witness_basis"] = cert.witness_basis;
    }
    out["note"] = cert.note;
    return out;
}

Json cg_to_json(const CGDecomposition& cg) {
    auto matrix_to_json = [](const QMatrix& m) {
        Json rows = Json::array();
        for (const auto& row : m) {
            Json cells = Json::array();
            for (const auto& cell : row) cells.push_back(scalar_to_json(cell));
            rows.push_back(std::move(cells));
        }
        return rows;
    };
    Json summands = Json::array();
    for (const auto& s : cg.summands)
        summands.push_back(Json{{"k", s.k},
                                {"inclusion", matrix_to_json(s.inclusion)},
                                {"projection", matrix_to_json(s.projection)}});
    return Json{{"n", cg.n}, {"m", cg.m}, {"summands", std::move(summands)}};
}

GradedModulePresentation module_from_json(const Json& definition) {
    std::string context_name = definition.at("algebra").get<std::string>();
    const EvalContext& ctx = lookup_context(context_name);
    PresentationPtr algebra;
    switch (ctx.kind) {
        case ContextKind::Vinberg: algebra = ctx.tower->vinberg(); break;
        case ContextKind::Mat2: algebra = ctx.tower->mat2(); break;
        case ContextKind::P1p1: algebra = ctx.tower->p1p1(); break;
        default: throw user_error("modules need a graded algebra context (vinberg, mat2, p1p1)");
    }
    size_t rank = algebra->generator_degrees()[0].rank();
    std::vector<std::pair<std::string, Weight>> generators;
    for (const Json& g : definition.at("generators")) {
        Weight degree;
        const Json& d = g.at("degree");
        if (d.is_array()) {
            for (const Json& c : d) degree.coords.push_back(c.get<long>());
        } else {
            degree.coords.assign(rank, 0);
            degree.coords[0] = d.get<long>();
        }
        if (degree.rank() != rank) throw user_error("generator degree rank mismatch");
        generators.emplace_back(g.at("label").get<std::string>(), degree);
    }
    auto find_generator = [&](const std::string& label) -> size_t {
        for (size_t i = 0; i < generators.size(); ++i)
            if (generators[i].first == label) return i;
        throw user_error("relation references unknown generator: " + label);
    };
    // relation elements parse in the module's algebra context; for the
    // vinberg algebra the grading lives on the matrix-style presentation,
    // so expressions are parsed there through the rees form.
    std::vector<GradedModulePresentation::RelationRow> rows;
    for (const Json& row_spec : definition.at("relations")) {
        GradedModulePresentation::RelationRow row;
        for (const Json& entry : row_spec) {
            size_t g = find_generator(entry.at("gen").get<std::string>());
            std::string text = entry.at("element").get<std::string>();
            AlgebraElement coeff(algebra);
            if (ctx.kind == ContextKind::Vinberg) {
                // Parse as a rees element (z^2 etc.), then transfer to the
                // graded matrix-style presentation; the vinberg and mat2
                // presentations share generator indices and rules.
                ReesElement rees = parse_rees(text, ctx);
                AlgebraElement image = vinberg_to_matq(rees);
                for (const auto& [w, c] : image.terms()) coeff.add_term(w, c);
            } else {
                coeff = parse_element(text, ctx);
            }
            auto [it, fresh] = row.emplace(g, coeff);
            if (!fresh) it->second += coeff;
        }
        rows.push_back(std::move(row));
    }
    return GradedModulePresentation(algebra, std::move(generators), std::move(rows));
}

}  // namespace qwonder
