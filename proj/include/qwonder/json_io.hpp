#pragma once

#include "json.hpp"
#include "qwonder/expr.hpp"
#include "qwonder/graded_module.hpp"

namespace qwonder {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const QRational& value);
/// Normal-form word as "a^2 b" (letters with powers, space separated).
std::string word_to_json_string(const Presentation& p, const Word& w);

Json element_to_json(const std::string& context, const AlgebraElement& x,
                     const std::optional<Rational>& q_eval = std::nullopt);
Json tensor_to_json(const std::string& context, const TensorElement& x);
Json rees_to_json(const std::string& context, const ReesElement& x,
                  const std::optional<Rational>& q_eval = std::nullopt);
Json gr_to_json(const std::string& context, const GrElement& x);
Json value_to_json(const EvalContext& context, const Value& v,
                   const std::optional<Rational>& q_eval = std::nullopt);

Json torsion_certificate_to_json(const TorsionCertificate& cert);

/// Tensor-product decomposition as JSON matrices (inclusion and
/// projection per summand, entries in the scalar schema).
Json cg_to_json(const CGDecomposition& cg);

/// Module presentation from JSON:
/// { "algebra": "vinberg", "generators": [{"label": "e", "degree": 0}],
///   "relations": [[{"gen": "e", "element": "az"}], ...] }
GradedModulePresentation module_from_json(const Json& definition);

}  // namespace qwonder
