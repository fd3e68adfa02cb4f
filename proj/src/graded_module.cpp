#include "qwonder/graded_module.hpp"

#include <algorithm>

namespace qwonder {

GradedModulePresentation::GradedModulePresentation(
    PresentationPtr algebra, std::vector<std::pair<std::string, Weight>> generators,
    std::vector<RelationRow> relations)
    : algebra_(std::move(algebra)), generators_(std::move(generators)), relations_(std::move(relations)) {
    if (!algebra_->is_graded()) throw user_error("module algebra must be graded");
    if (generators_.empty()) throw user_error("module needs at least one generator");
    size_t rank = algebra_->generator_degrees()[0].rank();
    for (const auto& [label, degree] : generators_)
        if (degree.rank() != rank) throw user_error("generator degree rank mismatch");
    // Each relation row must be homogeneous: deg(coefficient) + deg(generator)
    // agrees across the row.
    for (const auto& row : relations_) {
        std::optional<Weight> total;
        for (const auto& [g, coeff] : row) {
            if (g >= generators_.size()) throw user_error("relation references unknown generator");
            if (coeff.is_zero()) continue;
            auto d = algebra_->element_degree(coeff);
            if (!d) throw user_error("relation coefficient is not homogeneous");
            Weight sum = *d + generators_[g].second;
            if (!total)
                total = sum;
            else if (*total != sum)
                throw user_error("relation row is not homogeneous");
        }
    }
}

GradedModulePresentation GradedModulePresentation::free_module(PresentationPtr algebra,
                                                               const Weight& degree) {
    return GradedModulePresentation(std::move(algebra), {{"e", degree}}, {});
}

GradedModulePresentation GradedModulePresentation::cyclic_quotient(
    PresentationPtr algebra, const std::vector<AlgebraElement>& ideal_gens) {
    size_t rank = algebra->generator_degrees()[0].rank();
    Weight zero(std::vector<long>(rank, 0));
    std::vector<RelationRow> rows;
    for (const AlgebraElement& g : ideal_gens) rows.push_back({{0, g}});
    return GradedModulePresentation(std::move(algebra), {{"e", zero}}, std::move(rows));
}

GradedModulePresentation GradedModulePresentation::direct_sum(const GradedModulePresentation& a,
                                                              const GradedModulePresentation& b) {
    if (a.algebra_ != b.algebra_) throw user_error("direct sum needs one algebra");
    std::vector<std::pair<std::string, Weight>> gens = a.generators_;
    for (const auto& [label, degree] : b.generators_) gens.emplace_back(label + "'", degree);
    std::vector<RelationRow> rows = a.relations_;
    for (const auto& row : b.relations_) {
        RelationRow shifted;
        for (const auto& [g, coeff] : row) shifted[g + a.generators_.size()] = coeff;
        rows.push_back(std::move(shifted));
    }
    return GradedModulePresentation(a.algebra_, std::move(gens), std::move(rows));
}

GradedModulePresentation GradedModulePresentation::shift(const Weight& lambda) const {
    std::vector<std::pair<std::string, Weight>> gens;
    for (const auto& [label, degree] : generators_) gens.emplace_back(label, degree - lambda);
    return GradedModulePresentation(algebra_, std::move(gens), relations_);
}

GradedPiece::GradedPiece(const GradedModulePresentation& module, const Weight& degree,
                         size_t horizon) {
    const PresentationPtr& algebra = module.algebra();
    // Spanning monomials: normal words of degree (target - generator degree)
    // per module generator, in generator order.
    for (size_t g = 0; g < module.generators().size(); ++g) {
        Weight needed = degree - module.generators()[g].second;
        if (!std::all_of(needed.coords.begin(), needed.coords.end(), [](long c) { return c >= 0; }))
            continue;
        for (const Word& w : algebra->normal_words_of_degree(needed, horizon))
            monomials_.emplace_back(g, w);
    }
    std::map<std::pair<size_t, Word>, size_t> index;
    for (size_t i = 0; i < monomials_.size(); ++i) index[monomials_[i]] = i;

    // Relation span at this degree: algebra-word multiples of each row.
    QMatrix span;
    for (const auto& row : module.relations()) {
        std::optional<Weight> row_degree;
        for (const auto& [g, coeff] : row) {
            if (coeff.is_zero()) continue;
            row_degree = *module.algebra()->element_degree(coeff) + module.generators()[g].second;
            break;
        }
        if (!row_degree) continue;
        Weight needed = degree - *row_degree;
        if (!std::all_of(needed.coords.begin(), needed.coords.end(), [](long c) { return c >= 0; }))
            continue;
        for (const Word& m : algebra->normal_words_of_degree(needed, horizon)) {
            QVector vec(monomials_.size(), QRational(0));
            bool nontrivial = false;
            for (const auto& [g, coeff] : row) {
                AlgebraElement shifted = algebra->element(m) * coeff;
                for (const auto& [w, c] : shifted.terms()) {
                    auto it = index.find({g, w});
                    if (it == index.end()) throw internal_error("relation leaves the graded piece");
                    vec[it->second] += c;
                    nontrivial = true;
                }
            }
            if (nontrivial) span.push_back(std::move(vec));
        }
    }
    echelon_ = std::move(span);
    pivots_ = qmat_rref(echelon_);
    echelon_.resize(pivots_.size());
    std::vector<bool> is_pivot(monomials_.size(), false);
    for (size_t p : pivots_) is_pivot[p] = true;
    for (size_t i = 0; i < monomials_.size(); ++i)
        if (!is_pivot[i]) free_columns_.push_back(i);
}

size_t GradedPiece::monomial_index(size_t generator, const Word& word) const {
    for (size_t i = 0; i < monomials_.size(); ++i)
        if (monomials_[i].first == generator && monomials_[i].second == word) return i;
    return static_cast<size_t>(-1);
}

QVector GradedPiece::reduce(QVector coords) const {
    for (size_t r = 0; r < pivots_.size(); ++r) {
        QRational factor = coords[pivots_[r]];
        if (factor.is_zero()) continue;
        for (size_t j = 0; j < coords.size(); ++j)
            if (!echelon_[r][j].is_zero()) coords[j] -= factor * echelon_[r][j];
    }
    return coords;
}

QVector GradedPiece::quotient_coordinates(const QVector& coords) const {
    QVector reduced = reduce(coords);
    QVector out(free_columns_.size(), QRational(0));
    for (size_t i = 0; i < free_columns_.size(); ++i) out[i] = reduced[free_columns_[i]];
    return out;
}

std::vector<std::string> GradedPiece::basis_labels(const GradedModulePresentation& module) const {
    std::vector<std::string> out;
    for (size_t col : free_columns_) {
        const auto& [g, w] = monomials_[col];
        std::string label = module.algebra()->word_to_string(w);
        out.push_back(label + "*" + module.generators()[g].first);
    }
    return out;
}

TorsionCertificate is_torsion(const GradedModulePresentation& module, const Weight& band_base,
                              size_t horizon) {
    TorsionCertificate cert;
    const auto& degrees = module.algebra()->generator_degrees();
    if (degrees.empty() || degrees[0].rank() != 1) {
        cert.note = "torsion decision implemented for rank-1 gradings";
        return cert;
    }
    for (const Weight& d : degrees)
        if (d != Weight::of(1)) {
            cert.note = "torsion decision needs an algebra generated in degree 1";
            return cert;
        }
    long top_generator = 0;
    for (const auto& [label, degree] : module.generators())
        top_generator = std::max(top_generator, degree.coords[0]);
    long start = std::max(band_base.coords[0], top_generator);
    long stop = band_base.coords[0] + static_cast<long>(horizon);
    if (start > stop) {
        cert.note = "horizon does not reach the generating degrees";
        return cert;
    }
    for (long b = start; b <= stop; ++b) {
        std::optional<GradedPiece> computed;
        try {
            computed.emplace(module, Weight::of(b), horizon + 8);
        } catch (const user_error& err) {
            cert.verdict = TorsionCertificate::Verdict::unknown;
            cert.note = std::string("horizon insufficient: ") + err.what();
            return cert;
        }
        const GradedPiece& piece = *computed;
        cert.checked_degrees.push_back(b);
        if (piece.dimension() == 0) {
            // Every degree above b is R_1-generated from the vanishing band.
            cert.verdict = TorsionCertificate::Verdict::torsion;
            cert.vanishing_degree = b;
            cert.note = "piece at degree " + std::to_string(b) +
                        " vanishes; all higher degrees are algebra multiples of it";
            return cert;
        }
        if (b == stop) {
            cert.verdict = TorsionCertificate::Verdict::not_torsion;
            cert.witness_degree = b;
            cert.witness_basis = piece.basis_labels(module);
            cert.note = "all checked degrees are nonzero through the horizon";
        }
    }
    return cert;
}

bool proj_equiv_check(const GradedModulePresentation& m, const GradedModulePresentation& n,
                      const std::map<long, QMatrix>& maps, const Weight& lambda, size_t band,
                      size_t horizon) {
    if (m.algebra() != n.algebra()) throw user_error("modules live over different algebras");
    const auto& degrees = m.algebra()->generator_degrees();
    if (degrees.empty() || degrees[0].rank() != 1)
        throw user_error("equivalence check implemented for rank-1 gradings");
    for (const Weight& d : degrees)
        if (d != Weight::of(1))
            throw user_error("equivalence check needs an algebra generated in degree 1");
    long base = lambda.coords[0];
    std::map<long, GradedPiece> pm, pn;
    for (long mu = base; mu <= base + static_cast<long>(band); ++mu) {
        pm.emplace(mu, GradedPiece(m, Weight::of(mu), horizon));
        pn.emplace(mu, GradedPiece(n, Weight::of(mu), horizon));
    }
    for (long mu = base; mu <= base + static_cast<long>(band); ++mu) {
        auto it = maps.find(mu);
        if (it == maps.end()) throw user_error("map missing at degree " + std::to_string(mu));
        const QMatrix& matrix = it->second;
        size_t dm = pm.at(mu).dimension(), dn = pn.at(mu).dimension();
        if (matrix.size() != dn || (dn > 0 && matrix[0].size() != dm))
            throw user_error("map at degree " + std::to_string(mu) + " is not homogeneous of the right shape");
        // bijective on this degree
        if (dm != dn) return false;
        if (qmat_rank(matrix) != dm) return false;
    }
    // Equivariance: map(g . v) = g . map(v) wherever both degrees lie in the band.
    for (long mu = base; mu + 1 <= base + static_cast<long>(band); ++mu) {
        const GradedPiece& source_m = pm.at(mu);
        const GradedPiece& target_m = pm.at(mu + 1);
        const GradedPiece& source_n = pn.at(mu);
        const GradedPiece& target_n = pn.at(mu + 1);
        const QMatrix& map_mu = maps.at(mu);
        const QMatrix& map_next = maps.at(mu + 1);
        for (size_t g = 0; g < m.algebra()->generator_count(); ++g) {
            AlgebraElement gen = m.algebra()->generator(g);
            auto action_coords = [&](const GradedPiece& source, const GradedPiece& target,
                                     const GradedModulePresentation& module, size_t source_col) {
                const auto& [mg, mw] = source.monomials()[source.free_columns()[source_col]];
                AlgebraElement moved = gen * module.algebra()->element(mw);
                QVector coords(target.monomials().size(), QRational(0));
                for (const auto& [w, c] : moved.terms()) {
                    size_t idx = target.monomial_index(mg, w);
                    if (idx == static_cast<size_t>(-1))
                        throw internal_error("action leaves the graded piece");
                    coords[idx] += c;
                }
                return target.quotient_coordinates(coords);
            };
            for (size_t col = 0; col < source_m.dimension(); ++col) {
                // route 1: act in M, then map
                QVector in_m = action_coords(source_m, target_m, m, col);
                QVector route1 = qmat_apply(map_next, in_m);
                // route 2: map, then act in N
                QVector mapped(source_n.dimension(), QRational(0));
                for (size_t r = 0; r < source_n.dimension(); ++r) mapped[r] = map_mu[r][col];
                QVector route2(target_n.dimension(), QRational(0));
                for (size_t col_n = 0; col_n < source_n.dimension(); ++col_n) {
                    if (mapped[col_n].is_zero()) continue;
                    QVector moved = action_coords(source_n, target_n, n, col_n);
                    for (size_t r = 0; r < route2.size(); ++r) route2[r] += mapped[col_n] * moved[r];
                }
                if (route1 != route2) return false;
            }
        }
    }
    return true;
}

}  // namespace qwonder
