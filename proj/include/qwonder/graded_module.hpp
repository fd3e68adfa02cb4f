#pragma once

#include "qwonder/linalg.hpp"
#include "qwonder/ncalg.hpp"

namespace qwonder {

/// Finitely presented graded left module: generator degrees plus
/// homogeneous relation rows over a graded presented algebra.
class GradedModulePresentation {
public:
    using RelationRow = std::map<size_t, AlgebraElement>;  // generator index -> coefficient

    GradedModulePresentation(PresentationPtr algebra,
                             std::vector<std::pair<std::string, Weight>> generators,
                             std::vector<RelationRow> relations);

    const PresentationPtr& algebra() const { return algebra_; }
    const std::vector<std::pair<std::string, Weight>>& generators() const { return generators_; }
    const std::vector<RelationRow>& relations() const { return relations_; }

    /// Free rank-1 module over the algebra.
    static GradedModulePresentation free_module(PresentationPtr algebra, const Weight& degree);
    /// Quotient of the free rank-1 module by the listed elements.
    static GradedModulePresentation cyclic_quotient(PresentationPtr algebra,
                                                    const std::vector<AlgebraElement>& ideal_gens);
    static GradedModulePresentation direct_sum(const GradedModulePresentation& a,
                                               const GradedModulePresentation& b);

    /// Degrees of generators translated: shift(M, lambda) has piece at mu
    /// equal to the old piece at mu + lambda.
    GradedModulePresentation shift(const Weight& lambda) const;

private:
    PresentationPtr algebra_;
    std::vector<std::pair<std::string, Weight>> generators_;
    std::vector<RelationRow> relations_;
};

/// Exact basis data of one graded piece: spanning monomials (algebra word
/// times module generator), the reduced relation span, and the quotient
/// basis given by the non-pivot monomials.
class GradedPiece {
public:
    GradedPiece(const GradedModulePresentation& module, const Weight& degree, size_t horizon);

    size_t dimension() const { return free_columns_.size(); }
    const std::vector<std::pair<size_t, Word>>& monomials() const { return monomials_; }
    const std::vector<size_t>& free_columns() const { return free_columns_; }

    /// Index of a spanning monomial, or npos.
    size_t monomial_index(size_t generator, const Word& word) const;

    /// Reduce a coordinate vector over the spanning monomials modulo the
    /// relation span; the result is supported on the free columns.
    QVector reduce(QVector coords) const;

    /// Coordinates (over free columns) of the quotient class of coords.
    QVector quotient_coordinates(const QVector& coords) const;

    /// Printable labels of the quotient basis.
    std::vector<std::string> basis_labels(const GradedModulePresentation& module) const;

private:
    std::vector<std::pair<size_t, Word>> monomials_;
    QMatrix echelon_;
    std::vector<size_t> pivots_;
    std::vector<size_t> free_columns_;
};

struct TorsionCertificate {
    enum class Verdict { torsion, not_torsion, unknown };
    Verdict verdict = Verdict::unknown;
    std::vector<long> checked_degrees;
    long vanishing_degree = 0;                // verdict torsion
    long witness_degree = 0;                  // verdict not_torsion
    std::vector<std::string> witness_basis;   // basis of the witness degree
    std::string note;
};

/// Decides torsion for a finitely generated module over an algebra
/// generated in degree 1 (rank-1 grading). A vanishing degree b at or
/// above every generator degree proves every higher degree vanishes;
/// nonvanishing through the horizon certifies not_torsion at desk scale.
TorsionCertificate is_torsion(const GradedModulePresentation& module, const Weight& band_base,
                              size_t horizon);

/// Witness check for agreement above lambda: the given degreewise
/// matrices (quotient coordinates of M mapped to quotient coordinates of
/// N) must be bijective on every degree in [lambda, lambda+band] and
/// commute with the action of every algebra generator.
bool proj_equiv_check(const GradedModulePresentation& m, const GradedModulePresentation& n,
                      const std::map<long, QMatrix>& maps, const Weight& lambda, size_t band,
                      size_t horizon);

}  // namespace qwonder
