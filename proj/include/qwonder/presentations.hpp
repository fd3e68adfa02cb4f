#pragma once

#include "qwonder/ncalg.hpp"

namespace qwonder {

/// The quantum SL2 family of algebras at a fixed scalar q. The scalar is
/// either the formal parameter (quantum case) or 1 (classical case); all
/// downstream machinery — irreps, Clebsch-Gordan data, matrix-coefficient
/// blocks, Rees and orbit algebras — is generic in it.
///
/// Generator conventions:
///   mat2, sl2:  a, b, c, d     (a < b < c < d; order weights 2,1,1,2)
///   vinberg:    az, bz, cz, dz (same relations as mat2, Z-graded, degree 1)
///   p1p1:       x, y, u, w     (two q-plane factors; bidegree grading)
struct Sl2Presentations {
    QRational q;
    PresentationPtr mat2;
    PresentationPtr sl2;
    PresentationPtr vinberg;
    PresentationPtr p1p1;
};

/// Build the family at the given scalar.
Sl2Presentations make_sl2_presentations(const QRational& q, const std::string& suffix);

/// The formal-q family (shared, immutable).
const Sl2Presentations& quantum_presentations();
/// The q=1 family (shared, immutable).
const Sl2Presentations& classical_presentations();

/// The quantum determinant ad - q*bc in the given mat2-style presentation.
AlgebraElement quantum_determinant(const PresentationPtr& mat2, const QRational& q);

}  // namespace qwonder
