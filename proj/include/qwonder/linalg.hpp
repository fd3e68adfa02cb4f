#pragma once

#include <optional>
#include <vector>

#include "qwonder/rational.hpp"

namespace qwonder {

/// Dense matrix over the rational-function field Q(q).
using QMatrix = std::vector<std::vector<QRational>>;
using QVector = std::vector<QRational>;

QMatrix qmat_identity(size_t n);
QMatrix qmat_multiply(const QMatrix& a, const QMatrix& b);
QVector qmat_apply(const QMatrix& a, const QVector& v);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<size_t> qmat_rref(QMatrix& m);

size_t qmat_rank(QMatrix m);

/// Inverse of a square matrix; throws internal_error when singular.
QMatrix qmat_inverse(const QMatrix& m);

/// Solve A x = b; nullopt when inconsistent, throws internal_error when
/// the solution is not unique (column-rank deficiency).
std::optional<QVector> qmat_solve(const QMatrix& a, const QVector& b);

/// Basis of the nullspace of A.
std::vector<QVector> qmat_nullspace(const QMatrix& a);

}  // namespace qwonder
