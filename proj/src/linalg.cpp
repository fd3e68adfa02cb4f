#include "qwonder/linalg.hpp"

namespace qwonder {

QMatrix qmat_identity(size_t n) {
    QMatrix m(n, QVector(n, QRational(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = QRational(1);
    return m;
}

QMatrix qmat_multiply(const QMatrix& a, const QMatrix& b) {
    size_t rows = a.size();
    size_t inner = b.size();
    size_t cols = inner ? b[0].size() : 0;
    QMatrix out(rows, QVector(cols, QRational(0)));
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < cols; ++j)
                if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

QVector qmat_apply(const QMatrix& a, const QVector& v) {
    QVector out(a.size(), QRational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (!a[i][j].is_zero() && !v[j].is_zero()) out[i] += a[i][j] * v[j];
    return out;
}

std::vector<size_t> qmat_rref(QMatrix& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        QRational inv = m[row][col].inverse();
        for (size_t j = col; j < cols; ++j)
            if (!m[row][j].is_zero()) m[row][j] = m[row][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            QRational f = m[i][col];
            for (size_t j = col; j < cols; ++j)
                if (!m[row][j].is_zero()) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t qmat_rank(QMatrix m) { return qmat_rref(m).size(); }

QMatrix qmat_inverse(const QMatrix& m) {
    size_t n = m.size();
    QMatrix work = m;
    for (size_t i = 0; i < n; ++i) {
        if (work[i].size() != n) throw internal_error("inverse of non-square matrix");
        QVector id(n, QRational(0));
        id[i] = QRational(1);
        work[i].insert(work[i].end(), id.begin(), id.end());
    }
    auto pivots = qmat_rref(work);
    if (pivots.size() != n) throw internal_error("singular matrix");
    QMatrix out(n, QVector(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = work[i][n + j];
    return out;
}

std::optional<QVector> qmat_solve(const QMatrix& a, const QVector& b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    QMatrix work = a;
    for (size_t i = 0; i < rows; ++i) work[i].push_back(b[i]);
    auto pivots = qmat_rref(work);
    // Inconsistent when the augmented column is a pivot.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    if (pivots.size() < cols) {
        // Distinguish "no solution touches the missing columns" from a
        // genuine underdetermined system: every column must be a pivot.
        throw internal_error("underdetermined linear system");
    }
    QVector x(cols, QRational(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = work[r][cols];
    return x;
}

std::vector<QVector> qmat_nullspace(const QMatrix& a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    QMatrix work = a;
    auto pivots = qmat_rref(work);
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVector v(cols, QRational(0));
        v[free] = QRational(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qwonder
