#include "qwonder/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace qwonder {

Weight Weight::operator+(const Weight& other) const {
    if (coords.size() != other.coords.size()) throw user_error("weight dimension mismatch");
    Weight out = *this;
    for (size_t i = 0; i < coords.size(); ++i) out.coords[i] += other.coords[i];
    return out;
}

Weight Weight::operator-(const Weight& other) const {
    if (coords.size() != other.coords.size()) throw user_error("weight dimension mismatch");
    Weight out = *this;
    for (size_t i = 0; i < coords.size(); ++i) out.coords[i] -= other.coords[i];
    return out;
}

bool Weight::is_dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](long c) { return c >= 0; });
}

std::string Weight::to_string() const {
    if (coords.size() == 1) return std::to_string(coords[0]);
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
    os << ")";
    return os.str();
}

WeightLattice::WeightLattice(int rank, std::vector<std::vector<long>> simple_roots)
    : rank_(rank), simple_roots_(std::move(simple_roots)) {
    if (rank <= 0) throw user_error("lattice rank must be positive");
    for (const auto& root : simple_roots_)
        if (root.size() != static_cast<size_t>(rank)) throw user_error("simple root dimension mismatch");
    // Linear independence over Q: full column rank by fraction-free elimination.
    size_t r = simple_roots_.size();
    std::vector<std::vector<Rational>> m(static_cast<size_t>(rank), std::vector<Rational>(r));
    for (size_t j = 0; j < r; ++j)
        for (size_t i = 0; i < static_cast<size_t>(rank); ++i) m[i][j] = simple_roots_[j][i];
    size_t pivot_row = 0;
    for (size_t col = 0; col < r; ++col) {
        size_t sel = pivot_row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) throw user_error("simple roots are linearly dependent");
        std::swap(m[sel], m[pivot_row]);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == pivot_row || m[i][col] == 0) continue;
            Rational f = m[i][col] / m[pivot_row][col];
            for (size_t j = col; j < r; ++j) m[i][j] -= f * m[pivot_row][j];
        }
        ++pivot_row;
    }
}

const WeightLattice& WeightLattice::sl2() {
    static const WeightLattice lattice(1, {{2}});
    return lattice;
}

RootSubset WeightLattice::full_subset() const {
    std::set<int> all;
    for (int i = 1; i <= static_cast<int>(simple_roots_.size()); ++i) all.insert(i);
    return RootSubset(all);
}

std::optional<std::vector<long>> WeightLattice::root_coefficients(const Weight& lambda) const {
    if (lambda.rank() != static_cast<size_t>(rank_)) throw user_error("weight dimension mismatch");
    size_t r = simple_roots_.size();
    // Solve A n = lambda over Q; A has full column rank.
    std::vector<std::vector<Rational>> m(static_cast<size_t>(rank_), std::vector<Rational>(r + 1));
    for (size_t i = 0; i < static_cast<size_t>(rank_); ++i) {
        for (size_t j = 0; j < r; ++j) m[i][j] = simple_roots_[j][i];
        m[i][r] = lambda.coords[i];
    }
    std::vector<long> pivot_of_col(r, -1);
    size_t pivot_row = 0;
    for (size_t col = 0; col < r && pivot_row < m.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[pivot_row]);
        Rational p = m[pivot_row][col];
        for (auto& v : m[pivot_row]) v /= p;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == pivot_row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (size_t j = col; j <= r; ++j) m[i][j] -= f * m[pivot_row][j];
        }
        pivot_of_col[col] = static_cast<long>(pivot_row);
        ++pivot_row;
    }
    // Consistency: rows with zero coefficients must have zero rhs.
    for (size_t i = pivot_row; i < m.size(); ++i)
        if (m[i][r] != 0) return std::nullopt;
    std::vector<long> n(r, 0);
    for (size_t col = 0; col < r; ++col) {
        if (pivot_of_col[col] < 0) return std::nullopt;  // unreachable: full column rank
        Rational value = m[static_cast<size_t>(pivot_of_col[col])][r];
        if (value.get_den() != 1) return std::nullopt;
        n[col] = value.get_num().get_si();
    }
    return n;
}

bool WeightLattice::dominance_leq(const Weight& mu, const Weight& lambda) const {
    auto n = root_coefficients(lambda - mu);
    if (!n) return false;
    return std::all_of(n->begin(), n->end(), [](long v) { return v >= 0; });
}

bool WeightLattice::quotient_leq(const Weight& mu, const Weight& lambda, const RootSubset& I) const {
    for (int i : I.members)
        if (i < 1 || i > static_cast<int>(simple_roots_.size()))
            throw user_error("root subset index out of range");
    auto n = root_coefficients(lambda - mu);
    if (!n) return false;
    for (size_t j = 0; j < n->size(); ++j)
        if (!I.contains(static_cast<int>(j) + 1) && (*n)[j] < 0) return false;
    return true;
}

std::vector<Weight> WeightLattice::lower_set(const Weight& lambda, long horizon) const {
    if (!lambda.is_dominant()) throw user_error("lower_set requires a dominant weight");
    std::vector<Weight> out;
    if (simple_roots_.size() == 1 && rank_ == 1) {
        // Rank 1: mu = lambda - 2k, exact.
        long alpha = simple_roots_[0][0];
        for (long mu = lambda.coords[0]; mu >= 0; mu -= alpha) out.push_back(Weight::of(mu));
        std::reverse(out.begin(), out.end());
        return out;
    }
    // Search over subtraction coefficients in [0, horizon]^r.
    size_t r = simple_roots_.size();
    std::vector<long> n(r, 0);
    while (true) {
        Weight mu = lambda;
        for (size_t j = 0; j < r; ++j)
            for (size_t i = 0; i < static_cast<size_t>(rank_); ++i)
                mu.coords[i] -= n[j] * simple_roots_[j][i];
        if (mu.is_dominant()) out.push_back(mu);
        size_t j = 0;
        while (j < r && n[j] == horizon) n[j++] = 0;
        if (j == r) break;
        ++n[j];
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool quotient_leq(const WeightLattice& lattice, const QuotientClass& mu, const QuotientClass& lambda) {
    if (mu.subset != lambda.subset) throw user_error("root subset mismatch");
    return lattice.quotient_leq(mu.representative, lambda.representative, mu.subset);
}

QuotientClass coset_class_of(const WeightLattice& lattice, const Weight& lambda, const RootSubset& I) {
    return QuotientClass{lattice.coset_class(lambda, I), I};
}

Weight WeightLattice::coset_class(const Weight& lambda, const RootSubset& I) const {
    if (I.members.empty()) return lambda;
    // Columns: the roots alpha_i for i in I.
    std::vector<std::vector<long>> cols;
    for (int i : I.members) {
        if (i < 1 || i > static_cast<int>(simple_roots_.size()))
            throw user_error("root subset index out of range");
        cols.push_back(simple_roots_[static_cast<size_t>(i - 1)]);
    }
    // Column-style Hermite normal form: lower triangular with positive
    // pivots, computed by integer column operations.
    size_t ncols = cols.size();
    size_t nrows = static_cast<size_t>(rank_);
    auto col_entry = [&](size_t c, size_t r) -> long& { return cols[c][r]; };
    size_t pivot_col = 0;
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
    for (size_t row = 0; row < nrows && pivot_col < ncols; ++row) {
        // Euclidean reduction across columns pivot_col..end at this row.
        while (true) {
            size_t nonzero = ncols;
            for (size_t c = pivot_col; c < ncols; ++c)
                if (col_entry(c, row) != 0) {
                    nonzero = c;
                    break;
                }
            if (nonzero == ncols) break;
            std::swap(cols[pivot_col], cols[nonzero]);
            bool reduced = true;
            for (size_t c = pivot_col + 1; c < ncols; ++c) {
                if (col_entry(c, row) == 0) continue;
                long f = col_entry(c, row) / col_entry(pivot_col, row);
                for (size_t r2 = 0; r2 < nrows; ++r2) col_entry(c, r2) -= f * col_entry(pivot_col, r2);
                if (col_entry(c, row) != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (col_entry(pivot_col, row) == 0) continue;
        if (col_entry(pivot_col, row) < 0)
            for (size_t r2 = 0; r2 < nrows; ++r2) col_entry(pivot_col, r2) = -col_entry(pivot_col, r2);
        pivots.emplace_back(row, pivot_col);
        ++pivot_col;
    }
    // Reduce lambda by the HNF columns: bring each pivot row entry into
    // [0, pivot).
    Weight rep = lambda;
    for (const auto& [row, col] : pivots) {
        long p = col_entry(col, row);
        long v = rep.coords[row];
        long f = (v >= 0) ? v / p : -(((-v) + p - 1) / p);
        for (size_t r2 = 0; r2 < nrows; ++r2) rep.coords[r2] -= f * col_entry(col, r2);
    }
    return rep;
}

}  // namespace qwonder
