#include "qwonder/uq.hpp"

#include <sstream>

namespace qwonder {

namespace {

QRational q_int(const QRational& q, long n) {
    // [n] as the expanded sum q^{n-1} + q^{n-3} + ... + q^{1-n}, which
    // stays exact at q = 1.
    QRational sum(0);
    long m = n < 0 ? -n : n;
    for (long e = m - 1; e >= 1 - m; e -= 2) {
        QRational pow(1);
        long steps = e < 0 ? -e : e;
        for (long i = 0; i < steps; ++i) pow = pow * q;
        if (e < 0) pow = pow.inverse();
        sum += pow;
    }
    return n < 0 ? -sum : sum;
}

QRational q_pow(const QRational& q, long e) {
    QRational pow(1);
    long steps = e < 0 ? -e : e;
    for (long i = 0; i < steps; ++i) pow = pow * q;
    return e < 0 ? pow.inverse() : pow;
}

}  // namespace

UqElement UqElement::unit(const QRational& q) {
    UqElement out(q);
    out.add_term({0, 0, 0}, 1);
    return out;
}

UqElement UqElement::gen_e(const QRational& q) {
    UqElement out(q);
    out.add_term({0, 0, 1}, 1);
    return out;
}

UqElement UqElement::gen_f(const QRational& q) {
    UqElement out(q);
    out.add_term({1, 0, 0}, 1);
    return out;
}

UqElement UqElement::gen_k(const QRational& q, long power) {
    UqElement out(q);
    out.add_term({0, power, 0}, 1);
    return out;
}

void UqElement::add_term(const PBWKey& key, const QRational& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_[key] = coeff;
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UqElement UqElement::operator+(const UqElement& other) const {
    UqElement out = *this;
    for (const auto& [k, c] : other.terms_) out.add_term(k, c);
    return out;
}

UqElement UqElement::operator-(const UqElement& other) const { return *this + (-other); }

UqElement UqElement::operator-() const {
    UqElement out(q_);
    for (const auto& [k, c] : terms_) out.terms_[k] = -c;
    return out;
}

UqElement UqElement::operator*(const QRational& scalar) const {
    UqElement out(q_);
    if (scalar.is_zero()) return out;
    for (const auto& [k, c] : terms_) out.terms_[k] = c * scalar;
    return out;
}

UqElement UqElement::operator*(const UqElement& other) const {
    // Multiply one PBW word F^a K^b E^c from the right, letter kind by
    // letter kind, using
    //   E^c F = F E^c + [c] (q^{-(c-1)} K - q^{c-1} K^-1) E^{c-1}
    //   E^c K^b = q^{-2bc} K^b E^c,  K^b F = q^{-2b} F K^b.
    UqElement result(q_);
    for (const auto& [rkey, rc] : other.terms_) {
        UqElement acc = *this * rc;
        // times F^{rkey.f}
        for (long step = 0; step < rkey.f; ++step) {
            UqElement next(q_);
            for (const auto& [key, coeff] : acc.terms()) {
                // (F^a K^b E^c) F
                if (key.e == 0) {
                    next.add_term({key.f + 1, key.k, 0}, coeff * q_pow(q_, -2 * key.k));
                } else {
                    // E^c F = F E^c + [c] (q^{1-c} K - q^{c-1} K^-1)/(q - q^-1) E^{c-1}
                    next.add_term({key.f + 1, key.k, key.e}, coeff * q_pow(q_, -2 * key.k));
                    QRational denom = q_ - q_.inverse();
                    QRational bracket_c = q_int(q_, key.e);
                    // with K to the left of E^{c-1}
                    next.add_term({key.f, key.k + 1, key.e - 1},
                                  coeff * bracket_c * q_pow(q_, 1 - key.e) / denom);
                    next.add_term({key.f, key.k - 1, key.e - 1},
                                  coeff * bracket_c * q_pow(q_, key.e - 1) / denom * QRational(-1));
                }
            }
            acc = next;
        }
        // times K^{rkey.k}
        if (rkey.k != 0) {
            UqElement next(q_);
            for (const auto& [key, coeff] : acc.terms())
                next.add_term({key.f, key.k + rkey.k, key.e}, coeff * q_pow(q_, -2 * rkey.k * key.e));
            acc = next;
        }
        // times E^{rkey.e}
        if (rkey.e != 0) {
            UqElement next(q_);
            for (const auto& [key, coeff] : acc.terms())
                next.add_term({key.f, key.k, key.e + rkey.e}, coeff);
            acc = next;
        }
        result = result + acc;
    }
    return result;
}

std::string UqElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string();
        if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
        os << cs;
        if (key.f) os << "*F" << (key.f > 1 ? "^" + std::to_string(key.f) : "");
        if (key.k) os << "*K" << (key.k != 1 ? "^" + std::to_string(key.k) : "");
        if (key.e) os << "*E" << (key.e > 1 ? "^" + std::to_string(key.e) : "");
    }
    return os.str();
}

QVector act(const QRational& q, const UqElement& x, const IrrepVn& rep, const QVector& v) {
    size_t dim = rep.dimension();
    if (v.size() != dim) throw user_error("vector dimension mismatch");
    QVector out(dim, QRational(0));
    for (const auto& [key, coeff] : x.terms()) {
        QVector w = v;
        // E^e then K^k then F^f (rightmost letters act first).
        for (long step = 0; step < key.e; ++step) {
            QVector next(dim, QRational(0));
            for (size_t k = 1; k < dim; ++k)
                if (!w[k].is_zero())
                    next[k - 1] = w[k] * q_int(q, rep.highest_weight - static_cast<long>(k) + 1);
            w = next;
        }
        if (key.k != 0) {
            for (size_t k = 0; k < dim; ++k)
                if (!w[k].is_zero()) w[k] = w[k] * q_pow(q, key.k * rep.weight_of(k));
        }
        for (long step = 0; step < key.f; ++step) {
            QVector next(dim, QRational(0));
            for (size_t k = 0; k + 1 < dim; ++k)
                if (!w[k].is_zero()) next[k + 1] = w[k] * q_int(q, static_cast<long>(k) + 1);
            w = next;
        }
        for (size_t k = 0; k < dim; ++k) out[k] += coeff * w[k];
    }
    return out;
}

const CGSummand& CGDecomposition::summand(long k) const {
    for (const auto& s : summands)
        if (s.k == k) return s;
    throw user_error("no summand of highest weight " + std::to_string(k));
}

namespace {

// Action of Delta(E) = E ox 1 + K ox E, Delta(F) = F ox K^-1 + 1 ox F on
// V_n ox V_m in the e_{ij} basis.
QVector tensor_e(const QRational& q, long n, long m, const QVector& v) {
    size_t cols = static_cast<size_t>(m) + 1;
    QVector out(v.size(), QRational(0));
    for (long i = 0; i <= n; ++i)
        for (long j = 0; j <= m; ++j) {
            const QRational& c = v[static_cast<size_t>(i) * cols + static_cast<size_t>(j)];
            if (c.is_zero()) continue;
            // E ox 1: e_{ij} -> [n-i+1] e_{i-1,j}
            if (i >= 1)
                out[static_cast<size_t>(i - 1) * cols + static_cast<size_t>(j)] +=
                    c * q_int(q, n - i + 1);
            // K ox E: e_{ij} -> q^{n-2i} [m-j+1] e_{i,j-1}
            if (j >= 1)
                out[static_cast<size_t>(i) * cols + static_cast<size_t>(j - 1)] +=
                    c * q_pow(q, n - 2 * i) * q_int(q, m - j + 1);
        }
    return out;
}

QVector tensor_f(const QRational& q, long n, long m, const QVector& v) {
    size_t cols = static_cast<size_t>(m) + 1;
    QVector out(v.size(), QRational(0));
    for (long i = 0; i <= n; ++i)
        for (long j = 0; j <= m; ++j) {
            const QRational& c = v[static_cast<size_t>(i) * cols + static_cast<size_t>(j)];
            if (c.is_zero()) continue;
            // F ox K^-1: e_{ij} -> [i+1] q^{-(m-2j)} e_{i+1,j}
            if (i + 1 <= n)
                out[static_cast<size_t>(i + 1) * cols + static_cast<size_t>(j)] +=
                    c * q_int(q, i + 1) * q_pow(q, -(m - 2 * j));
            // 1 ox F: e_{ij} -> [j+1] e_{i,j+1}
            if (j + 1 <= m)
                out[static_cast<size_t>(i) * cols + static_cast<size_t>(j + 1)] +=
                    c * q_int(q, j + 1);
        }
    return out;
}

struct CGCacheKey {
    // Distinguish decompositions at different scalars.
    std::string q_repr;
    long n;
    long m;
    bool operator<(const CGCacheKey& other) const {
        if (q_repr != other.q_repr) return q_repr < other.q_repr;
        if (n != other.n) return n < other.n;
        return m < other.m;
    }
};

}  // namespace

std::shared_ptr<const CGDecomposition> cg_decompose(const QRational& q, long n, long m) {
    if (n < 0 || m < 0) throw user_error("cg_decompose needs nonnegative weights");
    static std::map<CGCacheKey, std::shared_ptr<const CGDecomposition>> cache;
    static std::mutex mutex;
    CGCacheKey cache_key{q.to_string(), n, m};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(cache_key);
        if (it != cache.end()) return it->second;
    }

    auto out = std::make_shared<CGDecomposition>();
    out->n = n;
    out->m = m;
    size_t total = static_cast<size_t>(n + 1) * static_cast<size_t>(m + 1);
    size_t cols = static_cast<size_t>(m) + 1;
    auto weight_of = [&](size_t index) {
        long i = static_cast<long>(index / cols);
        long j = static_cast<long>(index % cols);
        return (n - 2 * i) + (m - 2 * j);
    };

    QMatrix assembled(total);  // columns appended per summand
    for (auto& row : assembled) row.reserve(total);

    for (long k = n + m; k >= (n > m ? n - m : m - n); k -= 2) {
        // Highest-weight vector: E-kernel inside the weight-k subspace.
        std::vector<size_t> support;
        for (size_t idx = 0; idx < total; ++idx)
            if (weight_of(idx) == k) support.push_back(idx);
        // Rows: coordinates of E(e_support) expressed over the weight k+2
        // subspace; nullspace of the transpose gives the kernel.
        QMatrix action;
        for (size_t s : support) {
            QVector basis_vec(total, QRational(0));
            basis_vec[s] = QRational(1);
            action.push_back(tensor_e(q, n, m, basis_vec));
        }
        // Columns of the kernel system: one per support vector.
        QMatrix system(total, QVector(support.size(), QRational(0)));
        for (size_t col = 0; col < support.size(); ++col)
            for (size_t row = 0; row < total; ++row) system[row][col] = action[col][row];
        auto kernel = qmat_nullspace(system);
        if (kernel.size() != 1)
            throw internal_error("tensor-product highest-weight space is not a line");
        // Normalize: first nonzero coordinate (in e_{ij} order) is 1.
        QVector hw(total, QRational(0));
        {
            QRational lead(0);
            for (size_t col = 0; col < support.size(); ++col)
                if (!kernel[0][col].is_zero()) {
                    lead = kernel[0][col];
                    break;
                }
            for (size_t col = 0; col < support.size(); ++col)
                hw[support[col]] = kernel[0][col] / lead;
        }
        CGSummand summand;
        summand.k = k;
        summand.inclusion.assign(total, QVector(static_cast<size_t>(k) + 1, QRational(0)));
        QVector current = hw;
        for (long t = 0; t <= k; ++t) {
            if (t > 0) {
                current = tensor_f(q, n, m, current);
                QRational inv = q_int(q, t).inverse();
                for (auto& c : current) c = c * inv;  // iota(v_t) = Delta(F) iota(v_{t-1}) / [t]
            }
            for (size_t row = 0; row < total; ++row) summand.inclusion[row][static_cast<size_t>(t)] = current[row];
        }
        for (size_t row = 0; row < total; ++row)
            for (long t = 0; t <= k; ++t) assembled[row].push_back(summand.inclusion[row][static_cast<size_t>(t)]);
        out->summands.push_back(std::move(summand));
    }

    if (!assembled.empty() && assembled[0].size() != total)
        throw internal_error("tensor decomposition dimension mismatch");
    QMatrix inverse = qmat_inverse(assembled);
    size_t offset = 0;
    for (auto& summand : out->summands) {
        size_t dim = static_cast<size_t>(summand.k) + 1;
        summand.projection.assign(dim, QVector(total, QRational(0)));
        for (size_t r = 0; r < dim; ++r)
            for (size_t c = 0; c < total; ++c) summand.projection[r][c] = inverse[offset + r][c];
        offset += dim;
    }

    std::lock_guard<std::mutex> lock(mutex);
    auto [it, fresh] = cache.emplace(cache_key, std::move(out));
    return it->second;
}

}  // namespace qwonder
