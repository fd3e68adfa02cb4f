#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qwonder/linalg.hpp"
#include "qwonder/rational.hpp"

namespace qwonder {

/// PBW word F^f K^k E^e with f, e >= 0 and k in Z.
struct PBWKey {
    long f = 0;
    long k = 0;
    long e = 0;

    bool operator<(const PBWKey& other) const {
        if (f != other.f) return f < other.f;
        if (k != other.k) return k < other.k;
        return e < other.e;
    }
    bool operator==(const PBWKey& other) const {
        return f == other.f && k == other.k && e == other.e;
    }
};

/// Element of the quantized enveloping algebra of sl2 in PBW normal form.
/// The scalar q is carried by the element; mixing elements at different
/// q values is an error.
class UqElement {
public:
    explicit UqElement(const QRational& q) : q_(q) {}

    static UqElement zero(const QRational& q) { return UqElement(q); }
    static UqElement unit(const QRational& q);
    static UqElement gen_e(const QRational& q);
    static UqElement gen_f(const QRational& q);
    static UqElement gen_k(const QRational& q, long power = 1);

    const QRational& q() const { return q_; }
    const std::map<PBWKey, QRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PBWKey& key, const QRational& coeff);

    UqElement operator+(const UqElement& other) const;
    UqElement operator-(const UqElement& other) const;
    UqElement operator-() const;
    UqElement operator*(const QRational& scalar) const;
    /// PBW normal form of the product.
    UqElement operator*(const UqElement& other) const;

    bool operator==(const UqElement& other) const { return terms_ == other.terms_; }
    bool operator!=(const UqElement& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    QRational q_;
    std::map<PBWKey, QRational> terms_;
};

/// The (n+1)-dimensional irreducible module: basis v_0..v_n, v_k of
/// weight n-2k, with
///   E v_k = [n-k+1] v_{k-1},  F v_k = [k+1] v_{k+1},  K v_k = q^{n-2k} v_k.
struct IrrepVn {
    long highest_weight = 0;
    size_t dimension() const { return static_cast<size_t>(highest_weight) + 1; }
    long weight_of(size_t k) const { return highest_weight - 2 * static_cast<long>(k); }
};

/// Action of a PBW element on a coordinate vector of V_n.
QVector act(const QRational& q, const UqElement& x, const IrrepVn& rep, const QVector& v);

/// One irreducible summand V_k of a tensor product V_n ⊗ V_m, with the
/// inclusion and projection matrices in the basis e_{ij} = v_i ⊗ v_j
/// (lexicographic by (i, j)).
struct CGSummand {
    long k = 0;
    QMatrix inclusion;   // (n+1)(m+1) x (k+1)
    QMatrix projection;  // (k+1) x (n+1)(m+1)
};

struct CGDecomposition {
    long n = 0;
    long m = 0;
    std::vector<CGSummand> summands;  // k = n+m, n+m-2, ..., |n-m|

    const CGSummand& summand(long k) const;
};

/// Tensor-product decomposition at the given q. Inclusions send the
/// canonical highest vector of V_k to the E-kernel vector whose first
/// nonzero coordinate is 1; projections are fixed by inverting the
/// assembled column matrix, so pi_k . iota_l = delta_{kl} and
/// sum_k iota_k . pi_k = 1.
std::shared_ptr<const CGDecomposition> cg_decompose(const QRational& q, long n, long m);

}  // namespace qwonder
