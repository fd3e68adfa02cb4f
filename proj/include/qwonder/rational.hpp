#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace qwonder {

using Rational = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Bad input (parse errors, wrong context, pole at q=1, ...).
struct user_error : error {
    using error::error;
};
// A violated internal invariant; indicates a bug, not a bad input.
struct internal_error : error {
    using error::error;
};

/// Laurent polynomial in the formal parameter q with exact rational
/// coefficients. No zero coefficients are stored; the empty map is zero.
class QLaurent {
public:
    QLaurent() = default;
    explicit QLaurent(const Rational& constant);
    explicit QLaurent(long constant);

    static QLaurent q_power(long exponent, const Rational& coeff = 1);

    bool is_zero() const { return coeff_.empty(); }
    bool is_constant() const;

    long min_exponent() const;  // requires nonzero
    long max_exponent() const;

    const std::map<long, Rational>& coefficients() const { return coeff_; }
    void set(long exponent, const Rational& value);

    QLaurent operator-() const;
    QLaurent& operator+=(const QLaurent& other);
    QLaurent& operator-=(const QLaurent& other);
    QLaurent operator+(const QLaurent& other) const;
    QLaurent operator-(const QLaurent& other) const;
    QLaurent operator*(const QLaurent& other) const;

    bool operator==(const QLaurent& other) const { return coeff_ == other.coeff_; }
    bool operator!=(const QLaurent& other) const { return !(*this == other); }
    bool operator<(const QLaurent& other) const { return coeff_ < other.coeff_; }

    Rational eval_at_one() const;

    /// Substitute a nonzero rational value for q.
    Rational eval_at(const Rational& value) const;

    std::string to_string() const;

private:
    std::map<long, Rational> coeff_;
};

/// (q^n - q^-n) / (q - q^-1) expanded as a Laurent polynomial.
QLaurent quantum_integer(long n);

/// [n]! = [1][2]...[n].
QLaurent quantum_factorial(long n);

/// Ratio of Laurent polynomials in q, kept in a canonical form:
/// the denominator is an ordinary polynomial with nonzero constant
/// term equal to 1, and shares no polynomial factor with the numerator.
class QRational {
public:
    QRational() = default;
    QRational(const QLaurent& numerator, const QLaurent& denominator);
    QRational(const QLaurent& laurent);  // NOLINT: deliberate implicit lift
    QRational(const Rational& constant);
    QRational(long constant);

    static QRational q_power(long exponent, const Rational& coeff = 1);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    const QLaurent& numerator() const { return num_; }
    const QLaurent& denominator() const { return den_; }

    QRational operator-() const;
    QRational operator+(const QRational& other) const;
    QRational operator-(const QRational& other) const;
    QRational operator*(const QRational& other) const;
    QRational operator/(const QRational& other) const;
    QRational& operator+=(const QRational& other);
    QRational& operator-=(const QRational& other);
    QRational& operator*=(const QRational& other);

    QRational inverse() const;

    bool operator==(const QRational& other) const;
    bool operator!=(const QRational& other) const { return !(*this == other); }
    bool operator<(const QRational& other) const;

    /// Exact value at q=1; throws user_error on a pole.
    Rational eval_at_one() const;

    Rational eval_at(const Rational& value) const;

    /// Value of x/(q-1) at q=1, defined when x vanishes at q=1.
    Rational semiclassical_coefficient() const;

    std::string to_string() const;

private:
    void normalize();

    QLaurent num_;
    QLaurent den_ = QLaurent(1);
};

inline QRational operator*(const Rational& scalar, const QRational& x) {
    return QRational(scalar) * x;
}

std::string rational_to_string(const Rational& r);

}  // namespace qwonder
