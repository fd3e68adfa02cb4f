#include "qwonder/rational.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qwonder {

QLaurent::QLaurent(const Rational& constant) {
    if (constant != 0) coeff_[0] = constant;
}

QLaurent::QLaurent(long constant) : QLaurent(Rational(constant)) {}

QLaurent QLaurent::q_power(long exponent, const Rational& coeff) {
    QLaurent out;
    if (coeff != 0) out.coeff_[exponent] = coeff;
    return out;
}

bool QLaurent::is_constant() const {
    return coeff_.empty() || (coeff_.size() == 1 && coeff_.begin()->first == 0);
}

long QLaurent::min_exponent() const {
    if (is_zero()) throw internal_error("min_exponent of zero Laurent polynomial");
    return coeff_.begin()->first;
}

long QLaurent::max_exponent() const {
    if (is_zero()) throw internal_error("max_exponent of zero Laurent polynomial");
    return coeff_.rbegin()->first;
}

void QLaurent::set(long exponent, const Rational& value) {
    if (value == 0)
        coeff_.erase(exponent);
    else
        coeff_[exponent] = value;
}

QLaurent QLaurent::operator-() const {
    QLaurent out;
    for (const auto& [e, c] : coeff_) out.coeff_[e] = -c;
    return out;
}

QLaurent& QLaurent::operator+=(const QLaurent& other) {
    for (const auto& [e, c] : other.coeff_) {
        auto it = coeff_.find(e);
        if (it == coeff_.end()) {
            coeff_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeff_.erase(it);
        }
    }
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& other) { return *this += -other; }

QLaurent QLaurent::operator+(const QLaurent& other) const {
    QLaurent out = *this;
    out += other;
    return out;
}

QLaurent QLaurent::operator-(const QLaurent& other) const {
    QLaurent out = *this;
    out -= other;
    return out;
}

QLaurent QLaurent::operator*(const QLaurent& other) const {
    QLaurent out;
    for (const auto& [e1, c1] : coeff_)
        for (const auto& [e2, c2] : other.coeff_) {
            auto it = out.coeff_.find(e1 + e2);
            if (it == out.coeff_.end()) {
                out.coeff_[e1 + e2] = c1 * c2;
            } else {
                it->second += c1 * c2;
                if (it->second == 0) out.coeff_.erase(it);
            }
        }
    return out;
}

Rational QLaurent::eval_at_one() const {
    Rational sum = 0;
    for (const auto& [e, c] : coeff_) sum += c;
    return sum;
}

Rational QLaurent::eval_at(const Rational& value) const {
    if (value == 0) throw user_error("q must be nonzero");
    Rational sum = 0;
    for (const auto& [e, c] : coeff_) {
        Rational p = 1;
        for (long i = 0; i < (e < 0 ? -e : e); ++i) p *= value;
        if (e < 0) p = 1 / p;
        sum += c * p;
    }
    return sum;
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string QLaurent::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest power first.
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        long e = it->first;
        if (e == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

QLaurent quantum_integer(long n) {
    QLaurent out;
    long m = n < 0 ? -n : n;
    for (long e = m - 1; e >= 1 - m; e -= 2) out.set(e, n < 0 ? -1 : 1);
    return out;
}

QLaurent quantum_factorial(long n) {
    QLaurent out(1);
    for (long k = 2; k <= n; ++k) out = out * quantum_integer(k);
    return out;
}

namespace {

// Dense coefficient vector of an ordinary polynomial, constant term first.
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Laurent -> (offset, polynomial) with nonzero constant term.
Poly to_poly(const QLaurent& x, long& offset) {
    offset = x.min_exponent();
    Poly p(static_cast<size_t>(x.max_exponent() - offset) + 1, Rational(0));
    for (const auto& [e, c] : x.coefficients()) p[static_cast<size_t>(e - offset)] = c;
    return p;
}

QLaurent from_poly(const Poly& p, long offset) {
    QLaurent out;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) out.set(offset + static_cast<long>(i), p[i]);
    return out;
}

Poly poly_rem(Poly a, const Poly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational factor = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        poly_trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    Poly rem = a;
    Poly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (rem.size() >= b.size() && !rem.empty()) {
        Rational factor = rem.back() / b.back();
        size_t shift = rem.size() - b.size();
        quot[shift] = factor;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= factor * b[i];
        poly_trim(rem);
    }
    if (!rem.empty()) throw internal_error("inexact polynomial division");
    poly_trim(quot);
    return quot;
}

}  // namespace

QRational::QRational(const QLaurent& numerator, const QLaurent& denominator)
    : num_(numerator), den_(denominator) {
    normalize();
}

QRational::QRational(const QLaurent& laurent) : num_(laurent), den_(QLaurent(1)) {}

QRational::QRational(const Rational& constant) : num_(QLaurent(constant)), den_(QLaurent(1)) {}

QRational::QRational(long constant) : num_(QLaurent(constant)), den_(QLaurent(1)) {}

QRational QRational::q_power(long exponent, const Rational& coeff) {
    return QRational(QLaurent::q_power(exponent, coeff));
}

bool QRational::is_one() const { return num_ == QLaurent(1) && den_ == QLaurent(1); }

void QRational::normalize() {
    if (den_.is_zero()) throw user_error("zero denominator");
    if (num_.is_zero()) {
        den_ = QLaurent(1);
        return;
    }
    long num_off = 0, den_off = 0;
    Poly np = to_poly(num_, num_off);
    Poly dp = to_poly(den_, den_off);
    Poly g = poly_gcd(np, dp);
    if (g.size() > 1) {
        np = poly_divexact(np, g);
        dp = poly_divexact(dp, g);
    }
    // Denominator: offset 0, constant term 1.
    Rational low = dp.front();
    for (auto& c : np) c /= low;
    for (auto& c : dp) c /= low;
    num_ = from_poly(np, num_off - den_off);
    den_ = from_poly(dp, 0);
}

QRational QRational::operator-() const {
    QRational out = *this;
    out.num_ = -out.num_;
    return out;
}

QRational QRational::operator+(const QRational& other) const {
    return QRational(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

QRational QRational::operator-(const QRational& other) const {
    return QRational(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

QRational QRational::operator*(const QRational& other) const {
    return QRational(num_ * other.num_, den_ * other.den_);
}

QRational QRational::operator/(const QRational& other) const {
    if (other.is_zero()) throw user_error("division by zero");
    return QRational(num_ * other.den_, den_ * other.num_);
}

QRational& QRational::operator+=(const QRational& other) { return *this = *this + other; }
QRational& QRational::operator-=(const QRational& other) { return *this = *this - other; }
QRational& QRational::operator*=(const QRational& other) { return *this = *this * other; }

QRational QRational::inverse() const {
    if (is_zero()) throw user_error("inverse of zero");
    return QRational(den_, num_);
}

bool QRational::operator==(const QRational& other) const {
    return num_ == other.num_ && den_ == other.den_;
}

bool QRational::operator<(const QRational& other) const {
    if (num_ != other.num_) return num_ < other.num_;
    return den_ < other.den_;
}

Rational QRational::eval_at_one() const {
    Rational d = den_.eval_at_one();
    if (d == 0) throw user_error("pole at q=1");
    return num_.eval_at_one() / d;
}

Rational QRational::eval_at(const Rational& value) const {
    Rational d = den_.eval_at(value);
    if (d == 0) throw user_error("pole at the requested q");
    return num_.eval_at(value) / d;
}

Rational QRational::semiclassical_coefficient() const {
    if (is_zero()) return 0;
    if (eval_at_one() != 0) throw user_error("semiclassical coefficient of a value nonzero at q=1");
    QLaurent q_minus_one;
    q_minus_one.set(1, 1);
    q_minus_one.set(0, -1);
    return (*this / QRational(q_minus_one)).eval_at_one();
}

std::string QRational::to_string() const {
    if (den_ == QLaurent(1)) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.coefficients().size() > 1) n = "(" + n + ")";
    return n + " / (" + den_.to_string() + ")";
}

}  // namespace qwonder
