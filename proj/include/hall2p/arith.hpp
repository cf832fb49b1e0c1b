#pragma once

/* Exact arithmetic: rationals, the subring Z[1/q], and its reduction to
 * Z/(q-1) under q -> 1.  Raw triangle counts live in Rational; the checked
 * conversion to QRational turns every "lies in Z[1/q]" claim into an
 * executable assertion instead of an assumption. */

#include <string>

#include "hall2p/common.hpp"

namespace hall2p {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den)
    {
        if (den == 0)
            throw Error("Rational: zero denominator");
        v_.canonicalize();
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator/(const Rational& o) const
    {
        if (o.v_ == 0)
            throw Error("Rational: division by zero");
        return Rational(v_ / o.v_);
    }
    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    std::string str() const { return v_.get_str(); }

private:
    explicit Rational(const mpq_class& q) : v_(q) {}
    mpq_class v_;
};

/* True iff every prime factor of a's denominator divides q. */
inline bool in_z_inv_q(const Rational& a, unsigned q)
{
    Int d = a.den();
    while (d > 1) {
        Int g = gcd(d, Int(q));
        if (g == 1)
            return false;
        while (d % g == 0)
            d /= g;
    }
    return true;
}

/* num / q^qexp with q not dividing num when qexp > 0; the normal form is
 * unique, so equality of values is equality of fields. */
struct QRational {
    Int num;
    unsigned qexp = 0;

    bool operator==(const QRational& o) const
    {
        return num == o.num && qexp == o.qexp;
    }
};

inline QRational to_q_rational(const Rational& a, unsigned q)
{
    if (!in_z_inv_q(a, q))
        throw VerificationError("value " + a.str() + " is not in Z[1/" +
                                std::to_string(q) + "]");
    QRational r;
    const Int den = a.den();
    Int qpow = 1;
    r.qexp = 0;
    while (qpow % den != 0) {
        qpow *= q;
        ++r.qexp;
    }
    r.num = a.num() * (qpow / den);
    while (r.qexp > 0 && r.num % q == 0) {
        r.num /= q;
        --r.qexp;
    }
    return r;
}

inline Rational to_rational(const QRational& a, unsigned q)
{
    return Rational(a.num, int_pow(q, a.qexp));
}

/* Element of Z/(q-1).  For q = 2 the ring is trivial and every value is 0. */
struct Residue {
    unsigned long value = 0;
    unsigned long modulus = 1;

    Residue() = default;
    Residue(const Int& n, unsigned long m) : modulus(m)
    {
        Int r = n % Int(m);
        if (r < 0)
            r += m;
        value = r.get_ui();
    }

    Residue operator+(const Residue& o) const { return Residue(Int(value) + Int(o.value), check(o)); }
    Residue operator-(const Residue& o) const { return Residue(Int(value) - Int(o.value), check(o)); }
    Residue operator*(const Residue& o) const { return Residue(Int(value) * Int(o.value), check(o)); }
    Residue operator-() const { return Residue(-Int(value), modulus); }

    bool operator==(const Residue& o) const
    {
        return value == o.value && modulus == o.modulus;
    }
    bool operator!=(const Residue& o) const { return !(*this == o); }
    bool is_zero() const { return value == 0; }

private:
    unsigned long check(const Residue& o) const
    {
        if (modulus != o.modulus)
            throw Error("Residue: mixed moduli");
        return modulus;
    }
};

/* The ring map Z[1/q] -> Z/(q-1) determined by q -> 1. */
inline Residue residue(const QRational& a, unsigned q)
{
    return Residue(a.num, q - 1);
}

inline Residue residue(const Rational& a, unsigned q)
{
    return residue(to_q_rational(a, q), q);
}

inline Residue residue_of_int(const Int& n, unsigned q)
{
    return Residue(n, q - 1);
}

} // namespace hall2p
