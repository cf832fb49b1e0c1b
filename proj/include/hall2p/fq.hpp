#pragma once

/* Finite fields F_q for the prime powers q in {2,3,4,5,7,8,9}.  Elements are
 * integer indices into precomputed add/mul tables; index digits in base p are
 * the coefficients of the residue polynomial.  Fixed reduction polynomials:
 * x^2+x+1 (q=4), x^3+x+1 (q=8), x^2+1 (q=9). */

#include <array>
#include <vector>

#include "hall2p/common.hpp"

namespace hall2p {

using Fq = uint8_t;

class FqField {
public:
    explicit FqField(unsigned q) : q_(q)
    {
        switch (q) {
        case 2: case 3: case 5: case 7: p_ = q; e_ = 1; break;
        case 4: p_ = 2; e_ = 2; red_ = {1, 1, 1}; break;
        case 8: p_ = 2; e_ = 3; red_ = {1, 1, 0, 1}; break;
        case 9: p_ = 3; e_ = 2; red_ = {1, 0, 1}; break;
        default:
            throw ConfigError("unsupported field size q=" + std::to_string(q) +
                              " (expected one of 2,3,4,5,7,8,9)");
        }
        build_tables();
    }

    unsigned q() const { return q_; }
    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    const std::vector<Fq>& reduction_poly() const { return red_; }

    Fq add(Fq a, Fq b) const { return add_[a * q_ + b]; }
    Fq sub(Fq a, Fq b) const { return add_[a * q_ + neg_[b]]; }
    Fq mul(Fq a, Fq b) const { return mul_[a * q_ + b]; }
    Fq neg(Fq a) const { return neg_[a]; }
    Fq inv(Fq a) const
    {
        if (a == 0)
            throw Error("FqField: inverse of zero");
        return inv_[a];
    }
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }

    bool operator==(const FqField& o) const { return q_ == o.q_; }

private:
    /* polynomial arithmetic in coefficient vectors over F_p, used once to
     * fill the tables */
    std::vector<unsigned> to_poly(Fq a) const
    {
        std::vector<unsigned> c(e_, 0);
        for (unsigned i = 0; i < e_; ++i) {
            c[i] = a % p_;
            a = static_cast<Fq>(a / p_);
        }
        return c;
    }

    Fq from_poly(const std::vector<unsigned>& c) const
    {
        unsigned v = 0;
        for (unsigned i = e_; i-- > 0;)
            v = v * p_ + c[i];
        return static_cast<Fq>(v);
    }

    void build_tables()
    {
        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        for (unsigned a = 0; a < q_; ++a) {
            auto pa = to_poly(static_cast<Fq>(a));
            for (unsigned b = 0; b < q_; ++b) {
                auto pb = to_poly(static_cast<Fq>(b));
                std::vector<unsigned> s(e_);
                for (unsigned i = 0; i < e_; ++i)
                    s[i] = (pa[i] + pb[i]) % p_;
                add_[a * q_ + b] = from_poly(s);

                std::vector<unsigned> m(2 * e_ - 1, 0);
                for (unsigned i = 0; i < e_; ++i)
                    for (unsigned j = 0; j < e_; ++j)
                        m[i + j] = (m[i + j] + pa[i] * pb[j]) % p_;
                if (e_ > 1) {
                    for (unsigned d = 2 * e_ - 2; d >= e_; --d) {
                        unsigned lead = m[d];
                        if (lead == 0)
                            continue;
                        m[d] = 0;
                        for (unsigned i = 0; i < e_; ++i)
                            m[d - e_ + i] =
                                (m[d - e_ + i] + lead * (p_ - red_[i])) % p_;
                    }
                }
                m.resize(e_);
                mul_[a * q_ + b] = from_poly(m);
            }
            std::vector<unsigned> n(e_);
            auto pa2 = to_poly(static_cast<Fq>(a));
            for (unsigned i = 0; i < e_; ++i)
                n[i] = (p_ - pa2[i]) % p_;
            neg_[a] = from_poly(n);
        }
        for (unsigned a = 1; a < q_; ++a)
            for (unsigned b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1)
                    inv_[a] = static_cast<Fq>(b);
    }

    unsigned q_, p_ = 0, e_ = 0;
    std::vector<Fq> red_;
    std::vector<Fq> add_, mul_, neg_, inv_;
};

} // namespace hall2p
