#pragma once

/* The Lie algebra over Z/(q-1): symmetric bilinear form on the Grothendieck
 * lattice, the bracket [u_X, u_Y] = [u_X,u_Y]_n + delta_{X,Y[1]} h_X/d(X),
 * Jacobi scans, the starred variant built on theta-symbols modulo triangle
 * additivity, and the Chevalley-basis comparison against an asymmetry
 * function oracle. */

#include "hall2p/hall.hpp"

namespace hall2p {

/* Symmetrized Euler form on dimension vectors. */
inline long sym_form(const Quiver& q, const std::vector<long>& a,
                     const std::vector<long>& b)
{
    return euler_form(q, a, b) + euler_form(q, b, a);
}

inline Rational bilinear_form(const Quiver& q, const std::vector<Rational>& a,
                              const std::vector<Rational>& b)
{
    Rational s(0);
    for (size_t i = 0; i < q.vertex_count(); ++i)
        s += a[i] * b[i] * Rational(2);
    for (const Arrow& ar : q.arrows()) {
        s -= a[ar.src] * b[ar.tgt];
        s -= a[ar.tgt] * b[ar.src];
    }
    return s;
}

/* Element of g_(q-1): residue coefficients on u_[X] plus a Cartan vector
 * over the vertex lattice. */
struct LieElement {
    std::map<Label, Residue> u;
    std::vector<Residue> h;

    bool is_zero() const
    {
        for (const auto& [l, c] : u)
            if (!c.is_zero())
                return false;
        for (const auto& c : h)
            if (!c.is_zero())
                return false;
        return true;
    }

    bool operator==(const LieElement& o) const
    {
        LieElement d = *this;
        for (const auto& [l, c] : o.u) {
            auto it = d.u.find(l);
            if (it == d.u.end())
                d.u.emplace(l, -c);
            else
                it->second = it->second - c;
        }
        for (size_t i = 0; i < d.h.size(); ++i)
            d.h[i] = d.h[i] - o.h[i];
        return d.is_zero();
    }
};

/* Integer lattice kept in row echelon form (distinct positive pivots);
 * membership testing by floor-division reduction.  Used for the
 * theta-relation lattice; dimensions are tiny. */
class IntLattice {
public:
    explicit IntLattice(size_t dim) : dim_(dim) {}

    void add(std::vector<Int> v)
    {
        gens_.push_back(std::move(v));
        rebuild();
    }

    bool contains(std::vector<Int> v) const
    {
        for (const auto& r : rows_) {
            size_t p = pivot(r);
            if (v[p] == 0)
                continue;
            if (v[p] % r[p] != 0)
                return false;
            Int q = v[p] / r[p];
            for (size_t i = 0; i < dim_; ++i)
                v[i] -= q * r[i];
        }
        for (const Int& x : v)
            if (x != 0)
                return false;
        return true;
    }

private:
    static size_t pivot(const std::vector<Int>& r)
    {
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i] != 0)
                return i;
        return r.size();
    }

    void rebuild()
    {
        rows_.clear();
        for (const auto& g : gens_)
            if (pivot(g) < dim_)
                rows_.push_back(g);
        bool changed = true;
        while (changed) {
            changed = false;
            std::sort(rows_.begin(), rows_.end(),
                      [](const auto& a, const auto& b) {
                          size_t pa = pivot(a), pb = pivot(b);
                          if (pa != pb)
                              return pa < pb;
                          return abs(a[pa]) < abs(b[pb]);
                      });
            for (size_t i = 0; i < rows_.size(); ++i) {
                size_t p = pivot(rows_[i]);
                if (p == dim_)
                    continue; // became zero this pass
                for (size_t j = i + 1; j < rows_.size(); ++j) {
                    if (pivot(rows_[j]) != p)
                        continue;
                    Int q = rows_[j][p] / rows_[i][p]; // nonzero: sorted by size
                    for (size_t k = 0; k < dim_; ++k)
                        rows_[j][k] -= q * rows_[i][k];
                    changed = true;
                }
            }
            rows_.erase(std::remove_if(rows_.begin(), rows_.end(),
                                       [](const auto& r) {
                                           return pivot(r) == r.size();
                                       }),
                        rows_.end());
        }
        for (auto& r : rows_)
            if (r[pivot(r)] < 0)
                for (auto& x : r)
                    x = -x;
    }

    size_t dim_;
    std::vector<std::vector<Int>> gens_;
    std::vector<std::vector<Int>> rows_;
};

struct Violation {
    std::string what;
};

class LieContext {
public:
    explicit LieContext(const HallContext& hall) : hall_(hall)
    {
        const auto& cat = hall_.root().catalog();
        nvert_ = hall_.root().quiver().vertex_count();
        nids_ = cat.size();
    }

    const HallContext& hall() const { return hall_; }
    unsigned q() const { return hall_.q(); }
    unsigned long modulus() const { return q() - 1; }

    Residue res(const Rational& r) const { return residue(r, q()); }
    Residue res_int(long n) const { return Residue(Int(n), modulus()); }

    /* h_X / d(X) as a residue vector over the vertex lattice. */
    std::vector<Residue> h_tilde(const Label& x) const
    {
        auto g = hall_.root().groth_vector(x);
        unsigned d = hall_.root().d_value(x);
        std::vector<Residue> h;
        for (long v : g) {
            if (v % long(d) != 0)
                throw VerificationError("h_X not divisible by d(X)");
            h.push_back(res_int(v / long(d)));
        }
        return h;
    }

    LieElement u_element(const Label& x) const
    {
        LieElement e;
        e.h.assign(nvert_, Residue(Int(0), modulus()));
        e.u.emplace(x, Residue(Int(1), modulus()));
        return e;
    }

    LieElement h_element(const Label& x) const
    {
        LieElement e;
        e.h = h_tilde(x);
        e.u.clear();
        return e;
    }

    /* [u_X, u_Y] for indecomposable labels: n-part from g-differences
     * (coefficients on decomposable middles are asserted to vanish mod
     * (q-1), then dropped), plus delta_{X,Y[1]} h~_X. */
    const LieElement& bracket_uu(const Label& x, const Label& y) const
    {
        auto key = std::make_pair(x, y);
        {
            std::lock_guard<std::mutex> g(mu_);
            auto it = uu_.find(key);
            if (it != uu_.end())
                return it->second;
        }
        LieElement e;
        e.h.assign(nvert_, Residue(Int(0), modulus()));
        std::set<Label> middles;
        for (const Label& l : hall_.candidate_middles(y, x))
            middles.insert(l);
        for (const Label& l : hall_.candidate_middles(x, y))
            middles.insert(l);
        for (const Label& l : middles) {
            Rational diff = hall_.g_value(y, x, l) - hall_.g_value(x, y, l);
            Residue r = res(diff);
            if (l.is_indecomposable()) {
                if (!r.is_zero())
                    e.u.emplace(l, r);
            } else if (!r.is_zero()) {
                throw VerificationError(
                    "nonzero bracket coefficient on decomposable middle " +
                    hall_.root().render(l));
            }
        }
        if (x == y.shifted()) {
            auto ht = h_tilde(x);
            for (size_t v = 0; v < nvert_; ++v)
                e.h[v] = e.h[v] + ht[v];
        }
        std::lock_guard<std::mutex> g(mu_);
        return uu_.emplace(key, std::move(e)).first->second;
    }

    /* (h~_X | h_Y) as a residue; the action scalar of the Cartan part. */
    Residue form_residue(const std::vector<Residue>& hvec, const Label& y) const
    {
        auto hy = hall_.root().groth_vector(y);
        // symmetrized Euler matrix applied with residue coefficients
        Residue s(Int(0), modulus());
        const Quiver& Q = hall_.root().quiver();
        for (size_t i = 0; i < nvert_; ++i)
            s = s + hvec[i] * res_int(2 * hy[i]);
        for (const Arrow& ar : Q.arrows()) {
            s = s - hvec[ar.src] * res_int(hy[ar.tgt]);
            s = s - hvec[ar.tgt] * res_int(hy[ar.src]);
        }
        return s;
    }

    /* Full bilinear bracket on g_(q-1). */
    LieElement bracket(const LieElement& a, const LieElement& b) const
    {
        LieElement e;
        e.h.assign(nvert_, Residue(Int(0), modulus()));
        for (const auto& [lx, cx] : a.u) {
            for (const auto& [ly, cy] : b.u) {
                const LieElement& base = bracket_uu(lx, ly);
                Residue c = cx * cy;
                for (const auto& [l, coeff] : base.u)
                    add_u(e, l, c * coeff);
                for (size_t v = 0; v < nvert_; ++v)
                    e.h[v] = e.h[v] + c * base.h[v];
            }
        }
        // [h, u_Y] = -(h|h_Y) u_Y and [u_Y, h] = +(h|h_Y) u_Y
        for (const auto& [ly, cy] : b.u)
            add_u(e, ly, -(cy * form_residue(a.h, ly)));
        for (const auto& [lx, cx] : a.u)
            add_u(e, lx, cx * form_residue(b.h, lx));
        return e;
    }

    /* Jacobi scan over all triples from {u_X} union {h~_X}. */
    std::vector<Violation> verify_jacobi() const
    {
        std::vector<Violation> out;
        std::vector<std::pair<std::string, LieElement>> basis;
        for (const Label& r : hall_.root().root_labels()) {
            basis.emplace_back("u[" + hall_.root().render(r) + "]",
                               u_element(r));
            basis.emplace_back("h[" + hall_.root().render(r) + "]",
                               h_element(r));
        }
        for (const auto& [nx, ex] : basis)
            for (const auto& [ny, ey] : basis)
                for (const auto& [nz, ez] : basis) {
                    LieElement lhs = bracket(bracket(ex, ey), ez);
                    LieElement rhs = bracket(bracket(ex, ez), ey);
                    LieElement mid = bracket(ex, bracket(ey, ez));
                    for (const auto& [l, c] : mid.u)
                        add_u(rhs, l, c);
                    for (size_t v = 0; v < nvert_; ++v)
                        rhs.h[v] = rhs.h[v] + mid.h[v];
                    if (!(lhs == rhs))
                        out.push_back({"Jacobi fails at (" + nx + ", " + ny +
                                       ", " + nz + ")"});
                }
        return out;
    }

    /* Antisymmetry including the delta-term. */
    std::vector<Violation> verify_antisymmetry() const
    {
        std::vector<Violation> out;
        auto roots = hall_.root().root_labels();
        for (const Label& x : roots)
            for (const Label& y : roots) {
                LieElement a = bracket_uu(x, y);
                LieElement b = bracket_uu(y, x);
                LieElement sum = a;
                for (const auto& [l, c] : b.u)
                    add_u(sum, l, c);
                for (size_t v = 0; v < nvert_; ++v)
                    sum.h[v] = sum.h[v] + b.h[v];
                if (!sum.is_zero())
                    out.push_back({"antisymmetry fails at (" +
                                   hall_.root().render(x) + ", " +
                                   hall_.root().render(y) + ")"});
            }
        return out;
    }

    /* ---- the starred algebra ------------------------------------------ */

    /* Element of g*_(q-1): u-part as above, Cartan part as a residue vector
     * over theta-symbols of unshifted catalog ids (h~*_{M} -> +e_M,
     * h~*_{M[1]} -> -e_M), compared modulo the triangle-additivity
     * relation lattice. */
    struct StarElement {
        std::map<Label, Residue> u;
        std::vector<Residue> hstar;
    };

    std::vector<Int> hstar_vec_int(const Label& x) const
    {
        if (!x.is_indecomposable())
            throw Error("h*_X needs an indecomposable label");
        std::vector<Int> v(nids_, 0);
        auto [id, parity] = x.parts[0];
        v[id] = parity == 0 ? 1 : -1;
        return v;
    }

    StarElement star_u(const Label& x) const
    {
        StarElement e;
        e.hstar.assign(nids_, Residue(Int(0), modulus()));
        e.u.emplace(x, Residue(Int(1), modulus()));
        return e;
    }

    StarElement star_h(const Label& x) const
    {
        StarElement e;
        e.hstar.assign(nids_, Residue(Int(0), modulus()));
        auto v = hstar_vec_int(x);
        for (size_t i = 0; i < nids_; ++i)
            e.hstar[i] = Residue(v[i], modulus());
        e.u.clear();
        return e;
    }

    /* Relation lattice for h*: one vector per cone triangle A -> L -> B
     * over the root labels, plus (q-1) times the standard basis. */
    const IntLattice& hstar_relations() const
    {
        {
            std::lock_guard<std::mutex> g(mu_);
            if (hstar_lattice_)
                return *hstar_lattice_;
        }
        auto lat = std::make_unique<IntLattice>(nids_);
        for (size_t i = 0; i < nids_; ++i) {
            std::vector<Int> v(nids_, 0);
            v[i] = long(modulus());
            lat->add(std::move(v));
        }
        auto roots = hall_.root().root_labels();
        auto vec_of = [&](const Label& l) {
            std::vector<Int> v(nids_, 0);
            for (const auto& [id, parity] : l.parts)
                v[id] += parity == 0 ? 1 : -1;
            return v;
        };
        for (const Label& a : roots)
            for (const Label& b : roots)
                for (const Label& l : hall_.candidate_middles(a, b)) {
                    auto va = vec_of(a);
                    auto vb = vec_of(b);
                    auto vl = vec_of(l);
                    std::vector<Int> rel(nids_);
                    for (size_t i = 0; i < nids_; ++i)
                        rel[i] = va[i] + vb[i] - vl[i];
                    lat->add(std::move(rel));
                }
        std::lock_guard<std::mutex> g(mu_);
        if (!hstar_lattice_)
            hstar_lattice_ = std::move(lat);
        return *hstar_lattice_;
    }

    bool star_equal(const StarElement& a, const StarElement& b) const
    {
        std::map<Label, Residue> du = a.u;
        for (const auto& [l, c] : b.u) {
            auto it = du.find(l);
            if (it == du.end())
                du.emplace(l, -c);
            else
                it->second = it->second - c;
        }
        for (const auto& [l, c] : du)
            if (!c.is_zero())
                return false;
        std::vector<Int> diff(nids_);
        for (size_t i = 0; i < nids_; ++i)
            diff[i] = Int(a.hstar[i].value) - Int(b.hstar[i].value);
        return hstar_relations().contains(diff);
    }

    /* [a, b]* built from the dot product.  The theta coefficients produced
     * by the shift-pair rule come in (theta_B - theta_A) pairs and are
     * folded into h* coordinates. */
    StarElement star_bracket(const StarElement& a, const StarElement& b) const
    {
        StarElement e;
        e.hstar.assign(nids_, Residue(Int(0), modulus()));
        for (const auto& [lx, cx] : a.u) {
            for (const auto& [ly, cy] : b.u) {
                const FormalSum& ab = hall_.dot_pair(lx, ly);
                const FormalSum& ba = hall_.dot_pair(ly, lx);
                FormalSum d = ab - ba;
                Residue c = cx * cy;
                for (const auto& [l, coeff] : d.u) {
                    Residue r = res(coeff);
                    if (l.is_indecomposable()) {
                        add_star_u(e, l, c * r);
                    } else if (!r.is_zero()) {
                        throw VerificationError(
                            "nonzero star-bracket coefficient on " +
                            hall_.root().render(l));
                    }
                }
                for (const auto& [w, coeff] : d.theta) {
                    // theta terms must pair into h~* combinations:
                    // coefficient of theta_{W[1]} is minus that of theta_W
                    auto partner = d.theta.find(w.shifted());
                    if (partner == d.theta.end() ||
                        !(partner->second + coeff).is_zero())
                        throw VerificationError(
                            "theta part of a star bracket is not an h* "
                            "combination");
                    // fold through phi(theta_M) = e_M, phi(theta_M[1]) = 0
                    Residue r = c * res(coeff);
                    auto [id, parity] = w.parts[0];
                    if (parity == 0)
                        e.hstar[id] = e.hstar[id] + r;
                }
            }
        }
        // [h*, u] and [u, h*] act through the underlying h-vectors
        for (const auto& [ly, cy] : b.u)
            add_star_u(e, ly, cy * hstar_action(a.hstar, ly));
        for (const auto& [lx, cx] : a.u)
            add_star_u(e, lx, -(cx * hstar_action(b.hstar, lx)));
        return e;
    }

    /* [h~*_w, u_Y]* = (h_w | h_Y) u_Y with h_w = sum w_i dim_i. */
    Residue hstar_action(const std::vector<Residue>& w, const Label& y) const
    {
        std::vector<Residue> hv(nvert_, Residue(Int(0), modulus()));
        const auto& cat = hall_.root().catalog();
        for (size_t i = 0; i < nids_; ++i) {
            if (w[i].is_zero())
                continue;
            const DimVec& d = cat.dim_vec(i);
            for (size_t v = 0; v < nvert_; ++v)
                hv[v] = hv[v] + w[i] * res_int(d[v]);
        }
        return form_residue(hv, y);
    }

    std::vector<Violation> verify_star_jacobi() const
    {
        std::vector<Violation> out;
        std::vector<std::pair<std::string, StarElement>> basis;
        for (const Label& r : hall_.root().root_labels()) {
            basis.emplace_back("u[" + hall_.root().render(r) + "]", star_u(r));
            basis.emplace_back("h*[" + hall_.root().render(r) + "]", star_h(r));
        }
        for (const auto& [nx, ex] : basis)
            for (const auto& [ny, ey] : basis)
                for (const auto& [nz, ez] : basis) {
                    StarElement lhs = star_bracket(star_bracket(ex, ey), ez);
                    StarElement rhs = star_bracket(star_bracket(ex, ez), ey);
                    StarElement mid = star_bracket(ex, star_bracket(ey, ez));
                    for (const auto& [l, c] : mid.u)
                        add_star_u(rhs, l, c);
                    for (size_t i = 0; i < nids_; ++i)
                        rhs.hstar[i] = rhs.hstar[i] + mid.hstar[i];
                    if (!star_equal(lhs, rhs))
                        out.push_back({"star Jacobi fails at (" + nx + ", " +
                                       ny + ", " + nz + ")"});
                }
        return out;
    }

    /* ---- Chevalley comparison ------------------------------------------ */

    struct ChevalleyReport {
        bool ok = true;
        std::vector<std::string> issues;
        std::map<Label, int> signs; // the per-generator gauge found
        unsigned long compared = 0;
    };

    /* Asymmetry function from the quiver orientation:
     * eps(a, b) = (-1)^<a,b> with the (non-symmetrized) Euler form. */
    int epsilon(const std::vector<long>& a, const std::vector<long>& b) const
    {
        long e = euler_form(hall_.root().quiver(), a, b);
        return (e % 2 + 2) % 2 == 0 ? 1 : -1;
    }

    /* Compare the u-part structure constants against the Chevalley basis
     * oracle [E_a, E_b] = eps(a,b) E_{a+b}, [E_a, E_{-a}] = coroot(a), up
     * to a per-basis-vector sign change solved over F_2. */
    ChevalleyReport chevalley_compare() const
    {
        if (q() < 4)
            throw ConfigError("chevalley comparison needs q >= 4 so that "
                              "1 and -1 differ mod q-1");
        ChevalleyReport rep;
        auto roots = hall_.root().root_labels();
        std::map<std::vector<long>, Label> by_vec;
        std::map<Label, size_t> index;
        for (size_t i = 0; i < roots.size(); ++i) {
            by_vec[hall_.root().groth_vector(roots[i])] = roots[i];
            index[roots[i]] = i;
        }

        auto residue_unit = [&](const Residue& r) -> std::optional<int> {
            if (r.value == 1)
                return 1;
            if (r.value == r.modulus - 1)
                return -1;
            return std::nullopt;
        };

        // F2 system over one sign variable per root label
        std::vector<uint64_t> eqs;
        std::vector<int> rhs;
        auto add_eq = [&](uint64_t mask, int bit) {
            eqs.push_back(mask);
            rhs.push_back(bit);
        };

        for (const Label& r : roots) {
            for (const Label& s : roots) {
                if (r == s)
                    continue;
                auto vr = hall_.root().groth_vector(r);
                auto vs = hall_.root().groth_vector(s);
                std::vector<long> sum(vr.size());
                for (size_t i = 0; i < vr.size(); ++i)
                    sum[i] = vr[i] + vs[i];
                const LieElement& e = bracket_uu(r, s);
                ++rep.compared;
                if (s == r.shifted()) {
                    // Cartan direction: n-part must vanish, h-part is h~_r
                    if (!e.u.empty()) {
                        rep.issues.push_back("[u,u] for opposite roots has a "
                                             "nonzero n-part at " +
                                             hall_.root().render(r));
                        continue;
                    }
                    auto ht = h_tilde(r);
                    bool same = true;
                    for (size_t v = 0; v < nvert_; ++v)
                        same = same && e.h[v] == ht[v];
                    if (!same) {
                        rep.issues.push_back("Cartan part of [u_r, u_-r] is "
                                             "not h~_r at " +
                                             hall_.root().render(r));
                        continue;
                    }
                    // the Cartan normalization is pinned to +h~_r above;
                    // relative to the oracle this is the h -> -h
                    // presentation, so no gauge equation is added here
                    continue;
                }
                auto target = by_vec.find(sum);
                if (target == by_vec.end()) {
                    // sum is not a root: the bracket must vanish entirely
                    if (!e.u.empty())
                        rep.issues.push_back(
                            "bracket supported outside root sums at (" +
                            hall_.root().render(r) + ", " +
                            hall_.root().render(s) + ")");
                    continue;
                }
                bool hzero = true;
                for (const auto& c : e.h)
                    hzero = hzero && c.is_zero();
                if (!hzero) {
                    rep.issues.push_back("unexpected Cartan part at (" +
                                         hall_.root().render(r) + ", " +
                                         hall_.root().render(s) + ")");
                    continue;
                }
                if (e.u.size() != 1 || e.u.begin()->first != target->second) {
                    rep.issues.push_back("bracket at (" +
                                         hall_.root().render(r) + ", " +
                                         hall_.root().render(s) +
                                         ") is not a single root vector");
                    continue;
                }
                auto unit = residue_unit(e.u.begin()->second);
                if (!unit) {
                    rep.issues.push_back("structure constant at (" +
                                         hall_.root().render(r) + ", " +
                                         hall_.root().render(s) +
                                         ") is not a unit +-1");
                    continue;
                }
                int oracle = epsilon(vr, vs);
                int ratio = *unit * oracle; // +-1
                add_eq((1ULL << index.at(r)) | (1ULL << index.at(s)) |
                           (1ULL << index.at(target->second)),
                       ratio == 1 ? 0 : 1);
            }
        }

        // solve the F2 system
        size_t nvars = roots.size();
        std::vector<int> assign(nvars, 0);
        std::vector<std::pair<uint64_t, int>> rowsys;
        for (size_t i = 0; i < eqs.size(); ++i)
            rowsys.push_back({eqs[i], rhs[i]});
        size_t rowat = 0;
        std::vector<long> pivot_of(nvars, -1);
        for (size_t col = 0; col < nvars && rowat < rowsys.size(); ++col) {
            size_t sel = rowat;
            while (sel < rowsys.size() && !(rowsys[sel].first >> col & 1))
                ++sel;
            if (sel == rowsys.size())
                continue;
            std::swap(rowsys[sel], rowsys[rowat]);
            for (size_t i = 0; i < rowsys.size(); ++i)
                if (i != rowat && (rowsys[i].first >> col & 1)) {
                    rowsys[i].first ^= rowsys[rowat].first;
                    rowsys[i].second ^= rowsys[rowat].second;
                }
            pivot_of[col] = long(rowat);
            ++rowat;
        }
        for (size_t i = rowat; i < rowsys.size(); ++i)
            if (rowsys[i].first == 0 && rowsys[i].second) {
                rep.issues.push_back("no per-generator sign assignment "
                                     "matches the Chevalley oracle");
                break;
            }
        // Gauss-Jordan left only free columns in pivot rows; free vars = 0
        for (size_t col = 0; col < nvars; ++col)
            if (pivot_of[col] >= 0)
                assign[col] = rowsys[size_t(pivot_of[col])].second;
        for (size_t i = 0; i < roots.size(); ++i)
            rep.signs[roots[i]] = assign[i] ? -1 : 1;
        rep.ok = rep.issues.empty();
        return rep;
    }

    /* The two Hom-dimension identities behind additivity of h* on a
     * triangle M -> L -> N -> M[1]. */
    bool verify_hstar_additivity(const Label& m, const Label& l,
                                 const Label& n, const Label& z) const
    {
        const RootContext& r = hall_.root();
        long lhs1 = r.hom_dim_label(z, m) - r.hom_dim_label(z, m.shifted()) +
                    r.hom_dim_label(z, n) - r.hom_dim_label(z, n.shifted());
        long rhs1 = r.hom_dim_label(z, l) - r.hom_dim_label(z, l.shifted());
        long lhs2 = r.hom_dim_label(m, z) - r.hom_dim_label(m.shifted(), z) +
                    r.hom_dim_label(n, z) - r.hom_dim_label(n.shifted(), z);
        long rhs2 = r.hom_dim_label(l, z) - r.hom_dim_label(l.shifted(), z);
        return lhs1 == rhs1 && lhs2 == rhs2;
    }

private:
    static void add_u(LieElement& e, const Label& l, const Residue& c)
    {
        if (c.is_zero())
            return;
        auto [it, fresh] = e.u.emplace(l, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero())
                e.u.erase(it);
        }
    }

    static void add_star_u(StarElement& e, const Label& l, const Residue& c)
    {
        if (c.is_zero())
            return;
        auto [it, fresh] = e.u.emplace(l, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero())
                e.u.erase(it);
        }
    }

    const HallContext& hall_;
    size_t nvert_ = 0;
    size_t nids_ = 0;
    mutable std::mutex mu_;
    mutable std::map<std::pair<Label, Label>, LieElement> uu_;
    mutable std::unique_ptr<IntLattice> hstar_lattice_;
};

} // namespace hall2p
