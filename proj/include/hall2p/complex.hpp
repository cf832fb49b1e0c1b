#pragma once

/* 2-periodic complexes of projectives (P0, P1, d0, d1) with both composites
 * zero, and their homotopy category: chain maps modulo homotopy, mapping
 * cones, homology.  A chain map class is invertible iff it induces
 * isomorphisms on both homologies (the cone then has zero homology, so it
 * vanishes), which keeps invertibility a rank computation. */

#include <array>
#include <memory>

#include "hall2p/rep.hpp"

namespace hall2p {

struct PComplex {
    const FqField* F = nullptr;
    const Quiver* Q = nullptr;
    std::vector<size_t> sum0, sum1; // projective summand vertices of P0, P1
    Rep p0, p1;
    RepMap d0; // p0 -> p1
    RepMap d1; // p1 -> p0
};

inline PComplex complex_from_summands(const FqField* F, const Quiver* Q,
                                      std::vector<size_t> s0,
                                      std::vector<size_t> s1)
{
    PComplex x;
    x.F = F;
    x.Q = Q;
    x.sum0 = std::move(s0);
    x.sum1 = std::move(s1);
    x.p0 = sum_of_projectives(F, Q, x.sum0);
    x.p1 = sum_of_projectives(F, Q, x.sum1);
    x.d0 = zero_map(x.p0, x.p1);
    x.d1 = zero_map(x.p1, x.p0);
    return x;
}

inline PComplex zero_complex(const FqField* F, const Quiver* Q)
{
    return complex_from_summands(F, Q, {}, {});
}

inline bool complex_valid(const PComplex& x)
{
    if (!intertwines(x.p0, x.p1, x.d0) || !intertwines(x.p1, x.p0, x.d1))
        return false;
    return compose(x.d1, x.d0).is_zero() && compose(x.d0, x.d1).is_zero();
}

/* Fold a module into the category: P0/P1 from the minimal projective
 * presentation, d1 the inclusion, d0 = 0.  Homology is (M, 0). */
inline PComplex from_module(const Rep& m)
{
    Presentation pr = projective_presentation(m);
    PComplex x;
    x.F = m.F;
    x.Q = m.Q;
    x.sum0 = pr.p0_summands;
    x.sum1 = pr.p1_summands;
    x.p0 = pr.p0;
    x.p1 = pr.p1;
    x.d1 = pr.d;
    x.d0 = zero_map(x.p0, x.p1);
    return x;
}

/* Components swapped, both differentials negated; shift(shift(X)) is X on
 * the nose. */
inline PComplex shift(const PComplex& x)
{
    PComplex y;
    y.F = x.F;
    y.Q = x.Q;
    y.sum0 = x.sum1;
    y.sum1 = x.sum0;
    y.p0 = x.p1;
    y.p1 = x.p0;
    y.d0 = map_neg(x.d1);
    y.d1 = map_neg(x.d0);
    return y;
}

inline PComplex direct_sum(const PComplex& a, const PComplex& b)
{
    PComplex s;
    s.F = a.F;
    s.Q = a.Q;
    s.sum0 = a.sum0;
    s.sum0.insert(s.sum0.end(), b.sum0.begin(), b.sum0.end());
    s.sum1 = a.sum1;
    s.sum1.insert(s.sum1.end(), b.sum1.begin(), b.sum1.end());
    s.p0 = direct_sum(a.p0, b.p0);
    s.p1 = direct_sum(a.p1, b.p1);
    s.d0 = zero_map(s.p0, s.p1);
    s.d1 = zero_map(s.p1, s.p0);
    for (size_t v = 0; v < s.p0.dim.size(); ++v) {
        s.d0.blocks[v].set_block(0, 0, a.d0.blocks[v]);
        s.d0.blocks[v].set_block(a.d0.blocks[v].rows(), a.d0.blocks[v].cols(),
                                 b.d0.blocks[v]);
        s.d1.blocks[v].set_block(0, 0, a.d1.blocks[v]);
        s.d1.blocks[v].set_block(a.d1.blocks[v].rows(), a.d1.blocks[v].cols(),
                                 b.d1.blocks[v]);
    }
    return s;
}

/* Chain map X -> Y: s0: X.p0 -> Y.p0 and s1: X.p1 -> Y.p1 commuting with
 * the differentials. */
struct ChainMap {
    RepMap s0, s1;
};

inline ChainMap zero_chain(const PComplex& x, const PComplex& y)
{
    return {zero_map(x.p0, y.p0), zero_map(x.p1, y.p1)};
}

inline ChainMap identity_chain(const PComplex& x)
{
    return {identity_map(x.p0), identity_map(x.p1)};
}

inline ChainMap compose(const ChainMap& g, const ChainMap& f)
{
    return {compose(g.s0, f.s0), compose(g.s1, f.s1)};
}

inline ChainMap chain_add(const ChainMap& a, const ChainMap& b)
{
    return {map_add(a.s0, b.s0), map_add(a.s1, b.s1)};
}

inline ChainMap chain_sub(const ChainMap& a, const ChainMap& b)
{
    return {map_sub(a.s0, b.s0), map_sub(a.s1, b.s1)};
}

inline ChainMap chain_neg(const ChainMap& a)
{
    return {map_neg(a.s0), map_neg(a.s1)};
}

/* Chain map for the shifted complexes: f[1] has s0 = f.s1, s1 = f.s0. */
inline ChainMap shift_chain(const ChainMap& f)
{
    return {f.s1, f.s0};
}

inline bool is_chain_map(const PComplex& x, const PComplex& y, const ChainMap& f)
{
    if (!intertwines(x.p0, y.p0, f.s0) || !intertwines(x.p1, y.p1, f.s1))
        return false;
    RepMap a = map_sub(compose(y.d0, f.s0), compose(f.s1, x.d0));
    RepMap b = map_sub(compose(y.d1, f.s1), compose(f.s0, x.d1));
    return a.is_zero() && b.is_zero();
}

struct ConeTriangle {
    PComplex c;    // cone of f: X -> Y
    ChainMap incl; // Y -> c
    ChainMap proj; // c -> X[1]
};

/* Standard 2-periodic mapping cone, sign convention [[d_Y, f], [0, -d_X]]
 * frozen: C_i = Y_i + X_{i+1}. */
inline ConeTriangle cone(const PComplex& x, const PComplex& y, const ChainMap& f)
{
    ConeTriangle t;
    std::vector<size_t> s0 = y.sum0;
    s0.insert(s0.end(), x.sum1.begin(), x.sum1.end());
    std::vector<size_t> s1 = y.sum1;
    s1.insert(s1.end(), x.sum0.begin(), x.sum0.end());
    t.c = complex_from_summands(x.F, x.Q, std::move(s0), std::move(s1));
    for (size_t v = 0; v < x.p0.dim.size(); ++v) {
        // d0: (y0, x1) -> (dY y0 + f1 x1, -dX x1)
        t.c.d0.blocks[v].set_block(0, 0, y.d0.blocks[v]);
        t.c.d0.blocks[v].set_block(0, y.d0.blocks[v].cols(), f.s1.blocks[v]);
        t.c.d0.blocks[v].set_block(y.d0.blocks[v].rows(), y.d0.blocks[v].cols(),
                                   -x.d1.blocks[v]);
        // d1: (y1, x0) -> (dY y1 + f0 x0, -dX x0)
        t.c.d1.blocks[v].set_block(0, 0, y.d1.blocks[v]);
        t.c.d1.blocks[v].set_block(0, y.d1.blocks[v].cols(), f.s0.blocks[v]);
        t.c.d1.blocks[v].set_block(y.d1.blocks[v].rows(), y.d1.blocks[v].cols(),
                                   -x.d0.blocks[v]);
    }
    t.incl = zero_chain(y, t.c);
    for (size_t v = 0; v < y.p0.dim.size(); ++v) {
        t.incl.s0.blocks[v].set_block(0, 0,
            FqMatrix::identity(x.F, size_t(y.p0.dim[v])));
        t.incl.s1.blocks[v].set_block(0, 0,
            FqMatrix::identity(x.F, size_t(y.p1.dim[v])));
    }
    PComplex xs = shift(x);
    t.proj = zero_chain(t.c, xs);
    for (size_t v = 0; v < x.p0.dim.size(); ++v) {
        t.proj.s0.blocks[v].set_block(0, size_t(y.p0.dim[v]),
            FqMatrix::identity(x.F, size_t(x.p1.dim[v])));
        t.proj.s1.blocks[v].set_block(0, size_t(y.p1.dim[v]),
            FqMatrix::identity(x.F, size_t(x.p0.dim[v])));
    }
    return t;
}

/* Hom(X, Y) in the homotopy category: the chain-map solution space modulo
 * the homotopy image, with deterministic coset representatives from the
 * pivot-complement of the homotopy subspace. */
class HomSpace {
public:
    HomSpace(const PComplex& x, const PComplex& y) : x_(&x), y_(&y)
    {
        const FqField* F = x.F;
        const size_t nv = x.p0.dim.size();
        off0_.assign(nv + 1, 0);
        for (size_t v = 0; v < nv; ++v)
            off0_[v + 1] = off0_[v] +
                size_t(y.p0.dim[v]) * size_t(x.p0.dim[v]);
        off1_.assign(nv + 1, 0);
        off1_[0] = off0_[nv];
        for (size_t v = 0; v < nv; ++v)
            off1_[v + 1] = off1_[v] +
                size_t(y.p1.dim[v]) * size_t(x.p1.dim[v]);
        ambient_ = off1_[nv];

        // chain-map equations
        size_t eqs = 0;
        for (const Arrow& a : x.Q->arrows()) {
            eqs += size_t(y.p0.dim[a.tgt]) * size_t(x.p0.dim[a.src]);
            eqs += size_t(y.p1.dim[a.tgt]) * size_t(x.p1.dim[a.src]);
        }
        for (size_t v = 0; v < nv; ++v) {
            eqs += size_t(y.p1.dim[v]) * size_t(x.p0.dim[v]);
            eqs += size_t(y.p0.dim[v]) * size_t(x.p1.dim[v]);
        }
        FqMatrix sys(F, eqs, ambient_);
        size_t row = 0;
        // A U1 - U2 B = 0 contributed at the given row block
        auto emit = [&](const FqMatrix& A, size_t offU1, size_t colsU1,
                        const FqMatrix& B, size_t offU2, size_t colsU2) {
            for (size_t r = 0; r < A.rows(); ++r) {
                for (size_t c = 0; c < B.cols(); ++c) {
                    for (size_t s = 0; s < A.cols(); ++s)
                        if (A.at(r, s) != 0)
                            sys.at(row, offU1 + s * colsU1 + c) =
                                F->add(sys.at(row, offU1 + s * colsU1 + c),
                                       A.at(r, s));
                    for (size_t t = 0; t < B.rows(); ++t)
                        if (B.at(t, c) != 0)
                            sys.at(row, offU2 + r * colsU2 + t) =
                                F->sub(sys.at(row, offU2 + r * colsU2 + t),
                                       B.at(t, c));
                    ++row;
                }
            }
        };
        // s0, s1 are module maps
        for (size_t ai = 0; ai < x.Q->arrows().size(); ++ai) {
            const Arrow& a = x.Q->arrows()[ai];
            emit(y.p0.mats[ai], off0_[a.src], size_t(x.p0.dim[a.src]),
                 x.p0.mats[ai], off0_[a.tgt], size_t(x.p0.dim[a.tgt]));
            emit(y.p1.mats[ai], off1_[a.src], size_t(x.p1.dim[a.src]),
                 x.p1.mats[ai], off1_[a.tgt], size_t(x.p1.dim[a.tgt]));
        }
        // squares with the differentials
        for (size_t v = 0; v < nv; ++v) {
            emit(y.d0.blocks[v], off0_[v], size_t(x.p0.dim[v]),
                 x.d0.blocks[v], off1_[v], size_t(x.p1.dim[v]));
            emit(y.d1.blocks[v], off1_[v], size_t(x.p1.dim[v]),
                 x.d1.blocks[v], off0_[v], size_t(x.p0.dim[v]));
        }
        FqMatrix z = kernel_rows(sys);

        // homotopy image: (dY h0 + h1 dX, dY h1 + h0 dX) over module maps
        // h0: X.p0 -> Y.p1, h1: X.p1 -> Y.p0
        std::vector<std::vector<Fq>> brows;
        for (const RepMap& h0 : hom_basis(x.p0, y.p1)) {
            ChainMap b;
            b.s0 = compose(y.d1, h0);
            RepMap s1 = zero_map(x.p1, y.p1);
            for (size_t v = 0; v < nv; ++v)
                s1.blocks[v] = h0.blocks[v] * x.d1.blocks[v];
            b.s1 = s1;
            brows.push_back(pack(b));
        }
        for (const RepMap& h1 : hom_basis(x.p1, y.p0)) {
            ChainMap b;
            RepMap s0 = zero_map(x.p0, y.p0);
            for (size_t v = 0; v < nv; ++v)
                s0.blocks[v] = h1.blocks[v] * x.d0.blocks[v];
            b.s0 = s0;
            b.s1 = compose(y.d0, h1);
            brows.push_back(pack(b));
        }
        FqMatrix bmat(F, brows.size(), ambient_);
        for (size_t i = 0; i < brows.size(); ++i)
            for (size_t j = 0; j < ambient_; ++j)
                bmat.at(i, j) = brows[i][j];
        RrefResult br = rref(bmat);
        bbasis_ = br.mat.submatrix(0, br.rank, 0, ambient_);

        // complement of the homotopy image inside the chain-map space
        comp_ = FqMatrix(F, 0, ambient_);
        FqMatrix work = bbasis_;
        size_t wrank = br.rank;
        for (size_t i = 0; i < z.rows(); ++i) {
            FqMatrix cand = vconcat(work, z.submatrix(i, i + 1, 0, ambient_));
            RrefResult cr = rref(cand);
            if (cr.rank > wrank) {
                comp_ = vconcat(comp_, z.submatrix(i, i + 1, 0, ambient_));
                work = cr.mat.submatrix(0, cr.rank, 0, ambient_);
                wrank = cr.rank;
            }
        }
        solver_ = std::make_unique<LinSolver>(
            vconcat(bbasis_, comp_).transposed());
    }

    const PComplex& source() const { return *x_; }
    const PComplex& target() const { return *y_; }
    size_t dim() const { return comp_.rows(); }
    const FqMatrix& boundary_basis() const { return bbasis_; }

    ChainMap boundary_rep(size_t i) const
    {
        std::vector<Fq> v(bbasis_.cols());
        for (size_t j = 0; j < v.size(); ++j)
            v[j] = bbasis_.at(i, j);
        return unpack(v);
    }

    std::vector<Fq> pack(const ChainMap& f) const
    {
        std::vector<Fq> v(ambient_, 0);
        const size_t nv = x_->p0.dim.size();
        for (size_t w = 0; w < nv; ++w) {
            const FqMatrix& b0 = f.s0.blocks[w];
            for (size_t r = 0; r < b0.rows(); ++r)
                for (size_t c = 0; c < b0.cols(); ++c)
                    v[off0_[w] + r * b0.cols() + c] = b0.at(r, c);
            const FqMatrix& b1 = f.s1.blocks[w];
            for (size_t r = 0; r < b1.rows(); ++r)
                for (size_t c = 0; c < b1.cols(); ++c)
                    v[off1_[w] + r * b1.cols() + c] = b1.at(r, c);
        }
        return v;
    }

    ChainMap unpack(const std::vector<Fq>& v) const
    {
        ChainMap f = zero_chain(*x_, *y_);
        const size_t nv = x_->p0.dim.size();
        for (size_t w = 0; w < nv; ++w) {
            FqMatrix& b0 = f.s0.blocks[w];
            for (size_t r = 0; r < b0.rows(); ++r)
                for (size_t c = 0; c < b0.cols(); ++c)
                    b0.at(r, c) = v[off0_[w] + r * b0.cols() + c];
            FqMatrix& b1 = f.s1.blocks[w];
            for (size_t r = 0; r < b1.rows(); ++r)
                for (size_t c = 0; c < b1.cols(); ++c)
                    b1.at(r, c) = v[off1_[w] + r * b1.cols() + c];
        }
        return f;
    }

    /* Coordinates of [f] over the complement basis. */
    std::vector<Fq> class_coords(const ChainMap& f) const
    {
        auto sol = solver_->solve(pack(f));
        if (!sol)
            throw Error("chain map does not lie in the chain-map space");
        return std::vector<Fq>(sol->begin() + long(bbasis_.rows()), sol->end());
    }

    /* Canonical representative of the class with the given coordinates. */
    ChainMap rep(const std::vector<Fq>& coords) const
    {
        return unpack(lin_comb(x_->F, comp_, coords));
    }

    ChainMap canonical(const ChainMap& f) const { return rep(class_coords(f)); }

    bool class_is_zero(const ChainMap& f) const
    {
        for (Fq c : class_coords(f))
            if (c != 0)
                return false;
        return true;
    }

private:
    const PComplex* x_;
    const PComplex* y_;
    std::vector<size_t> off0_, off1_;
    size_t ambient_ = 0;
    FqMatrix bbasis_, comp_;
    std::unique_ptr<LinSolver> solver_;
};

/* Homology of a 2-periodic complex, one side per parity, as quiver
 * representations with coordinate solvers for induced maps. */
struct HomologySide {
    Rep rep;
    std::vector<FqMatrix> irows;  // image rows per vertex
    std::vector<FqMatrix> qrows;  // quotient representative rows per vertex
    std::vector<LinSolver> solvers; // solves [irows; qrows]^T c = v
};

inline HomologySide homology_side(const Rep& space, const RepMap& d_out,
                                  const RepMap& d_in)
{
    const FqField* F = space.F;
    HomologySide h;
    DimVec dims(space.dim.size(), 0);
    for (size_t v = 0; v < space.dim.size(); ++v) {
        FqMatrix K = kernel_rows(d_out.blocks[v]);
        RrefResult ir = rref(d_in.blocks[v].transposed());
        FqMatrix I = ir.mat.submatrix(0, ir.rank, 0, size_t(space.dim[v]));
        FqMatrix quot(F, 0, size_t(space.dim[v]));
        FqMatrix work = I;
        size_t wrank = ir.rank;
        for (size_t i = 0; i < K.rows(); ++i) {
            FqMatrix cand = vconcat(work, K.submatrix(i, i + 1, 0, K.cols()));
            RrefResult cr = rref(cand);
            if (cr.rank > wrank) {
                quot = vconcat(quot, K.submatrix(i, i + 1, 0, K.cols()));
                work = cr.mat.submatrix(0, cr.rank, 0, K.cols());
                wrank = cr.rank;
            }
        }
        h.irows.push_back(I);
        h.qrows.push_back(quot);
        dims[v] = long(quot.rows());
    }
    h.rep = Rep(F, space.Q, dims);
    for (size_t v = 0; v < space.dim.size(); ++v)
        h.solvers.emplace_back(vconcat(h.irows[v], h.qrows[v]).transposed());
    // induced arrow maps
    for (size_t a = 0; a < space.Q->arrows().size(); ++a) {
        const Arrow& ar = space.Q->arrows()[a];
        for (size_t c = 0; c < size_t(h.rep.dim[ar.src]); ++c) {
            std::vector<Fq> u(size_t(space.dim[ar.src]));
            for (size_t j = 0; j < u.size(); ++j)
                u[j] = h.qrows[ar.src].at(c, j);
            std::vector<Fq> w(size_t(space.dim[ar.tgt]), 0);
            for (size_t r = 0; r < w.size(); ++r)
                for (size_t j = 0; j < u.size(); ++j)
                    if (space.mats[a].at(r, j) != 0 && u[j] != 0)
                        w[r] = F->add(w[r], F->mul(space.mats[a].at(r, j), u[j]));
            auto sol = h.solvers[ar.tgt].solve(w);
            if (!sol)
                throw Error("homology arrow image escapes the kernel");
            for (size_t r = 0; r < size_t(h.rep.dim[ar.tgt]); ++r)
                h.rep.mats[a].at(r, c) = (*sol)[h.irows[ar.tgt].rows() + r];
        }
    }
    return h;
}

struct Homology {
    HomologySide h0, h1;
};

inline Homology homology(const PComplex& x)
{
    return {homology_side(x.p0, x.d0, x.d1), homology_side(x.p1, x.d1, x.d0)};
}

/* Map induced by a chain map on one homology side. */
inline RepMap induced_map(const ChainMap& f, const HomologySide& hx,
                          const HomologySide& hy, int parity)
{
    const Rep& xrep = hx.rep;
    const FqField* F = xrep.F;
    RepMap m = zero_map(hx.rep, hy.rep);
    for (size_t v = 0; v < xrep.dim.size(); ++v) {
        const FqMatrix& block = parity == 0 ? f.s0.blocks[v] : f.s1.blocks[v];
        for (size_t c = 0; c < size_t(hx.rep.dim[v]); ++c) {
            std::vector<Fq> u(hx.qrows[v].cols());
            for (size_t j = 0; j < u.size(); ++j)
                u[j] = hx.qrows[v].at(c, j);
            std::vector<Fq> w(block.rows(), 0);
            for (size_t r = 0; r < w.size(); ++r)
                for (size_t j = 0; j < u.size(); ++j)
                    if (block.at(r, j) != 0 && u[j] != 0)
                        w[r] = F->add(w[r], F->mul(block.at(r, j), u[j]));
            auto sol = hy.solvers[v].solve(w);
            if (!sol)
                throw Error("induced image escapes the target kernel");
            for (size_t r = 0; r < size_t(hy.rep.dim[v]); ++r)
                m.blocks[v].at(r, c) = (*sol)[hy.irows[v].rows() + r];
        }
    }
    return m;
}

/* Invertibility in the homotopy category: isomorphisms on both homologies. */
inline bool is_homotopy_iso(const ChainMap& f, const Homology& hx,
                            const Homology& hy)
{
    if (hx.h0.rep.dim != hy.h0.rep.dim || hx.h1.rep.dim != hy.h1.rep.dim)
        return false;
    RepMap m0 = induced_map(f, hx.h0, hy.h0, 0);
    for (const auto& b : m0.blocks)
        if (rank(b) != b.rows())
            return false;
    RepMap m1 = induced_map(f, hx.h1, hy.h1, 1);
    for (const auto& b : m1.blocks)
        if (rank(b) != b.rows())
            return false;
    return true;
}

} // namespace hall2p
