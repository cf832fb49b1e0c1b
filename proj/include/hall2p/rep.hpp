#pragma once

/* Finite-dimensional representations of a Dynkin quiver over F_q: Hom/Ext
 * computations, projective covers and presentations, Krull-Schmidt
 * decomposition by Fitting splitting, and the indecomposable catalog
 * (one entry per positive root, ordered lexicographically by dimension
 * vector). */

#include <map>
#include <numeric>
#include <vector>

#include "hall2p/matrix.hpp"
#include "hall2p/quiver.hpp"

namespace hall2p {

using DimVec = std::vector<long>;

struct Rep {
    const FqField* F = nullptr;
    const Quiver* Q = nullptr;
    DimVec dim;
    std::vector<FqMatrix> mats; // per arrow, shape dim[tgt] x dim[src]

    Rep() = default;
    Rep(const FqField* f, const Quiver* q, DimVec d)
        : F(f), Q(q), dim(std::move(d))
    {
        mats.reserve(Q->arrows().size());
        for (const Arrow& a : Q->arrows())
            mats.emplace_back(F, size_t(dim[a.tgt]), size_t(dim[a.src]));
    }

    long total_dim() const
    {
        return std::accumulate(dim.begin(), dim.end(), 0L);
    }

    bool is_zero() const { return total_dim() == 0; }
};

inline Rep zero_rep(const FqField* F, const Quiver* Q)
{
    return Rep(F, Q, DimVec(Q->vertex_count(), 0));
}

inline Rep simple_rep(const FqField* F, const Quiver* Q, size_t vertex)
{
    DimVec d(Q->vertex_count(), 0);
    d[vertex] = 1;
    return Rep(F, Q, std::move(d));
}

inline Rep direct_sum(const Rep& m, const Rep& n)
{
    DimVec d(m.dim.size());
    for (size_t i = 0; i < d.size(); ++i)
        d[i] = m.dim[i] + n.dim[i];
    Rep s(m.F, m.Q, std::move(d));
    for (size_t a = 0; a < s.mats.size(); ++a) {
        s.mats[a].set_block(0, 0, m.mats[a]);
        s.mats[a].set_block(m.mats[a].rows(), m.mats[a].cols(), n.mats[a]);
    }
    return s;
}

/* Module map M -> N: one block per vertex, intertwining with the arrow
 * matrices. */
struct RepMap {
    std::vector<FqMatrix> blocks;

    bool is_zero() const
    {
        for (const auto& b : blocks)
            if (!b.is_zero())
                return false;
        return true;
    }
};

inline RepMap zero_map(const Rep& m, const Rep& n)
{
    RepMap f;
    for (size_t v = 0; v < m.dim.size(); ++v)
        f.blocks.emplace_back(m.F, size_t(n.dim[v]), size_t(m.dim[v]));
    return f;
}

inline RepMap identity_map(const Rep& m)
{
    RepMap f;
    for (size_t v = 0; v < m.dim.size(); ++v)
        f.blocks.push_back(FqMatrix::identity(m.F, size_t(m.dim[v])));
    return f;
}

/* g after f (blocks multiply vertexwise). */
inline RepMap compose(const RepMap& g, const RepMap& f)
{
    RepMap r;
    r.blocks.reserve(f.blocks.size());
    for (size_t v = 0; v < f.blocks.size(); ++v)
        r.blocks.push_back(g.blocks[v] * f.blocks[v]);
    return r;
}

inline RepMap map_add(const RepMap& a, const RepMap& b)
{
    RepMap r;
    for (size_t v = 0; v < a.blocks.size(); ++v)
        r.blocks.push_back(a.blocks[v] + b.blocks[v]);
    return r;
}

inline RepMap map_sub(const RepMap& a, const RepMap& b)
{
    RepMap r;
    for (size_t v = 0; v < a.blocks.size(); ++v)
        r.blocks.push_back(a.blocks[v] - b.blocks[v]);
    return r;
}

inline RepMap map_neg(const RepMap& a)
{
    RepMap r;
    for (const auto& b : a.blocks)
        r.blocks.push_back(-b);
    return r;
}

inline bool intertwines(const Rep& m, const Rep& n, const RepMap& f)
{
    for (size_t a = 0; a < m.Q->arrows().size(); ++a) {
        const Arrow& ar = m.Q->arrows()[a];
        if (!(n.mats[a] * f.blocks[ar.src] == f.blocks[ar.tgt] * m.mats[a]))
            return false;
    }
    return true;
}

/* Basis of Hom(M, N): kernel of the intertwining system.  Unknowns are the
 * concatenated entries of the per-vertex blocks, row-major. */
inline std::vector<RepMap> hom_basis(const Rep& m, const Rep& n)
{
    const FqField* F = m.F;
    const Quiver* Q = m.Q;
    const size_t nv = Q->vertex_count();
    std::vector<size_t> off(nv + 1, 0);
    for (size_t v = 0; v < nv; ++v)
        off[v + 1] = off[v] + size_t(n.dim[v]) * size_t(m.dim[v]);
    const size_t unknowns = off[nv];

    size_t eqs = 0;
    for (const Arrow& a : Q->arrows())
        eqs += size_t(n.dim[a.tgt]) * size_t(m.dim[a.src]);

    FqMatrix sys(F, eqs, unknowns);
    size_t row = 0;
    for (size_t ai = 0; ai < Q->arrows().size(); ++ai) {
        const Arrow& a = Q->arrows()[ai];
        const FqMatrix& Na = n.mats[ai];
        const FqMatrix& Ma = m.mats[ai];
        const size_t mi = size_t(m.dim[a.src]);
        const size_t nj = size_t(n.dim[a.tgt]);
        for (size_t r = 0; r < nj; ++r) {
            for (size_t c = 0; c < mi; ++c) {
                // (Na phi_src)(r,c) - (phi_tgt Ma)(r,c) = 0
                for (size_t s = 0; s < size_t(n.dim[a.src]); ++s)
                    if (Na.at(r, s) != 0)
                        sys.at(row, off[a.src] + s * mi + c) = Na.at(r, s);
                for (size_t t = 0; t < size_t(m.dim[a.tgt]); ++t)
                    if (Ma.at(t, c) != 0)
                        sys.at(row, off[a.tgt] + r * size_t(m.dim[a.tgt]) + t) =
                            F->sub(sys.at(row, off[a.tgt] + r * size_t(m.dim[a.tgt]) + t),
                                   Ma.at(t, c));
                ++row;
            }
        }
    }

    FqMatrix K = kernel_rows(sys);
    std::vector<RepMap> basis;
    basis.reserve(K.rows());
    for (size_t i = 0; i < K.rows(); ++i) {
        RepMap f = zero_map(m, n);
        for (size_t v = 0; v < nv; ++v)
            for (size_t r = 0; r < size_t(n.dim[v]); ++r)
                for (size_t c = 0; c < size_t(m.dim[v]); ++c)
                    f.blocks[v].at(r, c) = K.at(i, off[v] + r * size_t(m.dim[v]) + c);
        basis.push_back(std::move(f));
    }
    return basis;
}

inline size_t hom_dim(const Rep& m, const Rep& n)
{
    return hom_basis(m, n).size();
}

/* dim Ext^1(M,N) = dim Hom(M,N) - <dim M, dim N> (hereditary). */
inline long ext1_dim(const Rep& m, const Rep& n)
{
    long e = long(hom_dim(m, n)) - euler_form(*m.Q, m.dim, n.dim);
    if (e < 0)
        throw Error("negative Ext dimension; Euler form inconsistency");
    return e;
}

/* Indecomposable projective P(i): one-dimensional at every vertex reachable
 * from i, with identity arrow maps along the unique paths. */
inline Rep projective_rep(const FqField* F, const Quiver* Q, size_t i)
{
    DimVec d(Q->vertex_count(), 0);
    for (size_t j = 0; j < Q->vertex_count(); ++j)
        if (Q->path(i, j))
            d[j] = 1;
    Rep p(F, Q, std::move(d));
    for (size_t a = 0; a < Q->arrows().size(); ++a) {
        const Arrow& ar = Q->arrows()[a];
        if (p.dim[ar.src] == 1 && p.dim[ar.tgt] == 1)
            p.mats[a].at(0, 0) = 1;
    }
    return p;
}

inline Rep sum_of_projectives(const FqField* F, const Quiver* Q,
                              const std::vector<size_t>& vertices)
{
    Rep s = zero_rep(F, Q);
    for (size_t v : vertices)
        s = direct_sum(s, projective_rep(F, Q, v));
    return s;
}

/* Apply the composite of arrow maps along the unique path i -> j to a
 * column vector living at vertex i. */
inline std::vector<Fq> apply_path(const Rep& m, size_t i, size_t j,
                                  const std::vector<Fq>& v)
{
    auto p = m.Q->path(i, j);
    if (!p)
        throw Error("no path between vertices");
    std::vector<Fq> cur = v;
    size_t at = i;
    for (size_t a : *p) {
        const FqMatrix& mat = m.mats[a];
        std::vector<Fq> next(mat.rows(), 0);
        for (size_t r = 0; r < mat.rows(); ++r)
            for (size_t c = 0; c < mat.cols(); ++c)
                if (mat.at(r, c) != 0 && cur[c] != 0)
                    next[r] = m.F->add(next[r], m.F->mul(mat.at(r, c), cur[c]));
        cur = std::move(next);
        at = m.Q->arrows()[a].tgt;
    }
    (void)at;
    return cur;
}

/* Radical at each vertex = sum of images of incoming arrow maps; returns a
 * row basis per vertex. */
inline std::vector<FqMatrix> radical_rows(const Rep& m)
{
    std::vector<FqMatrix> rad;
    for (size_t v = 0; v < m.dim.size(); ++v) {
        FqMatrix gen(m.F, 0, size_t(m.dim[v]));
        for (size_t a = 0; a < m.Q->arrows().size(); ++a)
            if (m.Q->arrows()[a].tgt == v)
                gen = vconcat(gen, m.mats[a].transposed());
        RrefResult r = rref(gen);
        rad.push_back(r.mat.submatrix(0, r.rank, 0, size_t(m.dim[v])));
    }
    return rad;
}

struct ProjectiveCover {
    std::vector<size_t> summands; // projective vertices, one per summand
    Rep p;                        // the direct sum
    RepMap pi;                    // surjection p -> M
};

/* Projective cover: one summand P(j) per top basis vector over j, mapped by
 * pushing the chosen lift along paths. */
inline ProjectiveCover projective_cover(const Rep& m)
{
    const FqField* F = m.F;
    const Quiver* Q = m.Q;
    auto rad = radical_rows(m);

    ProjectiveCover pc;
    std::vector<std::pair<size_t, std::vector<Fq>>> lifts; // (vertex, vector)
    for (size_t v = 0; v < Q->vertex_count(); ++v) {
        // complement of the radical row space: standard basis vectors at
        // non-pivot columns
        RrefResult r = rref(rad[v]);
        std::vector<bool> piv(size_t(m.dim[v]), false);
        for (size_t p : r.pivots)
            piv[p] = true;
        for (size_t c = 0; c < size_t(m.dim[v]); ++c) {
            if (piv[c])
                continue;
            std::vector<Fq> lift(size_t(m.dim[v]), 0);
            lift[c] = 1;
            pc.summands.push_back(v);
            lifts.emplace_back(v, std::move(lift));
        }
    }
    pc.p = sum_of_projectives(F, Q, pc.summands);
    pc.pi = zero_map(pc.p, m);

    // column offset of each summand at each vertex
    std::vector<size_t> col(Q->vertex_count(), 0);
    for (size_t s = 0; s < pc.summands.size(); ++s) {
        Rep pj = projective_rep(F, Q, pc.summands[s]);
        for (size_t w = 0; w < Q->vertex_count(); ++w) {
            if (pj.dim[w] == 0)
                continue;
            std::vector<Fq> img = apply_path(m, lifts[s].first, w, lifts[s].second);
            for (size_t r = 0; r < img.size(); ++r)
                pc.pi.blocks[w].at(r, col[w]) = img[r];
            ++col[w];
        }
    }
    return pc;
}

/* Subrepresentation spanned by given per-vertex row bases (assumed closed
 * under the arrow maps); returns the rep and the inclusion. */
inline std::pair<Rep, RepMap> subrep_from_rows(const Rep& m,
                                               const std::vector<FqMatrix>& rows)
{
    DimVec d(m.dim.size());
    for (size_t v = 0; v < d.size(); ++v)
        d[v] = long(rows[v].rows());
    Rep sub(m.F, m.Q, std::move(d));
    for (size_t a = 0; a < m.Q->arrows().size(); ++a) {
        const Arrow& ar = m.Q->arrows()[a];
        // coordinates of M_a * (basis of src) in the basis of tgt
        LinSolver solver(rows[ar.tgt].transposed());
        for (size_t c = 0; c < size_t(sub.dim[ar.src]); ++c) {
            std::vector<Fq> v(size_t(m.dim[ar.src]));
            for (size_t j = 0; j < v.size(); ++j)
                v[j] = rows[ar.src].at(c, j);
            std::vector<Fq> img(size_t(m.dim[ar.tgt]), 0);
            for (size_t r = 0; r < img.size(); ++r)
                for (size_t j = 0; j < v.size(); ++j)
                    if (m.mats[a].at(r, j) != 0 && v[j] != 0)
                        img[r] = m.F->add(img[r], m.F->mul(m.mats[a].at(r, j), v[j]));
            auto coords = solver.solve(img);
            if (!coords)
                throw Error("subspace rows are not arrow-closed");
            for (size_t r = 0; r < size_t(sub.dim[ar.tgt]); ++r)
                sub.mats[a].at(r, c) = (*coords)[r];
        }
    }
    RepMap incl = zero_map(sub, m);
    for (size_t v = 0; v < m.dim.size(); ++v)
        incl.blocks[v] = rows[v].transposed();
    return {std::move(sub), std::move(incl)};
}

struct Presentation {
    std::vector<size_t> p1_summands;
    std::vector<size_t> p0_summands;
    Rep p1, p0;
    RepMap d;  // injective map p1 -> p0 with cokernel M
    RepMap pi; // p0 -> M
};

/* Minimal projective presentation 0 -> P1 -> P0 -> M -> 0 (hereditary, so
 * the kernel of the cover is projective and equal to its own cover). */
inline Presentation projective_presentation(const Rep& m)
{
    Presentation pr;
    ProjectiveCover cover = projective_cover(m);
    pr.p0_summands = cover.summands;
    pr.p0 = cover.p;
    pr.pi = cover.pi;

    std::vector<FqMatrix> ker;
    for (size_t v = 0; v < m.dim.size(); ++v)
        ker.push_back(kernel_rows(cover.pi.blocks[v]));
    auto [krep, incl] = subrep_from_rows(pr.p0, ker);

    ProjectiveCover kcover = projective_cover(krep);
    if (kcover.p.total_dim() != krep.total_dim())
        throw Error("kernel of projective cover is not projective");
    pr.p1_summands = kcover.summands;
    pr.p1 = kcover.p;
    pr.d = compose(incl, kcover.pi);
    return pr;
}

/* Fitting splitting: for phi in End(M), M = ker(phi^N) + im(phi^N) with
 * N = dim M; splits whenever phi is neither nilpotent nor invertible. */
inline bool fitting_split(const Rep& m, const std::vector<RepMap>& endo,
                          const std::vector<Fq>& coeffs, Rep& out1, Rep& out2)
{
    RepMap phi = zero_map(m, m);
    for (size_t i = 0; i < endo.size(); ++i)
        if (coeffs[i] != 0)
            for (size_t v = 0; v < phi.blocks.size(); ++v)
                phi.blocks[v] = phi.blocks[v] + endo[i].blocks[v].scaled(coeffs[i]);

    long n = m.total_dim();
    RepMap pw = phi;
    long e = 1;
    while (e < n) { // pw = phi^e with e >= total dim after the loop
        pw = compose(pw, pw);
        e *= 2;
    }
    long rk = 0;
    for (const auto& b : pw.blocks)
        rk += long(rank(b));
    if (rk == 0 || rk == n)
        return false;

    std::vector<FqMatrix> kerrows, imrows;
    for (const auto& b : pw.blocks) {
        kerrows.push_back(kernel_rows(b));
        RrefResult r = rref(b.transposed());
        imrows.push_back(r.mat.submatrix(0, r.rank, 0, b.rows()));
    }
    out1 = subrep_from_rows(m, kerrows).first;
    out2 = subrep_from_rows(m, imrows).first;
    return true;
}

inline bool try_split(const Rep& m, Rep& out1, Rep& out2, long guard)
{
    auto endo = hom_basis(m, m);
    if (endo.size() <= 1)
        return false;
    // single basis elements almost always suffice
    for (size_t i = 0; i < endo.size(); ++i) {
        std::vector<Fq> c(endo.size(), 0);
        c[i] = 1;
        if (fitting_split(m, endo, c, out1, out2))
            return true;
    }
    SpaceEnumerator en(m.F, endo.size(), guard);
    for (unsigned long idx = 0; idx < en.size(); ++idx) {
        auto c = en.coefficients(idx);
        if (fitting_split(m, endo, c, out1, out2))
            return true;
    }
    return false;
}

/* Certified: either End(M) is one-dimensional, or an exhaustive Fitting
 * scan over End(M) finds no splitting endomorphism (a projection onto a
 * proper summand would be one). */
inline bool is_indecomposable(const Rep& m, long guard = kDefaultGuard)
{
    if (m.is_zero())
        return false;
    if (hom_dim(m, m) == 1)
        return true;
    Rep a, b;
    return !try_split(m, a, b, guard);
}

/* Indecomposable catalog: exactly the positive roots of the Dynkin type
 * (vectors with Tits form 1), each realized by the first indecomposable
 * representation in enumeration order. */
class ModuleCatalog {
public:
    ModuleCatalog(const FqField* F, const Quiver* Q, long guard = kDefaultGuard)
        : F_(F), Q_(Q)
    {
        std::vector<DimVec> roots = positive_roots(*Q);
        for (const DimVec& d : roots) {
            reps_.push_back(find_indecomposable(d, guard));
            index_[d] = reps_.size() - 1;
        }
    }

    const FqField* field() const { return F_; }
    const Quiver* quiver() const { return Q_; }
    size_t size() const { return reps_.size(); }
    const Rep& rep(size_t id) const { return reps_[id]; }
    const DimVec& dim_vec(size_t id) const { return reps_[id].dim; }

    std::optional<size_t> id_of_dim(const DimVec& d) const
    {
        auto it = index_.find(d);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    static std::vector<DimVec> positive_roots(const Quiver& q)
    {
        // positive roots = nonzero nonnegative vectors with Tits form 1;
        // component bound 1/2/6 by family
        const size_t n = q.vertex_count();
        std::vector<DimVec> roots;
        DimVec d(n, 0);
        const char fam = q.dynkin_type()[0];
        const long maxc = fam == 'A' ? 1 : fam == 'D' ? 2 : 6;
        while (true) {
            size_t i = 0;
            while (i < n && d[i] == maxc) {
                d[i] = 0;
                ++i;
            }
            if (i == n)
                break;
            ++d[i];
            if (euler_form(q, d, d) == 1)
                roots.push_back(d);
        }
        std::sort(roots.begin(), roots.end());
        return roots;
    }

private:
    Rep find_indecomposable(const DimVec& d, long guard) const
    {
        size_t entries = 0;
        for (const Arrow& a : Q_->arrows())
            entries += size_t(d[a.tgt]) * size_t(d[a.src]);
        SpaceEnumerator en(F_, entries, guard);
        for (unsigned long idx = 0; idx < en.size(); ++idx) {
            auto c = en.coefficients(idx);
            Rep m(F_, Q_, d);
            size_t k = 0;
            for (auto& mat : m.mats)
                for (size_t r = 0; r < mat.rows(); ++r)
                    for (size_t col = 0; col < mat.cols(); ++col)
                        mat.at(r, col) = c[k++];
            if (is_indecomposable(m, guard))
                return m;
        }
        throw Error("no indecomposable representation found for a root");
    }

    const FqField* F_;
    const Quiver* Q_;
    std::vector<Rep> reps_;
    std::map<DimVec, size_t> index_;
};

/* Krull-Schmidt decomposition as a sorted list of catalog ids. */
inline void decompose_into(const Rep& m, const ModuleCatalog& cat,
                           std::vector<size_t>& out, long guard)
{
    if (m.is_zero())
        return;
    Rep a, b;
    if (hom_dim(m, m) == 1 || !try_split(m, a, b, guard)) {
        auto id = cat.id_of_dim(m.dim);
        if (!id)
            throw Error("indecomposable dimension vector is not a positive root");
        out.push_back(*id);
        return;
    }
    decompose_into(a, cat, out, guard);
    decompose_into(b, cat, out, guard);
}

inline std::vector<size_t> decompose(const Rep& m, const ModuleCatalog& cat,
                                     long guard = kDefaultGuard)
{
    std::vector<size_t> out;
    decompose_into(m, cat, out, guard);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool module_iso(const Rep& m, const Rep& n, const ModuleCatalog& cat,
                       long guard = kDefaultGuard)
{
    if (m.dim != n.dim)
        return false;
    return decompose(m, cat, guard) == decompose(n, cat, guard);
}

} // namespace hall2p
