#pragma once

/* The root category: objects of the homotopy category of 2-periodic
 * complexes classified by their Z/2-graded homology.  Iso labels are
 * multisets of (catalog id, parity); the context owns the catalog, the
 * canonical object per label, and memoized Hom spaces and Aut orders.
 * Caches race benignly: recomputation is deterministic and idempotent. */

#include <map>
#include <mutex>
#include <sstream>

#include "hall2p/arith.hpp"
#include "hall2p/complex.hpp"

namespace hall2p {

struct Label {
    std::vector<std::pair<uint32_t, uint8_t>> parts; // sorted (id, parity)

    static Label zero() { return {}; }
    static Label single(uint32_t id, uint8_t parity)
    {
        Label l;
        l.parts.push_back({id, parity});
        return l;
    }

    bool is_zero() const { return parts.empty(); }
    bool is_indecomposable() const { return parts.size() == 1; }

    Label shifted() const
    {
        Label l = *this;
        for (auto& p : l.parts)
            p.second ^= 1;
        std::sort(l.parts.begin(), l.parts.end());
        return l;
    }

    Label plus(const Label& o) const
    {
        Label l = *this;
        l.parts.insert(l.parts.end(), o.parts.begin(), o.parts.end());
        std::sort(l.parts.begin(), l.parts.end());
        return l;
    }

    /* this minus one copy of (id, parity), if present */
    std::optional<Label> minus(std::pair<uint32_t, uint8_t> part) const
    {
        Label l = *this;
        auto it = std::find(l.parts.begin(), l.parts.end(), part);
        if (it == l.parts.end())
            return std::nullopt;
        l.parts.erase(it);
        return l;
    }

    auto operator<=>(const Label&) const = default;
};

inline Int gl_order(const Int& fieldsize, unsigned long m)
{
    Int r = 1;
    Int qm = int_pow(fieldsize, m);
    for (unsigned long j = 0; j < m; ++j)
        r *= qm - int_pow(fieldsize, j);
    return r;
}

class RootContext {
public:
    RootContext(unsigned q, Quiver quiver, long guard = kDefaultGuard)
        : F_(q), Q_(std::move(quiver)), cat_(&F_, &Q_, guard), guard_(guard)
    {
        for (size_t i = 0; i < cat_.size(); ++i) {
            objects_[Label::single(uint32_t(i), 0)] = from_module(cat_.rep(i));
            objects_[Label::single(uint32_t(i), 1)] =
                shift(from_module(cat_.rep(i)));
        }
        objects_[Label::zero()] = zero_complex(&F_, &Q_);
        // per-pair module Hom/Ext dimension tables
        homtab_.assign(cat_.size(), std::vector<long>(cat_.size()));
        exttab_.assign(cat_.size(), std::vector<long>(cat_.size()));
        for (size_t i = 0; i < cat_.size(); ++i)
            for (size_t j = 0; j < cat_.size(); ++j) {
                homtab_[i][j] = long(hom_dim(cat_.rep(i), cat_.rep(j)));
                exttab_[i][j] = ext1_dim(cat_.rep(i), cat_.rep(j));
            }
    }

    const FqField& field() const { return F_; }
    const Quiver& quiver() const { return Q_; }
    const ModuleCatalog& catalog() const { return cat_; }
    long guard() const { return guard_; }
    unsigned q() const { return F_.q(); }

    /* ind C2: both parities of every catalog entry, in label order. */
    std::vector<Label> root_labels() const
    {
        std::vector<Label> ls;
        for (size_t i = 0; i < cat_.size(); ++i)
            for (uint8_t p = 0; p < 2; ++p)
                ls.push_back(Label::single(uint32_t(i), p));
        std::sort(ls.begin(), ls.end());
        return ls;
    }

    Label label_of(const PComplex& x) const
    {
        Homology h = homology(x);
        Label l;
        for (size_t id : decompose(h.h0.rep, cat_, guard_))
            l.parts.push_back({uint32_t(id), 0});
        for (size_t id : decompose(h.h1.rep, cat_, guard_))
            l.parts.push_back({uint32_t(id), 1});
        std::sort(l.parts.begin(), l.parts.end());
        return l;
    }

    /* Canonical reduced object: direct sum of folded catalog modules and
     * their shifts, in label order. */
    const PComplex& object_of(const Label& l) const
    {
        std::vector<PComplex> pieces;
        {
            std::lock_guard<std::mutex> g(mu_);
            auto it = objects_.find(l);
            if (it != objects_.end())
                return it->second;
            for (const auto& part : l.parts)
                pieces.push_back(objects_.at(Label::single(part.first, part.second)));
        }
        PComplex x = zero_complex(&F_, &Q_);
        for (const PComplex& piece : pieces)
            x = direct_sum(x, piece);
        std::lock_guard<std::mutex> g(mu_);
        return objects_.emplace(l, std::move(x)).first->second;
    }

    /* Homotopy-equivalent object with radical differentials and no
     * contractible summand. */
    PComplex reduce(const PComplex& x) const { return object_of(label_of(x)); }

    const HomSpace& hom(const Label& a, const Label& b) const
    {
        auto key = std::make_pair(a, b);
        {
            std::lock_guard<std::mutex> g(mu_);
            auto it = homs_.find(key);
            if (it != homs_.end())
                return *it->second;
        }
        const PComplex& xa = object_of(a);
        const PComplex& xb = object_of(b);
        auto hs = std::make_shared<HomSpace>(xa, xb);
        std::lock_guard<std::mutex> g(mu_);
        return *homs_.emplace(key, std::move(hs)).first->second;
    }

    /* dim Hom between labels, additively from the module tables:
     * equal parities pair through Hom_A, opposite through Ext^1_A. */
    long hom_dim_label(const Label& a, const Label& b) const
    {
        long d = 0;
        for (const auto& pa : a.parts)
            for (const auto& pb : b.parts)
                d += pa.second == pb.second ? homtab_[pa.first][pb.first]
                                            : exttab_[pa.first][pb.first];
        return d;
    }

    std::vector<long> groth_vector(const Label& l) const
    {
        std::vector<long> h(Q_.vertex_count(), 0);
        for (const auto& p : l.parts) {
            const DimVec& d = cat_.dim_vec(p.first);
            for (size_t v = 0; v < h.size(); ++v)
                h[v] += p.second == 0 ? d[v] : -d[v];
        }
        return h;
    }

    std::vector<long> groth_vector(const PComplex& x) const
    {
        std::vector<long> h(Q_.vertex_count(), 0);
        for (size_t v = 0; v < h.size(); ++v)
            h[v] = x.p0.dim[v] - x.p1.dim[v];
        return h;
    }

    /* Multiplication table of End(X) over the class basis:
     * table[i][j] = coordinates of b_i composed after b_j. */
    struct EndRing {
        size_t dim = 0;
        std::vector<Fq> identity; // coordinates of id_X
        std::vector<std::vector<std::vector<Fq>>> table;
    };

    EndRing end_ring(const Label& l) const
    {
        const HomSpace& end = hom(l, l);
        const PComplex& x = object_of(l);
        EndRing r;
        r.dim = end.dim();
        r.identity = end.class_coords(identity_chain(x));
        std::vector<ChainMap> basis;
        for (size_t j = 0; j < r.dim; ++j) {
            std::vector<Fq> e(r.dim, 0);
            e[j] = 1;
            basis.push_back(end.rep(e));
        }
        r.table.assign(r.dim, std::vector<std::vector<Fq>>(r.dim));
        for (size_t i = 0; i < r.dim; ++i)
            for (size_t j = 0; j < r.dim; ++j)
                r.table[i][j] = end.class_coords(compose(basis[i], basis[j]));
        return r;
    }

    /* dim End X / rad End X for indecomposable X. */
    unsigned d_value(const Label& l) const
    {
        if (!l.is_indecomposable())
            throw Error("d_value needs an indecomposable object");
        long de = hom_dim_label(l, l);
        if (de == 1)
            return 1;
        // brute force: in a local ring the non-units are exactly the
        // radical, so their count determines dim rad
        Int units = count_units(l);
        Int nonunits = int_pow(q(), (unsigned long)de) - units;
        unsigned k = 0;
        Int pow = 1;
        while (pow < nonunits) {
            pow *= q();
            ++k;
        }
        if (pow != nonunits)
            throw VerificationError("End(X) is not local for " + render(l));
        return unsigned(de) - k;
    }

    /* |Aut X| via the block structure of End(X) mod radical:
     * q^(dim End - sum d_i m_i^2) * prod |GL_{m_i}(q^{d_i})|. */
    Int aut_order(const Label& l) const
    {
        {
            std::lock_guard<std::mutex> g(mu_);
            auto it = auts_.find(l);
            if (it != auts_.end())
                return it->second;
        }
        std::map<std::pair<uint32_t, uint8_t>, unsigned long> mult;
        for (const auto& p : l.parts)
            ++mult[p];
        long dim_end = hom_dim_label(l, l);
        long diag = 0;
        Int units = 1;
        for (const auto& [part, m] : mult) {
            unsigned d = d_value(Label::single(part.first, part.second));
            diag += long(d) * long(m) * long(m);
            units *= gl_order(int_pow(q(), d), m);
        }
        Int a = int_pow(q(), (unsigned long)(dim_end - diag)) * units;
        std::lock_guard<std::mutex> g(mu_);
        auts_.emplace(l, a);
        return a;
    }

    /* Same number by enumerating End(X) and counting invertible classes;
     * the slow cross-check path. */
    Int aut_order_brute(const PComplex& x) const
    {
        HomSpace end(x, x);
        Homology h = homology(x);
        SpaceEnumerator en(&F_, end.dim(), guard_);
        Int count = 0;
        for (unsigned long i = 0; i < en.size(); ++i) {
            ChainMap f = end.rep(en.coefficients(i));
            if (is_homotopy_iso(f, h, h))
                ++count;
        }
        return count;
    }

    std::string render(const Label& l) const
    {
        if (l.is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& p : l.parts) {
            if (!first)
                os << "+";
            first = false;
            os << part_name(p.first);
            if (p.second == 1)
                os << "[1]";
        }
        return os.str();
    }

private:
    Int count_units(const Label& l) const
    {
        const PComplex& x = object_of(l);
        return aut_order_brute(x);
    }

    std::string part_name(uint32_t id) const
    {
        const DimVec& d = cat_.dim_vec(id);
        long total = 0;
        for (long v : d)
            total += v;
        char prefix = 'M';
        if (total == 1) {
            prefix = 'S';
        } else {
            for (size_t i = 0; i < Q_.vertex_count() && prefix == 'M'; ++i)
                if (projective_rep(&F_, &Q_, i).dim == d)
                    prefix = 'P';
            for (size_t i = 0; i < Q_.vertex_count() && prefix == 'M'; ++i) {
                DimVec inj(Q_.vertex_count(), 0);
                for (size_t j = 0; j < Q_.vertex_count(); ++j)
                    if (Q_.path(j, i))
                        inj[j] = 1;
                if (inj == d)
                    prefix = 'I';
            }
        }
        std::ostringstream os;
        os << prefix << "(";
        for (size_t v = 0; v < d.size(); ++v)
            os << (v ? "," : "") << d[v];
        os << ")";
        return os.str();
    }

    FqField F_;
    Quiver Q_;
    ModuleCatalog cat_;
    long guard_;
    std::vector<std::vector<long>> homtab_, exttab_;

    mutable std::mutex mu_;
    mutable std::map<Label, PComplex> objects_;
    mutable std::map<std::pair<Label, Label>, std::shared_ptr<HomSpace>> homs_;
    mutable std::map<Label, Int> auts_;
};

} // namespace hall2p
