#pragma once

/* JSON/CSV serialization.  Rationals serialize as {"num","den"} strings so
 * no precision is lost; residues carry their modulus so the trivial q = 2
 * ring stays visible. */

#include <json.hpp>

#include "hall2p/suites.hpp"

namespace hall2p {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r)
{
    return json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

inline json to_json(const QRational& r)
{
    return json{{"num", r.num.get_str()}, {"qexp", r.qexp}};
}

inline json to_json(const Residue& r)
{
    return json{{"value", r.value}, {"modulus", r.modulus}};
}

inline json to_json(const FqMatrix& m)
{
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j)
            row.push_back(int(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const RepMap& f)
{
    json blocks = json::array();
    for (const auto& b : f.blocks)
        blocks.push_back(to_json(b));
    return blocks;
}

inline json to_json(const PComplex& x)
{
    return json{{"p0_summands", x.sum0},
                {"p1_summands", x.sum1},
                {"d0", to_json(x.d0)},
                {"d1", to_json(x.d1)}};
}

inline json quiver_to_json(const Quiver& q)
{
    json arrows = json::array();
    for (const Arrow& a : q.arrows())
        arrows.push_back(json{{"src", a.src + 1}, {"tgt", a.tgt + 1}});
    return json{{"vertices", q.vertex_count()},
                {"type", q.dynkin_type()},
                {"arrows", std::move(arrows)}};
}

inline std::string quiver_spec_text(const Quiver& q)
{
    std::ostringstream os;
    os << "vertices " << q.vertex_count() << "\n";
    for (const Arrow& a : q.arrows())
        os << "arrow " << a.src + 1 << " " << a.tgt + 1 << "\n";
    return os.str();
}

/* ind C2 with dimension vectors, d(X), |Aut X|, and the Hom-dimension
 * matrix; the module catalog carries its matrices as field-element
 * indices. */
inline json catalog_to_json(const RootContext& root)
{
    json j;
    j["quiver"] = quiver_to_json(root.quiver());
    j["q"] = root.q();

    json modules = json::array();
    const ModuleCatalog& cat = root.catalog();
    for (size_t i = 0; i < cat.size(); ++i) {
        const Rep& r = cat.rep(i);
        json mats = json::array();
        for (const auto& m : r.mats)
            mats.push_back(to_json(m));
        modules.push_back(json{{"id", i},
                               {"dim_vector", r.dim},
                               {"matrices", std::move(mats)}});
    }
    j["modules"] = std::move(modules);

    auto roots = root.root_labels();
    json objects = json::array();
    for (const Label& l : roots) {
        objects.push_back(
            json{{"label", root.render(l)},
                 {"catalog_id", l.parts[0].first},
                 {"parity", l.parts[0].second},
                 {"dim_vector", root.groth_vector(l)},
                 {"d", root.d_value(l)},
                 {"aut_order", root.aut_order(l).get_str()},
                 {"complex", to_json(root.object_of(l))}});
    }
    j["objects"] = std::move(objects);

    json hom = json::array();
    for (const Label& a : roots) {
        json row = json::array();
        for (const Label& b : roots)
            row.push_back(root.hom_dim_label(a, b));
        hom.push_back(std::move(row));
    }
    j["hom_matrix"] = std::move(hom);
    return j;
}

inline json report_to_json(const SuiteReport& r)
{
    return json{{"suite", r.suite},
                {"instances", r.instances},
                {"passed", r.passed()},
                {"violations", r.violations},
                {"skipped", r.skipped},
                {"seconds", r.seconds}};
}

struct TableCell {
    std::string u, v, w;
    Rational value;
};

inline std::string table_to_csv(const std::vector<TableCell>& cells)
{
    std::ostringstream os;
    os << "U,V,W,num,den\n";
    for (const auto& c : cells)
        os << c.u << "," << c.v << "," << c.w << "," << c.value.num().get_str()
           << "," << c.value.den().get_str() << "\n";
    return os.str();
}

} // namespace hall2p
