/* hall2p: triangle counting and Lie structure verification for 2-periodic
 * root categories of Dynkin quivers over small finite fields.
 *
 * Verbs: catalog, hall, verify, lie.  Exit codes: 0 pass, 1 violation,
 * 2 usage/config error. */

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "hall2p/cache.hpp"
#include "hall2p/json_io.hpp"
#include "hall2p/suites.hpp"

using namespace hall2p;

namespace {

struct Options {
    std::string type;
    std::string quiver_file;
    unsigned q = 0;
    long guard = kDefaultGuard;
    std::string out;
    std::string cache_dir;
    unsigned jobs = 1;
    std::string suite = "all";
};

void add_common(CLI::App* cmd, Options& o)
{
    cmd->add_option("--type", o.type, "Dynkin type, e.g. A2, A3, D4, E6");
    cmd->add_option("--quiver-file", o.quiver_file,
                    "quiver spec file ('vertices n' then 'arrow i j' lines)");
    cmd->add_option("--q", o.q, "field size (2,3,4,5,7,8,9)")->required();
    cmd->add_option("--guard", o.guard, "enumeration guard (default 10^7)");
    cmd->add_option("--out", o.out, "output path (stdout if omitted)");
    cmd->add_option("--cache-dir", o.cache_dir, "result cache directory");
    cmd->add_option("--jobs", o.jobs, "worker threads for suite scans");
}

Quiver make_quiver(const Options& o)
{
    if (!o.type.empty() && !o.quiver_file.empty())
        throw ConfigError("give either --type or --quiver-file, not both");
    if (!o.type.empty())
        return Quiver::of_type(o.type);
    if (!o.quiver_file.empty())
        return Quiver::from_file(o.quiver_file);
    throw ConfigError("one of --type or --quiver-file is required");
}

void emit(const Options& o, const json& j, const std::string& what)
{
    if (o.out.empty()) {
        std::cout << j.dump(1) << "\n";
    } else {
        std::ofstream f(o.out);
        if (!f)
            throw ConfigError("cannot write to '" + o.out + "'");
        f << j.dump(1) << "\n";
        std::cout << what << " written to " << o.out << "\n";
    }
}

int cmd_catalog(const Options& o)
{
    RootContext root(o.q, make_quiver(o), o.guard);
    emit(o, catalog_to_json(root), "catalog");
    return 0;
}

struct Tables {
    std::vector<TableCell> g, gbar, f;
    std::vector<std::string> skipped;
};

/* JSON keyed by label triples "U | V | W"; labels never contain " | ". */
json tables_to_json(const Tables& t)
{
    auto one = [](const std::vector<TableCell>& cells) {
        json entries = json::object();
        for (const auto& c : cells)
            entries[c.u + " | " + c.v + " | " + c.w] = to_json(c.value);
        return entries;
    };
    return json{{"g", one(t.g)},
                {"gbar", one(t.gbar)},
                {"f", one(t.f)},
                {"skipped", t.skipped}};
}

Tables tables_from_json(const json& j)
{
    Tables t;
    auto one = [](const json& entries, std::vector<TableCell>& cells) {
        for (const auto& [key, value] : entries.items()) {
            TableCell c;
            size_t p1 = key.find(" | ");
            size_t p2 = key.find(" | ", p1 + 3);
            c.u = key.substr(0, p1);
            c.v = key.substr(p1 + 3, p2 - p1 - 3);
            c.w = key.substr(p2 + 3);
            c.value = Rational(Int(value.at("num").get<std::string>()),
                               Int(value.at("den").get<std::string>()));
            cells.push_back(std::move(c));
        }
    };
    one(j.at("g"), t.g);
    one(j.at("gbar"), t.gbar);
    one(j.at("f"), t.f);
    for (const auto& s : j.at("skipped"))
        t.skipped.push_back(s.get<std::string>());
    return t;
}

Tables compute_tables(const HallContext& hall)
{
    Tables t;
    const RootContext& root = hall.root();
    auto roots = root.root_labels();
    for (const Label& u : roots) {
        for (const Label& v : roots) {
            try {
                for (const Label& w : hall.candidate_middles(u, v)) {
                    t.g.push_back({root.render(u), root.render(v),
                                   root.render(w), hall.g_value(u, v, w)});
                    t.gbar.push_back({root.render(u), root.render(v),
                                      root.render(w),
                                      hall.gbar_value(u, v, w)});
                }
            } catch (const GuardExceeded& g) {
                t.skipped.push_back("g/gbar (" + root.render(u) + ", " +
                                    root.render(v) + "): " + g.what());
                continue;
            }
        }
    }
    for (const Label& x : roots) {
        for (const Label& y : roots) {
            try {
                for (const Label& l : hall.candidate_middles(x, y))
                    t.f.push_back({root.render(x), root.render(y),
                                   root.render(l),
                                   Rational(hall.f_value(x, y, l))});
            } catch (const GuardExceeded& g) {
                t.skipped.push_back("F (" + root.render(x) + ", " +
                                    root.render(y) + "): " + g.what());
            }
        }
    }
    return t;
}

int cmd_hall(const Options& o)
{
    Quiver quiver = make_quiver(o);
    FileCache cache(o.cache_dir, quiver_spec_text(quiver), o.q);
    Tables t;
    auto cached = cache.load("hall-tables");
    if (cached) {
        t = tables_from_json(*cached);
    } else {
        HallContext hall(o.q, quiver, o.guard);
        t = compute_tables(hall);
        cache.store("hall-tables", tables_to_json(t));
    }
    for (const auto& s : t.skipped)
        std::cerr << "skipped: " << s << "\n";
    if (o.out.empty()) {
        std::cout << tables_to_json(t).dump(1) << "\n";
    } else {
        {
            std::ofstream f(o.out + ".json");
            f << tables_to_json(t).dump(1) << "\n";
        }
        std::ofstream g(o.out + ".g.csv");
        g << table_to_csv(t.g);
        std::ofstream gb(o.out + ".gbar.csv");
        gb << table_to_csv(t.gbar);
        std::ofstream ff(o.out + ".f.csv");
        ff << table_to_csv(t.f);
        std::cout << "tables written to " << o.out
                  << ".{json,g.csv,gbar.csv,f.csv}\n";
    }
    return 0;
}

int cmd_verify(const Options& o)
{
    Quiver quiver = make_quiver(o);
    HallContext hall(o.q, quiver, o.guard);
    std::vector<std::string> names;
    if (o.suite == "all")
        names = suite_names();
    else
        names.push_back(o.suite);
    json reports = json::array();
    bool violated = false;
    for (const std::string& name : names) {
        if (name == "chevalley" && o.suite == "all" && o.q < 4) {
            std::cout << "[SKIP] chevalley: needs q >= 4\n";
            continue;
        }
        SuiteReport r = run_suite(name, hall, o.jobs);
        violated = violated || !r.passed();
        std::cout << (r.passed() ? "[PASS] " : "[FAIL] ") << r.suite << ": "
                  << r.instances << " instances, " << r.violations.size()
                  << " violations, " << r.skipped.size() << " skipped ("
                  << r.seconds << "s)\n";
        for (size_t i = 0; i < r.violations.size() && i < 10; ++i)
            std::cout << "  violation: " << r.violations[i] << "\n";
        if (r.violations.size() > 10)
            std::cout << "  ... " << r.violations.size() - 10 << " more\n";
        for (const auto& s : r.skipped)
            std::cout << "  skipped: " << s << "\n";
        reports.push_back(report_to_json(r));
    }
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        f << reports.dump(1) << "\n";
    }
    return violated ? 1 : 0;
}

int cmd_lie(const Options& o)
{
    Quiver quiver = make_quiver(o);
    FileCache cache(o.cache_dir, quiver_spec_text(quiver), o.q);
    HallContext hall(o.q, quiver, o.guard);
    LieContext lie(hall);
    const RootContext& root = hall.root();
    auto roots = root.root_labels();

    json basis = json::array();
    for (const Label& r : roots)
        basis.push_back("u[" + root.render(r) + "]");
    for (const Label& r : roots)
        basis.push_back("h[" + root.render(r) + "]");

    auto elt_json = [&](const LieElement& e) {
        json terms = json::array();
        for (const auto& [l, c] : e.u)
            terms.push_back(json{{"basis", "u[" + root.render(l) + "]"},
                                 {"coeff", to_json(c)}});
        bool hz = true;
        for (const auto& c : e.h)
            hz = hz && c.is_zero();
        if (!hz) {
            json h = json::array();
            for (const auto& c : e.h)
                h.push_back(to_json(c));
            terms.push_back(json{{"basis", "h"}, {"vector", std::move(h)}});
        }
        return terms;
    };

    json brackets = json::array();
    std::ostringstream csv;
    csv << "x,y,target,value,modulus\n";
    std::vector<std::pair<std::string, LieElement>> gens;
    for (const Label& r : roots)
        gens.emplace_back("u[" + root.render(r) + "]", lie.u_element(r));
    for (const Label& r : roots)
        gens.emplace_back("h[" + root.render(r) + "]", lie.h_element(r));
    for (const auto& [nx, ex] : gens)
        for (const auto& [ny, ey] : gens) {
            LieElement b = lie.bracket(ex, ey);
            brackets.push_back(
                json{{"x", nx}, {"y", ny}, {"result", elt_json(b)}});
            for (const auto& [l, c] : b.u)
                csv << nx << "," << ny << ",u[" << root.render(l) << "],"
                    << c.value << "," << c.modulus << "\n";
            for (size_t v = 0; v < b.h.size(); ++v)
                if (!b.h[v].is_zero())
                    csv << nx << "," << ny << ",h" << v + 1 << ","
                        << b.h[v].value << "," << b.h[v].modulus << "\n";
        }

    // the starred constants are dumped next to the plain ones; whether the
    // two algebras are related beyond that is left open
    auto star_json = [&](const LieContext::StarElement& e) {
        json terms = json::array();
        for (const auto& [l, c] : e.u)
            terms.push_back(json{{"basis", "u[" + root.render(l) + "]"},
                                 {"coeff", to_json(c)}});
        bool hz = true;
        for (const auto& c : e.hstar)
            hz = hz && c.is_zero();
        if (!hz) {
            json hv = json::array();
            for (const auto& c : e.hstar)
                hv.push_back(to_json(c));
            terms.push_back(json{{"basis", "h*"}, {"vector", std::move(hv)}});
        }
        return terms;
    };
    json star_brackets = json::array();
    std::vector<std::pair<std::string, LieContext::StarElement>> sgens;
    for (const Label& r : roots)
        sgens.emplace_back("u[" + root.render(r) + "]", lie.star_u(r));
    for (const Label& r : roots)
        sgens.emplace_back("h*[" + root.render(r) + "]", lie.star_h(r));
    for (const auto& [nx, ex] : sgens)
        for (const auto& [ny, ey] : sgens)
            star_brackets.push_back(json{
                {"x", nx}, {"y", ny}, {"result", star_json(lie.star_bracket(ex, ey))}});

    json comparison;
    if (o.q >= 4) {
        auto rep = lie.chevalley_compare();
        json signs = json::object();
        for (const auto& [l, s] : rep.signs)
            signs["u[" + root.render(l) + "]"] = s;
        comparison = json{{"verdict", rep.ok ? "match" : "mismatch"},
                          {"compared", rep.compared},
                          {"issues", rep.issues},
                          {"signs", std::move(signs)}};
        std::cerr << "chevalley comparison: " << (rep.ok ? "match" : "mismatch")
                  << " (" << rep.compared << " bracket pairs)\n";
        for (const auto& i : rep.issues)
            std::cerr << "  issue: " << i << "\n";
    } else {
        comparison = json{{"verdict", "skipped"},
                          {"reason", "needs q >= 4 so 1 != -1 mod q-1"}};
        std::cerr << "chevalley comparison skipped: needs q >= 4\n";
    }

    json out{{"basis", std::move(basis)},
             {"brackets", std::move(brackets)},
             {"star_brackets", std::move(star_brackets)},
             {"chevalley", comparison}};
    cache.store("lie-constants", out);
    if (o.out.empty()) {
        std::cout << out.dump(1) << "\n";
    } else {
        {
            std::ofstream f(o.out + ".json");
            f << out.dump(1) << "\n";
        }
        std::ofstream c(o.out + ".csv");
        c << csv.str();
        std::cout << "structure constants written to " << o.out
                  << ".{json,csv}\n";
    }
    return comparison.at("verdict") == "mismatch" ? 1 : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hall-type structure constants and Lie algebra verification "
                 "for 2-periodic root categories over F_q"};
    app.require_subcommand(1);

    Options oc, oh, ov, ol;
    CLI::App* catalog =
        app.add_subcommand("catalog", "export the indecomposable catalog");
    add_common(catalog, oc);
    CLI::App* hallcmd =
        app.add_subcommand("hall", "export g, gbar and F tables");
    add_common(hallcmd, oh);
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, ov);
    verify->add_option("--suite", ov.suite,
                       "integrality | orbit-sums | associativity | "
                       "theta-associativity | jacobi | star-jacobi | homdims "
                       "| chevalley | all");
    CLI::App* liecmd = app.add_subcommand(
        "lie",
        "export structure constants and compare with the Chevalley basis");
    add_common(liecmd, ol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (catalog->parsed())
            return cmd_catalog(oc);
        if (hallcmd->parsed())
            return cmd_hall(oh);
        if (verify->parsed())
            return cmd_verify(ov);
        if (liecmd->parsed())
            return cmd_lie(ol);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
