// Command-line front end: every computation of the library behind stable,
// scriptable subcommands. Exit codes: 0 success, 1 validation failure
// (a diagram failing the Euler condition), 2 malformed input or usage.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ehom/burnside.hpp"
#include "ehom/euler_homology.hpp"
#include "ehom/json_io.hpp"
#include "ehom/permgroup.hpp"
#include "ehom/simplicial.hpp"
#include "ehom/stratifold.hpp"

namespace {

using nlohmann::json;

struct Options {
    std::string format = "text";
    bool json_mode() const { return format == "json"; }
};

void emit(const Options& opt, const json& payload, const std::string& text) {
    if (opt.json_mode())
        std::cout << payload.dump() << "\n";
    else
        std::cout << text;
}

std::string join_counts(const std::vector<std::size_t>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << v[i];
    }
    return out.str();
}

int run_homology(const Options& opt, const std::string& path) {
    const auto complex = ehom::complex_from_json_string(ehom::read_text_file(path));
    const auto f = complex.f_vector();
    const auto betti = complex.betti_mod2();
    const long long chi = complex.euler_characteristic();
    std::ostringstream text;
    text << "f " << join_counts(f) << "\n";
    text << "betti " << join_counts(betti) << "\n";
    text << "chi " << chi << "\n";
    emit(opt, json{{"f", f}, {"betti", betti}, {"chi", chi}}, text.str());
    return 0;
}

int run_eh_dims(const Options& opt, const std::string& path, int max_degree) {
    const auto complex = ehom::complex_from_json_string(ehom::read_text_file(path));
    const auto dims = ehom::euler_homology_dims(complex, max_degree);
    emit(opt, json{{"dims", dims}}, join_counts(dims) + "\n");
    return 0;
}

int run_mu(const Options& opt, const std::string& sw_path, const std::string& complex_path,
           int degree) {
    const auto sw = ehom::swdata_from_json_string(ehom::read_text_file(sw_path));
    const auto target = ehom::complex_from_json_string(ehom::read_text_file(complex_path));
    const auto cls = ehom::sw_poly_class(sw, degree, target);
    if (opt.json_mode()) {
        std::cout << ehom::to_json_string(cls) << "\n";
        return 0;
    }
    if (cls.is_zero()) {
        std::cout << "zero\n";
        return 0;
    }
    for (const auto& [key, chain] : cls.terms()) {
        std::cout << "term degree=" << key.first << " t=" << key.second << " chain=";
        for (std::size_t i = 0; i < chain.size(); ++i) std::cout << (chain.get(i) ? '1' : '0');
        std::cout << "\n";
    }
    return 0;
}

int run_stratifold(const Options& opt, const std::string& verb, const std::string& a_path,
                   const std::string& b_path) {
    const ehom::StratumDiagram a = ehom::diagram_from_json_string(ehom::read_text_file(a_path));
    if (verb == "validate") {
        const auto report = a.validate_euler();
        if (opt.json_mode()) {
            json failures = json::array();
            for (const auto& f : report.failures)
                failures.push_back({{"boundary", f.in_boundary},
                                    {"stratum", f.stratum},
                                    {"component", f.component}});
            std::cout << json{{"ok", report.ok()}, {"failures", std::move(failures)}}.dump()
                      << "\n";
        } else if (report.ok()) {
            std::cout << "ok\n";
        } else {
            for (const auto& f : report.failures)
                std::cout << "fail boundary=" << (f.in_boundary ? 1 : 0) << " stratum=" << f.stratum
                          << " component=" << f.component << "\n";
        }
        return report.ok() ? 0 : 1;
    }
    if (verb == "classify") {
        const bool cls = a.classify_point();
        emit(opt, json{{"class", cls ? 1 : 0}}, std::string(cls ? "1" : "0") + "\n");
        return 0;
    }
    if (verb == "cone") {
        std::cout << ehom::to_json_string(a.cone()) << "\n";
        return 0;
    }
    const ehom::StratumDiagram b = ehom::diagram_from_json_string(ehom::read_text_file(b_path));
    if (verb == "product") std::cout << ehom::to_json_string(a.product(b)) << "\n";
    if (verb == "union") std::cout << ehom::to_json_string(a.disjoint_union(b)) << "\n";
    if (verb == "glue") std::cout << ehom::to_json_string(a.glue(b)) << "\n";
    return 0;
}

int run_group(const Options& opt, const std::string& verb, const std::string& path) {
    const ehom::PermGroup g = ehom::group_from_json_string(ehom::read_text_file(path));
    if (verb == "order") {
        emit(opt, json{{"order", g.order()}}, std::to_string(g.order()) + "\n");
        return 0;
    }
    const ehom::BurnsideRing ring{g};
    if (verb == "subgroups") {
        json rows = json::array();
        std::ostringstream text;
        for (std::size_t k = 0; k < ring.class_count(); ++k) {
            const auto& c = ring.classes()[k];
            rows.push_back({{"label", ring.class_label(k)},
                            {"order", c.order},
                            {"conjugates", c.conjugate_count},
                            {"norm_quotient", c.norm_quotient}});
            text << ring.class_label(k) << " conjugates=" << c.conjugate_count
                 << " norm_quotient=" << c.norm_quotient << "\n";
        }
        emit(opt, json{{"classes", std::move(rows)}}, text.str());
        return 0;
    }
    if (verb == "marks") {
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < ring.class_count(); ++k) labels.push_back(ring.class_label(k));
        std::ostringstream text;
        text << "classes";
        for (const auto& l : labels) text << ' ' << l;
        text << "\n";
        for (const auto& row : ring.marks()) {
            for (std::size_t i = 0; i < row.size(); ++i) text << (i ? " " : "") << row[i];
            text << "\n";
        }
        emit(opt, json{{"classes", labels}, {"marks", ring.marks()}}, text.str());
        return 0;
    }
    // vh
    std::vector<std::string> labels;
    for (std::size_t k : ring.vh_basis()) labels.push_back(ring.class_label(k));
    std::ostringstream text;
    for (const auto& l : labels) text << l << "\n";
    emit(opt, json{{"vh_basis", labels}}, text.str());
    return 0;
}

std::size_t parse_class_argument(const ehom::BurnsideRing& ring, const std::string& arg) {
    for (std::size_t k = 0; k < ring.class_count(); ++k)
        if (ring.class_label(k) == arg) return k;
    try {
        const std::size_t idx = std::stoul(arg);
        if (idx < ring.class_count()) return idx;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("unknown subgroup class: " + arg);
}

int run_equivariant(const Options& opt, const std::string& verb, const std::string& a_path,
                    const std::string& b_path, const std::string& class_arg) {
    if (verb == "chi") {
        const ehom::PermGroup g = ehom::group_from_json_string(ehom::read_text_file(a_path));
        const ehom::HCWComplex cells = ehom::cells_from_json_string(ehom::read_text_file(b_path));
        const ehom::BurnsideRing ring{g};
        const auto coeffs = ring.equivariant_chi(cells);
        json rows = json::array();
        std::ostringstream text;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            rows.push_back({{"label", ring.class_label(k)}, {"coeff", coeffs[k]}});
            text << ring.class_label(k) << " " << coeffs[k] << "\n";
        }
        emit(opt, json{{"chi", std::move(rows)}}, text.str());
        return 0;
    }
    const ehom::GStratumDiagram d = ehom::gdiagram_from_json_string(ehom::read_text_file(a_path));
    if (verb == "classify") {
        const auto bits = d.classify();
        const auto basis = d.ring().vh_basis();
        json rows = json::array();
        std::ostringstream text;
        for (std::size_t i = 0; i < bits.size(); ++i) {
            rows.push_back({{"label", d.ring().class_label(basis[i])}, {"bit", bits[i]}});
            text << d.ring().class_label(basis[i]) << " " << static_cast<int>(bits[i]) << "\n";
        }
        emit(opt, json{{"vh", std::move(rows)}}, text.str());
        return 0;
    }
    if (verb == "classify-naive") {
        const bool cls = d.classify_naive();
        emit(opt, json{{"class", cls ? 1 : 0}}, std::string(cls ? "1" : "0") + "\n");
        return 0;
    }
    // fixed
    const std::size_t cls = parse_class_argument(d.ring(), class_arg);
    std::cout << ehom::to_json_string(d.fixed_diagram(cls)) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for Euler homology of stratified spaces"};
    app.require_subcommand(1);
    app.fallthrough(true);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string path_a, path_b, class_arg;
    int max_degree = 0, mu_degree = 0;

    auto* homology = app.add_subcommand("homology", "f-vector, mod-2 Betti numbers and chi");
    homology->add_option("complex", path_a, "complex JSON file")->required();

    auto* eh_dims = app.add_subcommand("eh-dims", "dimensions of the value groups");
    eh_dims->add_option("complex", path_a, "complex JSON file")->required();
    eh_dims->add_option("--max-degree", max_degree, "largest degree to print")->required();

    auto* mu = app.add_subcommand("mu", "characteristic-class expansion of SW data");
    mu->add_option("swdata", path_a, "SW data JSON file")->required();
    mu->add_option("complex", path_b, "target complex JSON file")->required();
    mu->add_option("--degree", mu_degree, "padding degree n")->required();

    auto* strat = app.add_subcommand("stratifold", "stratum diagram operations");
    strat->require_subcommand(1);
    for (const char* verb : {"validate", "classify", "cone"}) {
        auto* sub = strat->add_subcommand(verb);
        sub->add_option("diagram", path_a, "diagram JSON file")->required();
    }
    for (const char* verb : {"product", "union", "glue"}) {
        auto* sub = strat->add_subcommand(verb);
        sub->add_option("first", path_a, "diagram JSON file")->required();
        sub->add_option("second", path_b, "diagram JSON file")->required();
    }

    auto* group = app.add_subcommand("group", "finite permutation group computations");
    group->require_subcommand(1);
    for (const char* verb : {"order", "subgroups", "marks", "vh"}) {
        auto* sub = group->add_subcommand(verb);
        sub->add_option("group", path_a, "group JSON file")->required();
    }

    auto* equi = app.add_subcommand("equivariant", "equivariant computations");
    equi->require_subcommand(1);
    {
        auto* sub = equi->add_subcommand("chi");
        sub->add_option("group", path_a, "group JSON file")->required();
        sub->add_option("cells", path_b, "H-CW cells JSON file")->required();
    }
    for (const char* verb : {"classify", "classify-naive"}) {
        auto* sub = equi->add_subcommand(verb);
        sub->add_option("gdiagram", path_a, "equivariant diagram JSON file")->required();
    }
    {
        auto* sub = equi->add_subcommand("fixed");
        sub->add_option("gdiagram", path_a, "equivariant diagram JSON file")->required();
        sub->add_option("--class", class_arg, "subgroup class label or index")->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (homology->parsed()) return run_homology(opt, path_a);
        if (eh_dims->parsed()) return run_eh_dims(opt, path_a, max_degree);
        if (mu->parsed()) return run_mu(opt, path_a, path_b, mu_degree);
        if (strat->parsed())
            return run_stratifold(opt, strat->get_subcommands().front()->get_name(), path_a, path_b);
        if (group->parsed())
            return run_group(opt, group->get_subcommands().front()->get_name(), path_a);
        if (equi->parsed())
            return run_equivariant(opt, equi->get_subcommands().front()->get_name(), path_a, path_b,
                                   class_arg);
    } catch (const ehom::euler_condition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
