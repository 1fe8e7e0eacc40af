#include "ehom/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ehom {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw std::invalid_argument(std::string("missing JSON field: ") + name);
    return j.at(name);
}

int int_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_integer()) throw std::invalid_argument(std::string("field must be an integer: ") + name);
    return v.get<int>();
}

json diagram_to_json(const StratumDiagram& d) {
    json strata = json::array();
    for (const auto& bucket : d.strata()) {
        json comps = json::array();
        for (const StratumComponent& c : bucket)
            comps.push_back({{"chi", c.chi_parity ? 1 : 0},
                             {"fiber",
                              {{"f", c.fiber.full_parity ? 1 : 0},
                               {"e", c.fiber.punctured_parity ? 1 : 0}}}});
        strata.push_back(std::move(comps));
    }
    json out{{"dim", d.dim()}, {"strata", std::move(strata)}};
    out["boundary"] = d.closed() ? json(nullptr) : diagram_to_json(d.boundary());
    return out;
}

StratumDiagram diagram_from_json(const json& j) {
    const int dim = int_field(j, "dim");
    const json& strata_json = field(j, "strata");
    if (!strata_json.is_array()) throw std::invalid_argument("diagram strata must be an array");
    StratumDiagram::Strata strata;
    for (const json& bucket : strata_json) {
        if (!bucket.is_array()) throw std::invalid_argument("diagram stratum must be an array");
        std::vector<StratumComponent> comps;
        for (const json& cj : bucket) {
            StratumComponent c;
            c.chi_parity = int_field(cj, "chi") & 1;
            const json& fj = field(cj, "fiber");
            c.fiber.full_parity = int_field(fj, "f") & 1;
            c.fiber.punctured_parity = int_field(fj, "e") & 1;
            comps.push_back(c);
        }
        strata.push_back(std::move(comps));
    }
    std::shared_ptr<const StratumDiagram> bnd;
    if (j.contains("boundary") && !j.at("boundary").is_null())
        bnd = std::make_shared<const StratumDiagram>(diagram_from_json(j.at("boundary")));
    try {
        return StratumDiagram(dim, std::move(strata), std::move(bnd));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("bad diagram: ") + e.what());
    }
}

PermGroup group_from_json(const json& j) {
    const int degree = int_field(j, "degree");
    const json& gens = field(j, "generators");
    if (!gens.is_array()) throw std::invalid_argument("group generators must be an array");
    std::vector<Perm> perms;
    for (const json& g : gens) {
        if (!g.is_array()) throw std::invalid_argument("generator must be an image array");
        std::vector<int> img;
        for (const json& v : g) img.push_back(v.get<int>());
        try {
            perms.push_back(Perm(std::move(img)));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string("bad generator: ") + e.what());
        }
        if (perms.back().degree() != degree)
            throw std::invalid_argument("generator degree does not match group degree");
    }
    return PermGroup::generate(degree, std::move(perms));
}

GroupAction action_from_json(const json& j, std::size_t generator_count, int points) {
    GroupAction a;
    a.points = points;
    if (!j.is_object()) throw std::invalid_argument("action must be an object keyed by generator index");
    for (std::size_t gi = 0; gi < generator_count; ++gi) {
        const std::string key = std::to_string(gi);
        if (!j.contains(key))
            throw std::invalid_argument("action missing images for generator " + key);
        std::vector<int> img;
        for (const json& v : j.at(key)) img.push_back(v.get<int>());
        if (static_cast<int>(img.size()) != points)
            throw std::invalid_argument("action image length does not match cell count");
        a.per_generator.push_back(Perm(std::move(img)));
    }
    return a;
}

json gdiagram_to_json(const GStratumDiagram& d, bool with_group) {
    json strata = json::array();
    for (const auto& bucket : d.strata()) {
        json comps = json::array();
        for (const GStratumComponent& c : bucket) {
            json fixed = json::object();
            for (const auto& [cls, dimf] : c.fixed_dims) fixed[std::to_string(cls)] = dimf;
            comps.push_back({{"quotient_chi", c.quotient_chi},
                             {"isotropy", c.isotropy},
                             {"fiber_punctured", c.fiber_punctured},
                             {"fiber_full", c.fiber_full},
                             {"fixed_dims", std::move(fixed)}});
        }
        strata.push_back(std::move(comps));
    }
    json out{{"dim", d.dim()}, {"strata", std::move(strata)}};
    if (with_group) {
        json gens = json::array();
        for (const Perm& g : d.ring().group().generators()) gens.push_back(g.images());
        out["group"] = {{"degree", d.ring().group().degree()}, {"generators", std::move(gens)}};
    }
    out["boundary"] = d.closed() ? json(nullptr) : gdiagram_to_json(d.boundary(), false);
    return out;
}

GStratumDiagram gdiagram_from_json(const json& j, std::shared_ptr<const BurnsideRing> ring) {
    const int dim = int_field(j, "dim");
    const json& strata_json = field(j, "strata");
    if (!strata_json.is_array()) throw std::invalid_argument("gdiagram strata must be an array");
    GStratumDiagram::Strata strata;
    for (const json& bucket : strata_json) {
        std::vector<GStratumComponent> comps;
        for (const json& cj : bucket) {
            GStratumComponent c;
            c.quotient_chi = field(cj, "quotient_chi").get<long long>();
            c.isotropy = field(cj, "isotropy").get<std::size_t>();
            for (const json& v : field(cj, "fiber_punctured")) c.fiber_punctured.push_back(v.get<long long>());
            for (const json& v : field(cj, "fiber_full")) c.fiber_full.push_back(v.get<long long>());
            const json& fixed = field(cj, "fixed_dims");
            for (auto it = fixed.begin(); it != fixed.end(); ++it)
                c.fixed_dims[static_cast<std::size_t>(std::stoul(it.key()))] = it.value().get<int>();
            comps.push_back(std::move(c));
        }
        strata.push_back(std::move(comps));
    }
    std::shared_ptr<const GStratumDiagram> bnd;
    if (j.contains("boundary") && !j.at("boundary").is_null())
        bnd = std::make_shared<const GStratumDiagram>(gdiagram_from_json(j.at("boundary"), ring));
    try {
        return GStratumDiagram(std::move(ring), dim, std::move(strata), std::move(bnd));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("bad gdiagram: ") + e.what());
    }
}

}  // namespace

std::string to_json_string(const SimplicialComplex& c) {
    json facets = json::array();
    for (const Simplex& f : c.facets()) facets.push_back(f);
    return json{{"facets", std::move(facets)}}.dump();
}

SimplicialComplex complex_from_json_string(const std::string& text) {
    const json j = parse(text);
    const json& facets_json = field(j, "facets");
    if (!facets_json.is_array()) throw std::invalid_argument("facets must be an array");
    std::vector<Simplex> facets;
    for (const json& f : facets_json) {
        Simplex s;
        for (const json& v : f) s.push_back(v.get<int>());
        facets.push_back(std::move(s));
    }
    try {
        return SimplicialComplex::from_facets(facets);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("bad complex: ") + e.what());
    }
}

std::string to_json_string(const StratumDiagram& d) { return diagram_to_json(d).dump(); }

StratumDiagram diagram_from_json_string(const std::string& text) {
    return diagram_from_json(parse(text));
}

std::string to_json_string(const PermGroup& g) {
    json gens = json::array();
    for (const Perm& p : g.generators()) gens.push_back(p.images());
    return json{{"degree", g.degree()}, {"generators", std::move(gens)}}.dump();
}

PermGroup group_from_json_string(const std::string& text) { return group_from_json(parse(text)); }

HCWComplex cells_from_json_string(const std::string& text) {
    const json j = parse(text);
    const json& cells = field(j, "cells");
    if (!cells.is_array()) throw std::invalid_argument("cells must be an array");
    HCWComplex out;
    for (const json& layer : cells) {
        HCWComplex::Layer l;
        l.dim = int_field(layer, "dim");
        const int points = int_field(layer, "points");
        if (points < 0) throw std::invalid_argument("cell count must be nonnegative");
        // Generator count is resolved later against the group; store raw images.
        const json& action = field(layer, "action");
        std::size_t gen_count = action.is_object() ? action.size() : 0;
        l.cells = action_from_json(action, gen_count, points);
        out.layers.push_back(std::move(l));
    }
    return out;
}

SWData swdata_from_json_string(const std::string& text) {
    const json j = parse(text);
    SWData sw;
    sw.manifold_dim = int_field(j, "dim");
    const json& classes = field(j, "classes");
    if (!classes.is_object()) throw std::invalid_argument("classes must be an object keyed by degree");
    for (auto it = classes.begin(); it != classes.end(); ++it) {
        std::vector<int> bits;
        for (const json& v : it.value()) bits.push_back(v.get<int>());
        sw.classes.emplace(std::stoi(it.key()), BitVector::from_bits(bits));
    }
    return sw;
}

std::string to_json_string(const GStratumDiagram& d) { return gdiagram_to_json(d, true).dump(); }

GStratumDiagram gdiagram_from_json_string(const std::string& text) {
    const json j = parse(text);
    PermGroup group = group_from_json(field(j, "group"));
    auto ring = std::make_shared<const BurnsideRing>(std::move(group));
    return gdiagram_from_json(j, std::move(ring));
}

std::string to_json_string(const PolyClass& c) {
    json terms = json::array();
    for (const auto& [key, chain] : c.terms()) {
        json bits = json::array();
        for (std::size_t i = 0; i < chain.size(); ++i) bits.push_back(chain.get(i) ? 1 : 0);
        terms.push_back({{"degree", key.first}, {"t", key.second}, {"chain", std::move(bits)}});
    }
    return json{{"terms", std::move(terms)}}.dump();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace ehom
