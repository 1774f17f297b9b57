#include "scfan/json_io.hpp"

#include "scfan/errors.hpp"

#include <fstream>
#include <sstream>

namespace scfan {

using nlohmann::json;

namespace {

constexpr long long kMaxExactDouble = 9007199254740991LL;  // 2^53 - 1

[[noreturn]] void bad(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

Int parse_int(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.empty()) bad(path, "empty integer string");
        std::size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size()) bad(path, "malformed integer '" + s + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') bad(path, "malformed integer '" + s + "'");
        return Int(s);
    }
    bad(path, "expected an integer");
}

Vec parse_vec(const json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array of integers");
    Vec v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(parse_int(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

IntMatrix parse_matrix(const json& j, const std::string& path, std::size_t rows, std::size_t cols) {
    if (!j.is_array()) bad(path, "expected an array of rows");
    if (j.size() != rows) bad(path, "expected " + std::to_string(rows) + " rows");
    std::vector<Vec> rs;
    for (std::size_t i = 0; i < j.size(); ++i) {
        Vec row = parse_vec(j[i], path + "[" + std::to_string(i) + "]");
        if (row.size() != cols)
            bad(path + "[" + std::to_string(i) + "]", "expected " + std::to_string(cols) + " entries");
        rs.push_back(std::move(row));
    }
    return IntMatrix::from_rows(cols, rs);
}

std::size_t parse_count(const json& j, const std::string& path) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) bad(path, "expected a non-negative integer");
    long long v = j.get<long long>();
    if (v < 0) bad(path, "expected a non-negative integer");
    return static_cast<std::size_t>(v);
}

const json& field(const json& j, const std::string& path, const char* key) {
    if (!j.is_object()) bad(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(path, std::string("missing field '") + key + "'");
    return *it;
}

std::vector<Colour> parse_colours(const json& j, const std::string& path, std::size_t rank) {
    if (!j.is_array()) bad(path, "expected an array of colours");
    std::vector<Colour> colours;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        const json& lbl = field(j[i], p, "label");
        if (!lbl.is_string()) bad(p + ".label", "expected a string");
        Vec point = parse_vec(field(j[i], p, "point"), p + ".point");
        if (point.size() != rank) bad(p + ".point", "expected " + std::to_string(rank) + " coordinates");
        colours.push_back({lbl.get<std::string>(), std::move(point)});
    }
    return colours;
}

json known_fan_keys() { return json::array({"name", "lattice", "fan", "beta"}); }

void reject_unknown(const json& j, const std::string& path, const json& known) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const auto& k : known)
            if (it.key() == k.get<std::string>()) ok = true;
        if (!ok) bad(path, "unknown field '" + it.key() + "'");
    }
}

FanDocument parse_fan_json(const json& j, const std::string& path, bool validate) {
    if (!j.is_object()) bad(path, "expected an object");
    reject_unknown(j, path, known_fan_keys());
    FanDocument doc;

    if (j.contains("name")) {
        if (!j["name"].is_string()) bad(path + ".name", "expected a string");
        doc.name = j["name"].get<std::string>();
    }

    const json& lattice = field(j, path, "lattice");
    doc.fan.lattice.rank = parse_count(field(lattice, path + ".lattice", "rank"), path + ".lattice.rank");
    if (lattice.contains("colours"))
        doc.fan.lattice.colours =
            parse_colours(lattice["colours"], path + ".lattice.colours", doc.fan.lattice.rank);

    const json& fan = field(j, path, "fan");
    const json& cones = field(fan, path + ".fan", "maximal_cones");
    if (!cones.is_array()) bad(path + ".fan.maximal_cones", "expected an array");
    for (std::size_t i = 0; i < cones.size(); ++i) {
        const std::string p = path + ".fan.maximal_cones[" + std::to_string(i) + "]";
        const json& gens_json = field(cones[i], p, "generators");
        if (!gens_json.is_array()) bad(p + ".generators", "expected an array of vectors");
        std::vector<Vec> gens;
        for (std::size_t g = 0; g < gens_json.size(); ++g) {
            Vec v = parse_vec(gens_json[g], p + ".generators[" + std::to_string(g) + "]");
            if (v.size() != doc.fan.lattice.rank)
                bad(p + ".generators[" + std::to_string(g) + "]",
                    "expected " + std::to_string(doc.fan.lattice.rank) + " coordinates");
            gens.push_back(std::move(v));
        }
        ColouredCone cc{cone_from_generators(doc.fan.lattice.rank, gens), {}};
        if (cones[i].contains("colours")) {
            const json& cols = cones[i]["colours"];
            if (!cols.is_array()) bad(p + ".colours", "expected an array of labels");
            for (const auto& c : cols) {
                if (!c.is_string()) bad(p + ".colours", "expected an array of labels");
                cc.colours.insert(c.get<std::string>());
            }
        }
        doc.fan.maximal_cones.push_back(std::move(cc));
    }

    if (j.contains("beta")) {
        const json& beta = j["beta"];
        BetaBlock block;
        block.codomain_rank = parse_count(field(beta, path + ".beta", "codomain_rank"),
                                          path + ".beta.codomain_rank");
        block.matrix = parse_matrix(field(beta, path + ".beta", "matrix"), path + ".beta.matrix",
                                    block.codomain_rank, doc.fan.lattice.rank);
        if (beta.contains("codomain_colour_points"))
            block.codomain_colour_points = parse_colours(
                beta["codomain_colour_points"], path + ".beta.codomain_colour_points", block.codomain_rank);
        doc.beta = std::move(block);
    }

    if (validate) {
        ValidationReport report = validate_fan(doc.fan);
        if (!report.ok())
            throw ValidationError(report.violations.front().axiom + ": " + report.violations.front().detail);
        if (doc.beta) {
            if (!cokernel_structure(doc.beta->matrix).finite())
                throw ValidationError("beta: cokernel is infinite");
            if (doc.beta->codomain_colour_points) {
                StackyColouredFan s = make_stacky(doc.fan, doc.beta->matrix);
                ColouredLattice derived = base_coloured_lattice(s);
                if (!(derived.colours == *doc.beta->codomain_colour_points))
                    throw ValidationError(
                        "beta.codomain_colour_points: does not match the beta-images of the colour points");
            }
        }
    }
    return doc;
}

}  // namespace

FanDocument parse_fan_document(const std::string& text, bool validate) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    return parse_fan_json(j, "$", validate);
}

FanDocument load_fan_document(const std::filesystem::path& path, bool validate) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_fan_document(buf.str(), validate);
}

namespace {

FanDocument parse_side(const json& j, const std::string& path, const std::filesystem::path& base_dir) {
    if (j.is_string()) return load_fan_document(base_dir / j.get<std::string>());
    return parse_fan_json(j, path, true);
}

}  // namespace

MapDocument parse_map_document(const std::string& text, const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!j.is_object()) bad("$", "expected an object");
    reject_unknown(j, "$", json::array({"name", "domain", "codomain", "Phi", "phi"}));

    MapDocument doc;
    doc.domain = parse_side(field(j, "$", "domain"), "$.domain", base_dir);
    doc.codomain = parse_side(field(j, "$", "codomain"), "$.codomain", base_dir);
    if (!doc.domain.beta) throw ValidationError("$.domain: missing beta block");
    if (!doc.codomain.beta) throw ValidationError("$.codomain: missing beta block");
    doc.Phi = parse_matrix(field(j, "$", "Phi"), "$.Phi", doc.codomain.fan.lattice.rank,
                           doc.domain.fan.lattice.rank);
    doc.phi = parse_matrix(field(j, "$", "phi"), "$.phi", doc.codomain.beta->codomain_rank,
                           doc.domain.beta->codomain_rank);
    return doc;
}

std::variant<FanDocument, MapDocument> parse_document(const std::string& text,
                                                      const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (j.is_object() && j.contains("Phi")) return parse_map_document(text, base_dir);
    return parse_fan_document(text);
}

json int_to_json(const Int& v) {
    if (v <= kMaxExactDouble && v >= -kMaxExactDouble) return json(static_cast<long long>(v));
    return json(v.str());
}

namespace {

json vec_to_json(const Vec& v) {
    json arr = json::array();
    for (const Int& x : v) arr.push_back(int_to_json(x));
    return arr;
}

}  // namespace

json matrix_to_json(const IntMatrix& m) {
    json arr = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(vec_to_json(m.row(i)));
    return arr;
}

json lattice_to_json(const ColouredLattice& lattice) {
    json colours = json::array();
    for (const Colour& c : lattice.colours)
        colours.push_back(json{{"label", c.label}, {"point", vec_to_json(c.point)}});
    return json{{"rank", lattice.rank}, {"colours", colours}};
}

json coloured_cone_to_json(const ColouredCone& cc) {
    json gens = json::array();
    for (const Vec& r : cc.cone.rays) gens.push_back(vec_to_json(r));
    json colours = json::array();
    for (const std::string& label : cc.colours) colours.push_back(label);
    return json{{"generators", gens}, {"colours", colours}};
}

json fan_document_to_json(const FanDocument& doc) {
    json cones = json::array();
    for (const ColouredCone& cc : canonical_maximal(doc.fan)) cones.push_back(coloured_cone_to_json(cc));
    json out{{"lattice", lattice_to_json(doc.fan.lattice)}, {"fan", json{{"maximal_cones", cones}}}};
    if (doc.name) out["name"] = *doc.name;
    if (doc.beta) {
        json block{{"codomain_rank", doc.beta->codomain_rank}, {"matrix", matrix_to_json(doc.beta->matrix)}};
        if (doc.beta->codomain_colour_points) {
            json colours = json::array();
            for (const Colour& c : *doc.beta->codomain_colour_points)
                colours.push_back(json{{"label", c.label}, {"point", vec_to_json(c.point)}});
            block["codomain_colour_points"] = colours;
        }
        out["beta"] = block;
    }
    return out;
}

json group_to_json(const AbelianGroupStructure& g) {
    json torsion = json::array();
    for (const Int& d : g.torsion) torsion.push_back(int_to_json(d));
    return json{{"free_rank", g.free_rank}, {"torsion", torsion}, {"description", describe(g)}};
}

std::string serialize(const FanDocument& doc) { return fan_document_to_json(doc).dump(2) + "\n"; }

std::string serialize(const MapDocument& doc) {
    json out{{"domain", fan_document_to_json(doc.domain)},
             {"codomain", fan_document_to_json(doc.codomain)},
             {"Phi", matrix_to_json(doc.Phi)},
             {"phi", matrix_to_json(doc.phi)}};
    return out.dump(2) + "\n";
}

StackyColouredFan to_stacky(const FanDocument& doc) {
    if (!doc.beta) throw ValidationError("document has no beta block");
    return make_stacky(doc.fan, doc.beta->matrix);
}

StackyMap to_stacky_map(const MapDocument& doc) {
    return make_map(to_stacky(doc.domain), to_stacky(doc.codomain), doc.Phi, doc.phi);
}

FanDocument document_from_fan(const ColouredFan& fan, std::optional<std::string> name) {
    FanDocument doc;
    doc.name = std::move(name);
    doc.fan = fan;
    doc.fan.maximal_cones = canonical_maximal(fan);
    return doc;
}

FanDocument document_from_stacky(const StackyColouredFan& s, std::optional<std::string> name) {
    FanDocument doc = document_from_fan(s.fan, std::move(name));
    doc.beta = BetaBlock{s.codomain_rank(), s.beta, std::nullopt};
    return doc;
}

}  // namespace scfan
