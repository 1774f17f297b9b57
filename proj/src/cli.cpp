#include "scfan/cli.hpp"

#include "scfan/criteria.hpp"
#include "scfan/errors.hpp"
#include "scfan/fantastack.hpp"
#include "scfan/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>

namespace scfan {

namespace {

using nlohmann::json;

Vec parse_cli_vector(const std::string& text) {
    Vec v;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw ParseError("empty coordinate in '" + text + "'");
        try {
            v.push_back(Int(cur));
        } catch (const std::exception&) {
            throw ParseError("bad coordinate '" + cur + "'");
        }
        cur.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(c)))
            cur += c;
    }
    flush();
    return v;
}

std::vector<Vec> parse_cli_vectors(const std::string& text) {
    std::vector<Vec> vs;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            vs.push_back(parse_cli_vector(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) vs.push_back(parse_cli_vector(cur));
    return vs;
}

FanDocument load_doc(const std::string& path, bool validate = true) {
    return load_fan_document(std::filesystem::path(path), validate);
}

StackyColouredFan load_stacky(const std::string& path) { return to_stacky(load_doc(path)); }

StackyMap load_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    MapDocument doc = parse_map_document(buf.str(), std::filesystem::path(path).parent_path());
    return to_stacky_map(doc);
}

void write_document(const std::string& path, const FanDocument& doc) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << serialize(doc);
}

void emit(std::ostream& out, bool json_mode, const json& report, const std::string& human) {
    if (json_mode)
        out << report.dump(2) << "\n";
    else
        out << human;
}

std::string status_string(const CheckItem& item) {
    switch (item.status) {
        case CheckItem::Status::Pass: return "pass";
        case CheckItem::Status::Fail: return "fail";
        case CheckItem::Status::NotEvaluated: return "not evaluated";
    }
    return "?";
}

json item_to_json(const CheckItem& item) {
    return json{{"status", status_string(item)}, {"witness", item.witness}};
}

std::string item_line(const std::string& name, const CheckItem& item) {
    std::string line = name + ": " + status_string(item);
    if (!item.witness.empty()) line += " (" + item.witness + ")";
    return line + "\n";
}

int cmd_validate(const std::string& fan_path, bool json_mode, std::ostream& out) {
    FanDocument doc = load_doc(fan_path, false);
    ValidationReport report = validate_fan(doc.fan);
    if (doc.beta && report.ok()) {
        if (!cokernel_structure(doc.beta->matrix).finite())
            report.violations.push_back({"beta", "cokernel is infinite"});
    }
    json violations = json::array();
    for (const Violation& v : report.violations)
        violations.push_back(json{{"axiom", v.axiom}, {"detail", v.detail}});
    std::string human = report.ok() ? "valid\n" : "invalid\n";
    for (const Violation& v : report.violations) human += "  " + v.axiom + ": " + v.detail + "\n";
    emit(out, json_mode, json{{"valid", report.ok()}, {"violations", violations}}, human);
    return report.ok() ? 0 : 1;
}

int cmd_kbeta(const std::string& fan_path, bool json_mode, std::ostream& out) {
    StackyColouredFan s = load_stacky(fan_path);
    AbelianGroupStructure g = k_beta(s);
    emit(out, json_mode, group_to_json(g), describe(g) + "\n");
    return 0;
}

int cmd_toroidal(const std::string& fan_path, bool json_mode, std::ostream& out) {
    FanDocument doc = load_doc(fan_path);
    bool verdict = is_toroidal(doc.fan);
    emit(out, json_mode, json{{"toroidal", verdict}}, verdict ? "toroidal\n" : "not toroidal\n");
    return verdict ? 0 : 1;
}

int cmd_decolour(const std::string& fan_path, const std::string& out_path, bool json_mode,
                 std::ostream& out) {
    FanDocument doc = load_doc(fan_path);
    FanDocument result = doc;
    result.fan = decolour(doc.fan);
    result.fan.maximal_cones = canonical_maximal(result.fan);
    write_document(out_path, result);
    emit(out, json_mode, fan_document_to_json(result), "decoloured fan written to " + out_path + "\n");
    return 0;
}

int cmd_unstable(const std::string& fan_path, const std::string& cone_text, int method,
                 bool json_mode, std::ostream& out) {
    StackyColouredFan s = load_stacky(fan_path);
    Cone underlying = cone_from_generators(s.fan.lattice.rank, parse_cli_vectors(cone_text));
    std::optional<ColouredCone> tau = find_in_closure(s.fan, underlying);
    if (!tau) throw ConeNotInFan(to_string(underlying));

    json methods = json::object();
    bool verdict = false;
    if (method == 0) {
        bool m1 = is_unstable(s, *tau, UnstableMethod::DualVanishing);
        bool m2 = is_unstable(s, *tau, UnstableMethod::RelativeInterior);
        bool m3 = is_unstable(s, *tau, UnstableMethod::KernelFace);
        if (m1 != m2 || m2 != m3) throw Error("unstable methods disagree");
        verdict = m2;
        methods["1"] = m1;
        methods["2"] = m2;
        methods["3"] = m3;
    } else {
        verdict = is_unstable(s, *tau, static_cast<UnstableMethod>(method));
        methods[std::to_string(method)] = verdict;
    }
    emit(out, json_mode, json{{"unstable", verdict}, {"methods", methods}},
         std::string(verdict ? "unstable" : "stable") + " " + to_string(*tau) + "\n");
    return verdict ? 0 : 1;
}

json gms_result_to_json(const GmsFanResult& result) {
    json report{{"exists", result.exists}, {"reason", describe(result.reason)}};
    if (result.tau) report["tau"] = coloured_cone_to_json(*result.tau);
    if (result.exists || result.reason == GmsFailure::IncompatibleImage) {
        json cones = json::array();
        for (const ColouredCone& cc : result.gms_fan.maximal_cones)
            cones.push_back(coloured_cone_to_json(cc));
        report["gms_lattice"] = lattice_to_json(result.gms_lattice);
        report["gms_fan"] = json{{"maximal_cones", cones}};
        report["projection_phi"] = matrix_to_json(result.projection_phi);
        report["Phi"] = matrix_to_json(result.Phi);
    }
    return report;
}

int cmd_gms(const std::string& fan_path, bool json_mode, std::ostream& out) {
    StackyColouredFan s = load_stacky(fan_path);
    GmsFanResult result = gms_fan(s);
    std::string human;
    if (result.exists) {
        human += "exists\n";
        human += "tau: " + to_string(*result.tau) + "\n";
        human += "gms lattice: rank " + std::to_string(result.gms_lattice.rank) + "\n";
        for (const Colour& c : result.gms_lattice.colours)
            human += "  colour " + c.label + " at " + to_string(c.point) + "\n";
        for (const ColouredCone& cc : result.gms_fan.maximal_cones)
            human += "gms cone: " + to_string(cc) + "\n";
    } else {
        human += "does not exist: " + describe(result.reason) + "\n";
    }
    emit(out, json_mode, gms_result_to_json(result), human);
    return result.exists ? 0 : 1;
}

int cmd_iso(const std::string& map_path, bool json_mode, std::ostream& out) {
    StackyMap m = load_map(map_path);
    ValidationReport report = validate_map(m);
    if (!report.ok())
        throw InvalidMap(report.violations.front().axiom + ": " + report.violations.front().detail);
    IsoVerdict v = check_isomorphism(m);
    json j{{"overall", v.overall},
           {"iso1", item_to_json(v.iso1)},
           {"iso2", item_to_json(v.iso2)},
           {"iso3", item_to_json(v.iso3)}};
    std::string human = item_line("iso1", v.iso1) + item_line("iso2", v.iso2) +
                        item_line("iso3", v.iso3) +
                        (v.overall ? "isomorphism\n" : "not an isomorphism\n");
    emit(out, json_mode, j, human);
    return v.overall ? 0 : 1;
}

int cmd_gms_check(const std::string& map_path, bool json_mode, std::ostream& out) {
    StackyMap m = load_map(map_path);
    ValidationReport report = validate_map(m);
    if (!report.ok())
        throw InvalidMap(report.violations.front().axiom + ": " + report.violations.front().detail);
    GmsVerdict v = check_gms_morphism(m);
    json j{{"overall", v.overall},
           {"gms1", item_to_json(v.gms1)},
           {"gms2", item_to_json(v.gms2)},
           {"gms3", item_to_json(v.gms3)},
           {"gms4", item_to_json(v.gms4)}};
    if (v.tau) j["tau"] = coloured_cone_to_json(*v.tau);
    std::string human = item_line("gms1", v.gms1) + item_line("gms2", v.gms2) +
                        item_line("gms3", v.gms3) + item_line("gms4", v.gms4) +
                        (v.overall ? "good moduli space morphism\n" : "not a good moduli space morphism\n");
    emit(out, json_mode, j, human);
    return v.overall ? 0 : 1;
}

json cf_to_json(const CfReport& cf) {
    return json{{"cf1", item_to_json(cf.cf1)},
                {"cf2", item_to_json(cf.cf2)},
                {"cf3", item_to_json(cf.cf3)},
                {"cf4", item_to_json(cf.cf4)}};
}

int emit_construction(const StackyColouredFan& result, const std::string& name,
                      const std::string& out_path, bool json_mode, std::ostream& out) {
    FanDocument doc = document_from_stacky(result, name);
    if (!out_path.empty()) write_document(out_path, doc);
    std::string human;
    human += "lattice rank " + std::to_string(result.fan.lattice.rank) + "\n";
    for (const ColouredCone& cc : result.fan.maximal_cones) human += "cone: " + to_string(cc) + "\n";
    if (!out_path.empty()) human += "written to " + out_path + "\n";
    emit(out, json_mode, json{{"document", fan_document_to_json(doc)}}, human);
    return 0;
}

int cmd_fantastack(const std::string& fan_path, const std::string& extra, const std::string& out_path,
                   bool json_mode, std::ostream& out) {
    FanDocument doc = load_doc(fan_path);
    std::vector<Vec> columns;
    for (const Colour& c : doc.fan.lattice.colours) columns.push_back(c.point);
    if (!extra.empty())
        for (Vec& v : parse_cli_vectors(extra)) columns.push_back(std::move(v));
    FantastackInput input =
        make_fantastack_input(doc.fan, IntMatrix::from_columns(doc.fan.lattice.rank, columns));
    CfReport cf = check_cf(input);
    if (!cf.ok()) {
        std::string human = item_line("CF1", cf.cf1) + item_line("CF2", cf.cf2) +
                            item_line("CF3", cf.cf3) + item_line("CF4", cf.cf4);
        emit(out, json_mode, json{{"cf", cf_to_json(cf)}, {"ok", false}}, human);
        return 1;
    }
    return emit_construction(build_fantastack(input), "fantastack", out_path, json_mode, out);
}

int cmd_cox(const std::string& fan_path, const std::string& out_path, bool json_mode,
            std::ostream& out) {
    FanDocument doc = load_doc(fan_path);
    FantastackInput input = cox_beta(doc.fan);
    return emit_construction(build_fantastack(input), "cox", out_path, json_mode, out);
}

int cmd_rootstack(const std::string& fan_path, const std::string& ray_text, long long order,
                  const std::string& out_path, bool json_mode, std::ostream& out) {
    FanDocument doc = load_doc(fan_path);
    FantastackInput input = root_stack_beta(doc.fan, parse_cli_vector(ray_text), Int(order));
    return emit_construction(build_fantastack(input), "rootstack", out_path, json_mode, out);
}

int cmd_classgroup(const std::string& fan_path, bool json_mode, std::ostream& out) {
    FanDocument doc = load_doc(fan_path);
    AbelianGroupStructure g = class_group(doc.fan);
    emit(out, json_mode, group_to_json(g), describe(g) + "\n");
    return 0;
}

int cmd_product(const std::string& fan_path1, const std::string& fan_path2,
                const std::string& out_path, bool json_mode, std::ostream& out) {
    FanDocument a = load_doc(fan_path1);
    FanDocument b = load_doc(fan_path2);
    if (a.beta.has_value() != b.beta.has_value())
        throw ValidationError("product requires both or neither factor to carry beta");
    FanDocument result;
    result.fan = product(a.fan, b.fan);
    if (a.beta)
        result.beta = BetaBlock{a.beta->codomain_rank + b.beta->codomain_rank,
                                block_diag(a.beta->matrix, b.beta->matrix), std::nullopt};
    write_document(out_path, result);
    emit(out, json_mode, fan_document_to_json(result), "product written to " + out_path + "\n");
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact combinatorics of stacky coloured fans"};
    app.name("scfan");
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit the canonical machine-readable report");

    std::string fan_path, fan_path2, map_path, out_path, cone_text, ray_text, extra_columns;
    int method = 0;
    long long order = 1;

    CLI::App* validate = app.add_subcommand("validate", "check the coloured fan axioms");
    validate->add_option("FAN", fan_path)->required();

    CLI::App* kbeta_cmd = app.add_subcommand("kbeta", "structure of the quotienting group");
    kbeta_cmd->add_option("FAN", fan_path)->required();

    CLI::App* toroidal = app.add_subcommand("toroidal", "is the colour set empty");
    toroidal->add_option("FAN", fan_path)->required();

    CLI::App* decolour_cmd = app.add_subcommand("decolour", "empty every colour set");
    decolour_cmd->add_option("FAN", fan_path)->required();
    decolour_cmd->add_option("-o,--output", out_path)->required();

    CLI::App* unstable = app.add_subcommand("unstable", "is the cone unstable");
    unstable->add_option("FAN", fan_path)->required();
    unstable->add_option("--cone", cone_text, "generators, e.g. 1,0;0,1")->required();
    unstable->add_option("--method", method)->check(CLI::Range(1, 3));

    CLI::App* gms = app.add_subcommand("gms", "construct the good moduli space fan");
    gms->add_option("FAN", fan_path)->required();

    CLI::App* iso = app.add_subcommand("iso", "isomorphism criteria for a map");
    iso->add_option("MAP", map_path)->required();

    CLI::App* gms_check = app.add_subcommand("gms-check", "good moduli space criteria for a map");
    gms_check->add_option("MAP", map_path)->required();

    CLI::App* fantastack = app.add_subcommand("fantastack", "build the lifted stacky fan");
    fantastack->add_option("FAN", fan_path)->required();
    fantastack->add_option("--extra-columns", extra_columns, "marked points, e.g. 1,0;1,1");
    fantastack->add_option("-o,--output", out_path);

    CLI::App* cox = app.add_subcommand("cox", "fantastack of the Cox construction");
    cox->add_option("FAN", fan_path)->required();
    cox->add_option("-o,--output", out_path);

    CLI::App* rootstack = app.add_subcommand("rootstack", "Cox construction with one scaled ray");
    rootstack->add_option("FAN", fan_path)->required();
    rootstack->add_option("--ray", ray_text)->required();
    rootstack->add_option("--order", order)->required()->check(CLI::PositiveNumber);
    rootstack->add_option("-o,--output", out_path);

    CLI::App* classgroup = app.add_subcommand("classgroup", "divisor class group of the fan");
    classgroup->add_option("FAN", fan_path)->required();

    CLI::App* product_cmd = app.add_subcommand("product", "product of two fans");
    product_cmd->add_option("FAN1", fan_path)->required();
    product_cmd->add_option("FAN2", fan_path2)->required();
    product_cmd->add_option("-o,--output", out_path)->required();

    app.require_subcommand(1);
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(fan_path, json_mode, out);
        if (kbeta_cmd->parsed()) return cmd_kbeta(fan_path, json_mode, out);
        if (toroidal->parsed()) return cmd_toroidal(fan_path, json_mode, out);
        if (decolour_cmd->parsed()) return cmd_decolour(fan_path, out_path, json_mode, out);
        if (unstable->parsed()) return cmd_unstable(fan_path, cone_text, method, json_mode, out);
        if (gms->parsed()) return cmd_gms(fan_path, json_mode, out);
        if (iso->parsed()) return cmd_iso(map_path, json_mode, out);
        if (gms_check->parsed()) return cmd_gms_check(map_path, json_mode, out);
        if (fantastack->parsed())
            return cmd_fantastack(fan_path, extra_columns, out_path, json_mode, out);
        if (cox->parsed()) return cmd_cox(fan_path, out_path, json_mode, out);
        if (rootstack->parsed()) return cmd_rootstack(fan_path, ray_text, order, out_path, json_mode, out);
        if (classgroup->parsed()) return cmd_classgroup(fan_path, json_mode, out);
        if (product_cmd->parsed()) return cmd_product(fan_path, fan_path2, out_path, json_mode, out);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no command\n";
    return 2;
}

}  // namespace scfan
