#pragma once

#include "scfan/stacky.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <variant>

namespace scfan {

// File-format counterpart of a coloured fan, optionally with a beta block
// turning it into a stacky coloured fan.
struct BetaBlock {
    std::size_t codomain_rank = 0;
    IntMatrix matrix;  // rows = codomain coordinates, beta(e_j) is column j
    std::optional<std::vector<Colour>> codomain_colour_points;
};

struct FanDocument {
    std::optional<std::string> name;
    ColouredFan fan;
    std::optional<BetaBlock> beta;
};

struct MapDocument {
    FanDocument domain;
    FanDocument codomain;
    IntMatrix Phi;
    IntMatrix phi;
};

// Structural parsing throws ParseError with a path-addressed location;
// semantic checks (fan axioms, finite cokernel, colour-point override)
// throw ValidationError unless validate is false.
FanDocument parse_fan_document(const std::string& text, bool validate = true);

// Domain/codomain entries may be inline documents or paths relative to
// base_dir; referenced documents are always validated.
MapDocument parse_map_document(const std::string& text, const std::filesystem::path& base_dir);

std::variant<FanDocument, MapDocument> parse_document(const std::string& text,
                                                      const std::filesystem::path& base_dir);

// Canonical serialization: sorted keys, sorted canonical cones, integers as
// decimal strings once they exceed 2^53 - 1.
std::string serialize(const FanDocument& doc);
std::string serialize(const MapDocument& doc);

nlohmann::json fan_document_to_json(const FanDocument& doc);
nlohmann::json lattice_to_json(const ColouredLattice& lattice);
nlohmann::json coloured_cone_to_json(const ColouredCone& cc);
nlohmann::json matrix_to_json(const IntMatrix& m);
nlohmann::json int_to_json(const Int& v);
nlohmann::json group_to_json(const AbelianGroupStructure& g);

StackyColouredFan to_stacky(const FanDocument& doc);  // requires a beta block
StackyMap to_stacky_map(const MapDocument& doc);

FanDocument document_from_fan(const ColouredFan& fan, std::optional<std::string> name = {});
FanDocument document_from_stacky(const StackyColouredFan& s, std::optional<std::string> name = {});

FanDocument load_fan_document(const std::filesystem::path& path, bool validate = true);

}  // namespace scfan
