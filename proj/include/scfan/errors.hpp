#pragma once

#include <stdexcept>
#include <string>

namespace scfan {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct NotStronglyConvex : Error {
    explicit NotStronglyConvex(const std::string& msg) : Error("cone not strongly convex: " + msg) {}
};

struct NotAFace : Error {
    explicit NotAFace(const std::string& msg) : Error("not a face: " + msg) {}
};

struct NotSaturated : Error {
    explicit NotSaturated(const std::string& msg) : Error("sublattice not saturated: " + msg) {}
};

struct ConeNotInFan : Error {
    explicit ConeNotInFan(const std::string& msg) : Error("cone not in fan: " + msg) {}
};

struct MapMismatch : Error {
    explicit MapMismatch(const std::string& msg) : Error("map mismatch: " + msg) {}
};

struct CfViolation : Error {
    explicit CfViolation(const std::string& msg) : Error("fantastack condition violated: " + msg) {}
};

struct Cf1Violation : CfViolation {
    explicit Cf1Violation(const std::string& msg) : CfViolation("CF1: " + msg) {}
};

struct NotANonColouredRay : Error {
    explicit NotANonColouredRay(const std::string& msg) : Error("not a non-coloured ray: " + msg) {}
};

struct InvalidMap : Error {
    explicit InvalidMap(const std::string& msg) : Error("invalid map of stacky coloured fans: " + msg) {}
};

struct InvalidFan : Error {
    explicit InvalidFan(const std::string& msg) : Error("invalid coloured fan: " + msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error("validation error: " + msg) {}
};

}  // namespace scfan
