#pragma once

#include "scfan/stacky.hpp"

#include <optional>
#include <string>

namespace scfan {

bool is_toroidal(const ColouredFan& fan);

// The three equivalent characterizations of an unstable cone; implemented
// along genuinely different computational routes so they can cross-check
// each other.
enum class UnstableMethod {
    DualVanishing = 1,     // covectors nonnegative on the image vanish on it
    RelativeInterior = 2,  // the image cone is a linear subspace
    KernelFace = 3,        // the kernel slice is not confined to a proper face
};

bool is_unstable(const StackyColouredFan& s, const ColouredCone& tau, UnstableMethod method);

// Same check against a precomputed face closure of s.fan.
bool is_unstable_in_closure(const StackyColouredFan& s, const std::vector<ColouredCone>& closure,
                            const ColouredCone& tau, UnstableMethod method);

struct CheckItem {
    enum class Status { Pass, Fail, NotEvaluated };
    Status status = Status::NotEvaluated;
    std::string witness;

    bool passed() const { return status == Status::Pass; }
};

struct IsoVerdict {
    CheckItem iso1, iso2, iso3;
    bool overall = false;
};

// Monoid isomorphism sigma1 . N1 -> sigma2 . N2 decided on the lattice level:
// image cone equal, injective on the cone group, image of the cone group
// equal to the target cone group.
bool monoid_iso_check(const IntMatrix& phi, const Cone& sigma1, const Cone& sigma2);

IsoVerdict check_isomorphism(const StackyMap& m);

struct GmsVerdict {
    CheckItem gms1, gms2, gms3, gms4;
    std::optional<ColouredCone> tau;  // preimage of the trivial coloured cone
    bool overall = false;
};

GmsVerdict check_gms_morphism(const StackyMap& m);

enum class GmsFailure { OK, NoUniqueMaxUnstable, IncompatibleImage };

struct GmsFanResult {
    bool exists = false;
    GmsFailure reason = GmsFailure::OK;
    std::optional<ColouredCone> tau;
    ColouredLattice gms_lattice;
    ColouredFan gms_fan;
    IntMatrix projection_phi;  // L -> L_gms
    IntMatrix Phi;             // N -> L_gms
};

GmsFanResult gms_fan(const StackyColouredFan& s);

// The map (Phi, phi) produced by a successful gms_fan, into (gms_fan, id).
StackyMap gms_map(const StackyColouredFan& s, const GmsFanResult& result);

std::string describe(const GmsFailure& reason);

}  // namespace scfan
