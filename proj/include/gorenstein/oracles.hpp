#pragma once

// Independent cross-checks that can be attached to every classified group.

#include "gorenstein/classify.hpp"
#include "gorenstein/simplex.hpp"

#include <string>
#include <vector>

namespace gorenstein {

struct OracleFlags {
    bool simplex_roundtrip = false;
    bool ehrhart = false;
    bool bijection = false;

    bool any() const { return simplex_roundtrip || ehrhart || bijection; }
};

struct OracleOutcome {
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

/// simplex-roundtrip: group -> simplex -> group -> reduce lands on the same
///   canonical key, |Lambda| equals the normalized volume, h* agrees, and
///   the simplex is not a lattice pyramid.
/// ehrhart: direct lattice-point counts at m = 1, 2 match the h*-vector;
///   skipped above `max_ehrhart_dim`.
/// bijection: extract_data recovers the class data.
std::vector<OracleOutcome> run_class_oracles(const ClassRecord& record, const OracleFlags& flags,
                                             std::size_t max_ehrhart_dim = kDefaultEhrhartDimCap);

}  // namespace gorenstein
