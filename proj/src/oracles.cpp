#include "gorenstein/oracles.hpp"

#include "gorenstein/tower.hpp"

namespace gorenstein {

namespace {

OracleOutcome simplex_roundtrip(const ClassRecord& record) {
    OracleOutcome out;
    out.name = "simplex-roundtrip";
    try {
        const SimplexModel simplex = group_to_simplex(record.group);
        const HeightedGroup back = simplex_to_group(simplex);
        if (BigInt(static_cast<unsigned long>(back.order())) != simplex.normalized_volume()) {
            out.detail = "|Lambda| differs from the normalized volume";
        } else if (canonical_key(reduce(back)) != record.key) {
            out.detail = "round trip changed the canonical key";
        } else if (hstar_vector(back, static_cast<std::int64_t>(simplex.dimension())) != record.hstar) {
            out.detail = "h*-vector of the simplex differs";
        } else if (!zero_coordinates(back).empty()) {
            out.detail = "simplex is a lattice pyramid";
        } else {
            out.passed = true;
        }
    } catch (const std::exception& e) {
        out.detail = e.what();
    }
    return out;
}

OracleOutcome ehrhart(const ClassRecord& record, std::size_t max_dim) {
    OracleOutcome out;
    out.name = "ehrhart";
    if (static_cast<std::size_t>(record.dimension) > max_dim) {
        out.skipped = true;
        out.passed = true;
        out.detail = "dimension " + std::to_string(record.dimension) + " above cap";
        return out;
    }
    try {
        const SimplexModel simplex = group_to_simplex(record.group);
        for (std::int64_t m = 1; m <= 2; ++m) {
            const std::uint64_t direct = ehrhart_count(simplex, m, max_dim);
            const BigInt predicted = ehrhart_from_hstar(record.hstar, m);
            if (BigInt(static_cast<unsigned long>(direct)) != predicted) {
                out.detail = "m=" + std::to_string(m) + ": counted " + std::to_string(direct) + ", h* predicts " +
                             predicted.get_str();
                return out;
            }
        }
        out.passed = true;
    } catch (const std::exception& e) {
        out.detail = e.what();
    }
    return out;
}

OracleOutcome bijection(const ClassRecord& record) {
    OracleOutcome out;
    out.name = "bijection";
    try {
        const ClassData back = extract_data(record.group, record.data.k);
        out.passed = back == record.data;
        if (!out.passed) out.detail = "extracted " + back.to_string();
    } catch (const std::exception& e) {
        out.detail = e.what();
    }
    return out;
}

}  // namespace

std::vector<OracleOutcome> run_class_oracles(const ClassRecord& record, const OracleFlags& flags,
                                             std::size_t max_ehrhart_dim) {
    std::vector<OracleOutcome> out;
    if (flags.simplex_roundtrip) out.push_back(simplex_roundtrip(record));
    if (flags.ehrhart) out.push_back(ehrhart(record, max_ehrhart_dim));
    if (flags.bijection) out.push_back(bijection(record));
    return out;
}

}  // namespace gorenstein
