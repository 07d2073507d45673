#include "gorenstein/serialize.hpp"

#include "gorenstein/errors.hpp"

#include <map>
#include <sstream>

namespace gorenstein {

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

std::string fraction_text(const Json& cell) {
    if (cell.is_string()) return cell.get<std::string>();
    if (cell.is_number_integer()) return std::to_string(cell.get<std::int64_t>());
    throw std::invalid_argument("fraction must be a string like \"a/b\"");
}

}  // namespace

Json count_to_json(const BigInt& n) {
    if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
    return n.get_str();
}

Json vector_to_json(const ModOneVector& x) {
    Json row = Json::array();
    for (const auto& s : x.to_strings()) row.push_back(s);
    return row;
}

ModOneVector vector_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("vector must be an array of fractions");
    std::vector<std::string> cells;
    for (const auto& cell : j) cells.push_back(fraction_text(cell));
    return ModOneVector::parse(cells);
}

Json group_to_json(const HeightedGroup& g) {
    Json gens = Json::array();
    for (const auto& x : g.generators()) gens.push_back(vector_to_json(x));
    Json out;
    out["N"] = g.width();
    out["generators"] = std::move(gens);
    out["order"] = g.order();
    return out;
}

HeightedGroup group_from_json(const Json& j, std::size_t cap) {
    const auto width = require(j, "N").get<std::int64_t>();
    if (width < 1) throw std::invalid_argument("N must be positive");
    std::vector<ModOneVector> gens;
    for (const auto& row : require(j, "generators")) {
        gens.push_back(vector_from_json(row));
        if (gens.back().size() != static_cast<std::size_t>(width)) {
            throw std::invalid_argument("generator length differs from N");
        }
    }
    HeightedGroup g = close_generators(gens, static_cast<std::size_t>(width), cap);
    if (j.contains("order") && j.at("order").get<std::size_t>() != g.order()) {
        throw InvalidGroup("declared order " + std::to_string(j.at("order").get<std::size_t>()) +
                           " but generators close to " + std::to_string(g.order()));
    }
    return g;
}

Json class_data_to_json(const ClassData& d) {
    Json subsets = Json::array();
    for (const auto& s : d.subsets) subsets.push_back(s);
    Json out;
    out["k"] = d.k;
    out["chain"] = d.chain;
    out["subsets"] = std::move(subsets);
    return out;
}

ClassData class_data_from_json(const Json& j) {
    ClassData d;
    d.k = require(j, "k").get<std::int64_t>();
    d.chain = require(j, "chain").get<std::vector<std::int64_t>>();
    d.subsets = require(j, "subsets").get<std::vector<std::vector<int>>>();
    validate_class_data(d);
    return d;
}

Json simplex_to_json(const SimplexModel& s) {
    Json out;
    out["d"] = s.dimension();
    out["vertices"] = s.vertices();
    return out;
}

SimplexModel simplex_from_json(const Json& j) {
    auto vertices = require(j, "vertices").get<std::vector<std::vector<std::int64_t>>>();
    SimplexModel s = SimplexModel::from_vertices(std::move(vertices));
    if (j.contains("d") && j.at("d").get<std::size_t>() != s.dimension()) {
        throw std::invalid_argument("declared d differs from the vertex data");
    }
    return s;
}

Json class_record_to_json(const ClassRecord& r) {
    Json gens = Json::array();
    for (const auto& x : r.group.generators()) gens.push_back(vector_to_json(x));
    Json subsets = Json::array();
    for (const auto& s : r.data.subsets) subsets.push_back(s);
    Json out;
    out["chain"] = r.data.chain;
    out["subsets"] = std::move(subsets);
    out["N"] = r.group.width();
    out["generators"] = std::move(gens);
    out["hstar"] = r.hstar;
    return out;
}

Json result_to_json(const ClassificationResult& result) {
    Json census = Json::object();
    for (const auto& [s, c] : result.census.counts) census[std::to_string(s)] = count_to_json(c);
    Json classes = Json::array();
    for (const auto& r : result.classes) classes.push_back(class_record_to_json(r));
    Json out;
    out["v"] = result.v;
    out["k"] = result.k;
    out["total"] = count_to_json(result.total);
    out["census"] = std::move(census);
    out["classes"] = std::move(classes);
    return out;
}

std::uint64_t subset_mask(const std::vector<int>& subset) {
    std::uint64_t mask = 0;
    for (int step : subset) {
        if (step < 1 || step > 64) throw std::out_of_range("creation step outside 1..64");
        mask |= std::uint64_t{1} << (step - 1);
    }
    return mask;
}

std::string run_length(const std::vector<std::int64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size();) {
        std::size_t j = i;
        while (j < values.size() && values[j] == values[i]) ++j;
        if (!out.empty()) out += ';';
        out += std::to_string(values[i]) + "x" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string join_ints(const std::vector<std::int64_t>& values, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string csv_header() { return "chain,subsets,N,dimension,hstar"; }

std::string csv_row(const ClassRecord& r) {
    std::string subsets;
    for (std::size_t i = 0; i < r.data.subsets.size(); ++i) {
        if (i) subsets += ';';
        subsets += std::to_string(subset_mask(r.data.subsets[i]));
    }
    std::ostringstream os;
    os << join_ints(r.data.chain, "/") << ',' << subsets << ',' << r.group.width() << ',' << r.dimension << ','
       << run_length(r.hstar);
    return os.str();
}

void write_csv(std::ostream& out, const ClassificationResult& result) {
    out << csv_header() << '\n';
    for (const auto& r : result.classes) out << csv_row(r) << '\n';
}

void write_text_summary(std::ostream& out, const ClassificationResult& result) {
    // shortest chains first, then lexicographic
    std::map<std::pair<std::size_t, std::vector<std::int64_t>>, std::size_t> per_chain;
    for (const auto& r : result.classes) ++per_chain[{r.data.chain.size(), r.data.chain}];
    out << "v=" << result.v << " k=" << result.k << '\n';
    for (const auto& [chain, n] : per_chain) out << "  " << join_ints(chain.second, "<") << ": " << n << '\n';
    out << "total " << result.total.get_str() << '\n';
}

}  // namespace gorenstein
