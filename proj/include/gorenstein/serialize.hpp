#pragma once

// JSON / CSV / text encodings. Fractions are always lowest-terms strings.

#include "gorenstein/classify.hpp"
#include "gorenstein/simplex.hpp"

#include "json.hpp"

#include <ostream>
#include <string>

namespace gorenstein {

using Json = nlohmann::ordered_json;

/// Integer when it fits in 64 bits, decimal string otherwise.
Json count_to_json(const BigInt& n);

Json vector_to_json(const ModOneVector& x);
ModOneVector vector_from_json(const Json& j);

/// {"N", "generators", "order"}; element tables are never written.
Json group_to_json(const HeightedGroup& g);
/// "order" is optional on input; when present it must match the closure.
HeightedGroup group_from_json(const Json& j, std::size_t cap = kDefaultClosureCap);

Json class_data_to_json(const ClassData& d);
ClassData class_data_from_json(const Json& j);

Json simplex_to_json(const SimplexModel& s);
SimplexModel simplex_from_json(const Json& j);

Json class_record_to_json(const ClassRecord& r);
Json result_to_json(const ClassificationResult& result);

/// J as an integer with bit (j-1) set for each creation step j in J.
std::uint64_t subset_mask(const std::vector<int>& subset);
/// "1x1;0x2;1x1" style run-length encoding.
std::string run_length(const std::vector<std::int64_t>& values);

std::string csv_header();
std::string csv_row(const ClassRecord& r);
void write_csv(std::ostream& out, const ClassificationResult& result);

/// Per-chain class counts followed by the total.
void write_text_summary(std::ostream& out, const ClassificationResult& result);

std::string join_ints(const std::vector<std::int64_t>& values, const std::string& sep);

}  // namespace gorenstein
