#pragma once

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "skein/category.hpp"
#include "skein/invariants.hpp"

namespace skein {

using nlohmann::json;

/// {"eta_power": k, "coeffs": [[num, den], ...], "approx": {"re": .., "im": ..}}
json to_json(const ExactValue& v);
ExactValue exact_value_from_json(const FieldPtr& field, const json& j);

json to_json(const YoungDiagram& d);
json to_json(const Params& p);
json to_json(const Structure& s, const PlumbingForest& f);

/// Human-facing dump of all category tables.
json category_to_json(const CategoryData& cat);

/// Complete table set, enough to rebuild the category without recomputation.
json category_cache_to_json(const CategoryData& cat);
CategoryData category_from_cache_json(const json& j);

/// Cache file name for the given parameters and convention key.
std::string cache_file_name(const Params& p);

/// Loads from dir when a matching file exists, else builds and stores.
CategoryData load_or_build_category(const Params& p, const std::optional<std::filesystem::path>& dir,
                                    CalibrationFamily family = CalibrationFamily::anchored);

json refined_table_to_json(const RefinedTable& t, const PlumbingForest& f);

}  // namespace skein
