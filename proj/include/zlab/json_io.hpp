#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "zlab/classify.hpp"
#include "zlab/evaluate.hpp"
#include "zlab/lemmas.hpp"
#include "zlab/poset.hpp"
#include "zlab/variety.hpp"
#include "zlab/verify.hpp"

namespace zlab {

using json = nlohmann::ordered_json;

/// {"size": n, "table": [[...], ...]}, table[a][b] = a -> b.
json to_json(const Zroupoid& alg);
/// Throws std::invalid_argument on a malformed document.
Zroupoid zroupoid_from_json(const json& doc);

json to_json(const Identity& id);
json to_json(const Assignment& env);
json to_json(const SatisfactionResult& result);
json to_json(const ClassReport& report);
json to_json(const LemmaReport& report);
json to_json(const Witness& witness);
json to_json(const ComparisonReport& report);
json to_json(const PosetReport& report);
json to_json(const VerifyReport& report);

/// Reads and parses an algebra file; errors name the path.
Zroupoid read_algebra(const std::filesystem::path& path);

/// Writes via a sibling temporary file and rename, so readers never see a
/// partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace zlab
