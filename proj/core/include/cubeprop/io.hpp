#pragma once

// JSON interchange for truncated cubical sets and their morphisms.
//
// Presheaf:
//   {"trunc": D,
//    "levels": {"0": ["a", "b"], "1": [...], ...},
//    "action": {"1->0:[c0]": {"x": "a", ...}, ...}}
// Tables for identities may be omitted, as may tables that are
// name-preserving (see TCSet::validate).
//
// Morphism:
//   {"source": <presheaf>, "target": <presheaf>,
//    "components": {"0": {"a": "a'", ...}, ...}}

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "cubeprop/tcset.hpp"

namespace cubeprop {

using Json = nlohmann::json;

Json to_json(const TCSet& x);
Json to_json(const TCSetMor& f);
// Both throw ParseError naming the offending JSON path, or the validation
// error of the decoded data.
TCSet tcset_from_json(const Json& j);
TCSetMor tcsetmor_from_json(const Json& j);

// Reads a file; syntax errors report the byte offset.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

// A file holding either a presheaf or a morphism, detected by its keys.
bool is_morphism_json(const Json& j);

}  // namespace cubeprop
