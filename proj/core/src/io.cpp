#include "cubeprop/io.hpp"

#include <fstream>

#include "cubeprop/error.hpp"

namespace cubeprop {

namespace {

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(path + ": missing key '" + key + "'");
  return j.at(key);
}

std::size_t level_key(const std::string& key, const std::string& path) {
  std::size_t pos = 0;
  std::size_t n = 0;
  try {
    n = std::stoul(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != key.size() || key.empty()) throw ParseError(path + ": level key '" + key + "' is not a number");
  return n;
}

std::string string_at(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

Json to_json(const TCSet& x) {
  const RawTCSet raw = x.to_raw();
  Json out;
  out["trunc"] = raw.trunc;
  Json levels = Json::object();
  for (std::size_t n = 0; n < raw.levels.size(); ++n) levels[std::to_string(n)] = raw.levels[n];
  out["levels"] = levels;
  Json action = Json::object();
  for (const auto& [mor, table] : raw.action) action[mor] = table;
  out["action"] = action;
  return out;
}

Json to_json(const TCSetMor& f) {
  Json out;
  out["source"] = to_json(f.source());
  out["target"] = to_json(f.target());
  Json comps = Json::object();
  for (std::size_t n = 0; n <= f.trunc(); ++n) {
    Json table = Json::object();
    for (std::size_t x = 0; x < f.source().size(n); ++x) table[f.source().name(n, x)] = f.target().name(n, f(n, x));
    comps[std::to_string(n)] = table;
  }
  out["components"] = comps;
  return out;
}

TCSet tcset_from_json(const Json& j) {
  RawTCSet raw;
  const Json& trunc = field(j, "trunc", "$");
  if (!trunc.is_number_unsigned()) throw ParseError("$.trunc: expected a non-negative integer");
  raw.trunc = trunc.get<std::size_t>();
  const Json& levels = field(j, "levels", "$");
  if (!levels.is_object()) throw ParseError("$.levels: expected an object");
  raw.levels.resize(raw.trunc + 1);
  std::vector<bool> seen(raw.trunc + 1, false);
  for (const auto& [key, names] : levels.items()) {
    const std::string path = "$.levels." + key;
    const std::size_t n = level_key(key, path);
    if (n > raw.trunc) throw ParseError(path + ": level above the truncation");
    if (!names.is_array()) throw ParseError(path + ": expected an array of names");
    for (std::size_t i = 0; i < names.size(); ++i) {
      raw.levels[n].push_back(string_at(names[i], path + "[" + std::to_string(i) + "]"));
    }
    seen[n] = true;
  }
  for (std::size_t n = 0; n <= raw.trunc; ++n) {
    if (!seen[n]) throw ParseError("$.levels: level " + std::to_string(n) + " missing");
  }
  if (j.contains("action")) {
    const Json& action = j.at("action");
    if (!action.is_object()) throw ParseError("$.action: expected an object");
    for (const auto& [mor, table] : action.items()) {
      const std::string path = "$.action." + mor;
      CubeMor::parse(mor);
      if (!table.is_object()) throw ParseError(path + ": expected an object");
      auto& out = raw.action[mor];
      for (const auto& [from, to] : table.items()) out[from] = string_at(to, path + "." + from);
    }
  }
  return TCSet::validate(raw);
}

TCSetMor tcsetmor_from_json(const Json& j) {
  TCSet source = tcset_from_json(field(j, "source", "$"));
  TCSet target = tcset_from_json(field(j, "target", "$"));
  if (source.trunc() != target.trunc()) throw ParseError("$: source and target truncations differ");
  const Json& comps = field(j, "components", "$");
  TCSetMor::Components out(source.trunc() + 1);
  for (std::size_t n = 0; n <= source.trunc(); ++n) {
    const std::string path = "$.components." + std::to_string(n);
    const Json& table = field(comps, std::to_string(n), "$.components");
    for (std::size_t x = 0; x < source.size(n); ++x) {
      const std::string& name = source.name(n, x);
      const std::string to = string_at(field(table, name, path), path + "." + name);
      auto idx = target.index_of(n, to);
      if (!idx) throw ParseError(path + "." + name + ": '" + to + "' is not an element of the target");
      out[n].push_back(*idx);
    }
  }
  return TCSetMor::make(std::move(source), std::move(target), std::move(out));
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(path.string() + ": cannot write");
  out << j.dump(2) << "\n";
}

bool is_morphism_json(const Json& j) { return j.is_object() && j.contains("components"); }

}  // namespace cubeprop
