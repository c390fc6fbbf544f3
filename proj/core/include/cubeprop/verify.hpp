#pragma once

// Per-theorem verification suites. Each check runs on an instance given as
// JSON, so any failing instance can be written to a file and replayed.
//
// Tags:
//   cube-laws          hom-set sizes, associativity and identities
//   adjunction         Gamma Delta = id and the two hom-set bijections
//   delta-preserves    Delta preserves products, coproducts, pullbacks, I-exponentials
//   nat-pullback       naturality squares of monos with point lifts are pullbacks
//   internalise        classifying maps of monos with point lifts
//   negmono            neg_map is a monomorphism
//   negpoints          negation at level 0 and point/morphism agreement
//   negneg-classifier  classification of double-negation-stable h-propositions
//   detruncate         sections transferred through Nabla_Z Gamma W
//   extensional        extensional monos of finite sets
//   cuts               cut/cocut transformer roundtrips and closedness
//   pi01               weakly Pi^0_1 families from cocuts and their extraction
//   ect                Kleene T/U and extended Church's thesis instances

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubeprop/io.hpp"

namespace cubeprop {

const std::vector<std::string>& all_tags();

struct SuiteConfig {
  std::size_t trunc = 2;
  std::size_t max_level_size = 6;
  std::uint64_t seed = 1;
  std::size_t count = 20;
  std::uint64_t fuel = 100000;
  std::set<std::string> tags;  // empty selects every tag

  // Throws PreconditionError on invalid bounds or unknown tags.
  void check() const;
  Json to_json() const;
};

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status s);

struct CheckResult {
  Status status = Status::Pass;
  std::string witness;
};

struct Record {
  std::string tag;
  std::string instance;  // short descriptor
  Status status = Status::Pass;
  std::string witness;
  Json data;                         // the instance, replayable
  std::optional<std::string> replay;  // file the instance was written to on FAIL
};

struct Report {
  Json config;
  std::vector<Record> records;  // sorted by (tag, instance)

  std::size_t count(Status s) const;
  bool passed() const { return count(Status::Fail) == 0; }
  Json to_json() const;
};

// Instances the suite would run for a configuration, as (tag, descriptor, data).
struct PlannedCheck {
  std::string tag;
  std::string instance;
  Json data;
};
std::vector<PlannedCheck> plan_checks(const SuiteConfig& config);

// Runs one check. Exceptions raised by the library become FAIL results.
CheckResult run_check(const std::string& tag, const Json& data);

// Runs the planned checks on a pool of worker threads. When `fail_dir` is
// set, every FAIL instance is written there as a replay file.
Report run_suite(const SuiteConfig& config, const std::optional<std::filesystem::path>& fail_dir = std::nullopt);

// Replay file: {"tag": ..., "instance": ..., "data": ...}.
Json replay_file(const Record& record);
Record replay(const Json& file);

}  // namespace cubeprop
