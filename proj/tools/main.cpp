// cubeprop: command line front end for the verification suites, instance
// generators and demos. Exit status: 0 success, 1 failed check or invalid
// input, 2 usage error, 3 inconclusive ect check.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cubeprop/cube.hpp"
#include "cubeprop/error.hpp"
#include "cubeprop/generate.hpp"
#include "cubeprop/io.hpp"
#include "cubeprop/kleene.hpp"
#include "cubeprop/reals.hpp"
#include "cubeprop/verify.hpp"

namespace fs = std::filesystem;
using namespace cubeprop;

namespace {

std::string read_text(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sizes(const TCSet& x) {
  std::string out = "[";
  for (std::size_t n = 0; n <= x.trunc(); ++n) out += (n ? ", " : "") + std::to_string(x.size(n));
  return out + "]";
}

int cmd_homs(std::size_t m, std::size_t n) {
  const auto homs = enum_homs(m, n);
  std::cout << homs.size() << " morphisms [" << m << "] -> [" << n << "]\n";
  for (const auto& s : homs) std::cout << s.to_string() << "\n";
  return 0;
}

int cmd_validate(const fs::path& file) {
  const Json j = read_json_file(file);
  try {
    if (is_morphism_json(j)) {
      const TCSetMor f = tcsetmor_from_json(j);
      std::cout << "ok: morphism, trunc " << f.trunc() << ", source sizes " << sizes(f.source())
                << ", target sizes " << sizes(f.target()) << (is_mono(f) ? ", mono" : "") << "\n";
    } else {
      const TCSet x = tcset_from_json(j);
      std::cout << "ok: presheaf, trunc " << x.trunc() << ", sizes " << sizes(x) << "\n";
    }
  } catch (const Error& e) {
    throw ParseError(file.string() + ": " + e.what());
  }
  return 0;
}

void print_report(const Report& report) {
  for (const Record& r : report.records) {
    std::cout << to_string(r.status) << "  " << r.tag << "  " << r.instance << "  " << r.witness;
    if (r.replay) std::cout << "  (replay: " << *r.replay << ")";
    std::cout << "\n";
  }
  std::cout << "summary: " << report.count(Status::Pass) << " pass, " << report.count(Status::Fail) << " fail, "
            << report.count(Status::Inconclusive) << " inconclusive\n";
}

int cmd_verify(const SuiteConfig& config, const std::string& json_out, const std::string& fail_dir) {
  config.check();
  const Report report = run_suite(config, fs::path(fail_dir));
  print_report(report);
  if (!json_out.empty()) write_json_file(json_out, report.to_json());
  return report.passed() ? 0 : 1;
}

int cmd_replay(const fs::path& file) {
  const Record r = replay(read_json_file(file));
  std::cout << to_string(r.status) << "  " << r.tag << "  " << r.instance << "  " << r.witness << "\n";
  return r.status == Status::Fail ? 1 : 0;
}

int cmd_generate(const std::string& kind, std::uint64_t seed, const GenConfig& cfg, std::size_t n,
                 const std::string& out_dir) {
  Rng rng(seed);
  const auto files = generate_kind(kind, rng, cfg, n);
  for (const GeneratedFile& g : files) {
    const Json j = g.object ? to_json(*g.object) : to_json(*g.map);
    if (out_dir.empty()) {
      std::cout << j.dump(2) << "\n";
    } else {
      fs::create_directories(out_dir);
      const fs::path path = fs::path(out_dir) / (g.name + ".json");
      write_json_file(path, j);
      std::cout << path.string() << "\n";
    }
  }
  return 0;
}

SampleReal demo_real(const std::string& spec) {
  if (spec.rfind("sqrt", 0) == 0) return sample_sqrt(static_cast<unsigned>(std::stoul(spec.substr(4))));
  return sample_rational(parse_rat(spec));
}

int cmd_reals(const std::string& spec, std::size_t queries, std::uint64_t seed) {
  const SampleReal real = demo_real(spec);
  const Cocut& c = real.cocut;
  const LocatedCut l = cocut_to_cut(c);
  std::cout << "cocut " << real.name << ": bound_out " << to_string(c.bound_out()) << ", bound_in "
            << to_string(c.bound_in()) << "\n";
  Rng rng(seed);
  CocutLog log;
  const Rat lo = c.bound_out() - 1;
  const Rat span = c.bound_in() - c.bound_out() + 2;
  for (std::size_t i = 0; i < queries; ++i) {
    Rat a = lo + span * Rat(static_cast<long long>(rng.below(41)), 40);
    Rat b = a + Rat(1, static_cast<long long>(1 + rng.below(16)));
    const CocutAnswer ans = c.locate(a, b);
    log.record(ans);
    std::cout << "locate(" << to_string(a) << ", " << to_string(b) << ") = " << to_string(ans)
              << "    (not C)^<: " << to_string(l.locate(a, b)) << "\n";
  }
  std::cout << "answers consistent: " << (log.consistent() ? "yes" : "no: " + *log.conflict()) << "\n";
  for (const Rat& a : {c.bound_out(), c.bound_in()}) {
    const Membership m = member_up_to(c, a, 50);
    std::cout << "member_up_to(" << to_string(a) << ", 50) = "
              << (m.kind == Membership::Kind::DefinitelyOut ? "DefinitelyOut at n = " + std::to_string(m.n)
                                                            : "ConsistentInUpTo(" + std::to_string(m.n) + ")")
              << "\n";
  }
  return log.consistent() ? 0 : 1;
}

Natural load_code(const fs::path& file) {
  const std::string text = read_text(file);
  const auto first = text.find_first_not_of(" \t\r\n");
  const auto last = text.find_last_not_of(" \t\r\n");
  if (first != std::string::npos) {
    const std::string body = text.substr(first, last - first + 1);
    if (body.find_first_not_of("0123456789") == std::string::npos) return Natural(body);
  }
  return encode(parse_assembly(text));
}

int cmd_ect(const std::string& fn, const fs::path& code, std::uint64_t range, std::uint64_t fuel) {
  const PartialFn f = parse_fn_spec(fn);
  const Natural e = load_code(code);
  const EctReport report = ect_check(f, e, range, fuel);
  std::cout << "function " << f.description << ", code " << e.str() << "\n";
  for (const EctPoint& p : report.points) {
    std::cout << "x = " << p.x << ": " << to_string(p.status);
    if (p.status != EctPoint::Status::Unconstrained) std::cout << " expected " << p.expected;
    if (p.got) std::cout << " got " << *p.got;
    std::cout << "\n";
  }
  std::cout << to_string(report.status) << "\n";
  switch (report.status) {
    case EctReport::Status::Pass: return 0;
    case EctReport::Status::Fail: return 1;
    case EctReport::Status::Inconclusive: return 3;
  }
  return 1;
}

int cmd_encode(const fs::path& code) {
  std::cout << load_code(code).str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite truncated cubical sets, cocut reals and Kleene realizability checks"};
  app.require_subcommand(1);

  auto* cube = app.add_subcommand("cube", "Cube category");
  cube->require_subcommand(1);
  std::size_t hom_m = 0;
  std::size_t hom_n = 0;
  auto* homs = cube->add_subcommand("homs", "List the morphisms [m] -> [n]");
  homs->add_option("m", hom_m)->required();
  homs->add_option("n", hom_n)->required();

  auto* psh = app.add_subcommand("psh", "Presheaf files");
  psh->require_subcommand(1);
  std::string psh_file;
  auto* validate = psh->add_subcommand("validate", "Validate a presheaf or morphism JSON file");
  validate->add_option("file", psh_file)->required();

  SuiteConfig config;
  std::vector<std::string> only;
  std::string json_out;
  std::string fail_dir = "verify-failures";
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--trunc", config.trunc, "Truncation dimension D")->capture_default_str();
  verify->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  verify->add_option("--size", config.max_level_size, "Maximum level size of random presheaves")
      ->capture_default_str();
  verify->add_option("--count", config.count, "Random instances per suite")->capture_default_str();
  verify->add_option("--fuel", config.fuel, "Step budget for machine runs")->capture_default_str();
  verify->add_option("--only", only, "Comma separated tags")->delimiter(',');
  verify->add_option("--json", json_out, "Write the JSON report here");
  verify->add_option("--fail-dir", fail_dir, "Directory for replay files of failing instances")
      ->capture_default_str();

  std::string replay_path;
  auto* replay_cmd = app.add_subcommand("replay", "Re-run a failing instance from its replay file");
  replay_cmd->add_option("file", replay_path)->required();

  std::string kind;
  std::uint64_t gen_seed = 1;
  GenConfig gen_cfg;
  std::size_t gen_n = 1;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Emit generated instance files");
  generate->add_option("kind", kind, "constant, representable, subobject-of-product, negation-image, random-quotient")
      ->required()
      ->check(CLI::IsMember(
          {"constant", "representable", "subobject-of-product", "negation-image", "random-quotient"}));
  generate->add_option("--seed", gen_seed)->capture_default_str();
  generate->add_option("--trunc", gen_cfg.trunc)->capture_default_str();
  generate->add_option("--size", gen_cfg.max_level_size)->capture_default_str();
  generate->add_option("-n", gen_n, "Dimension for representable, maximum set size for constant")
      ->capture_default_str();
  generate->add_option("--out", gen_out, "Output directory (default: print to stdout)");

  auto* reals = app.add_subcommand("reals", "Cocut reals");
  reals->require_subcommand(1);
  std::string real_spec = "sqrt2";
  std::size_t queries = 10;
  std::uint64_t real_seed = 1;
  auto* demo = reals->add_subcommand("demo", "Print a locate transcript");
  demo->add_option("--real", real_spec, "A rational such as -3/7, or sqrtN")->capture_default_str();
  demo->add_option("--queries", queries)->capture_default_str();
  demo->add_option("--seed", real_seed)->capture_default_str();

  auto* ect = app.add_subcommand("ect", "Extended Church's thesis instances");
  ect->require_subcommand(1);
  std::string fn_spec;
  std::string code_file;
  std::uint64_t range = 10;
  std::uint64_t fuel = 100000;
  auto* check = ect->add_subcommand("check", "Check a partial function against a machine code");
  check->add_option("--fn", fn_spec, "<value>[@<domain>], e.g. succ@even")->required();
  check->add_option("--code", code_file, "Assembly file or file holding a decimal code")->required();
  check->add_option("--range", range)->capture_default_str();
  check->add_option("--fuel", fuel)->capture_default_str();
  auto* encode_cmd = ect->add_subcommand("encode", "Print the code of an assembly file");
  encode_cmd->add_option("--code", code_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (homs->parsed()) return cmd_homs(hom_m, hom_n);
    if (validate->parsed()) return cmd_validate(psh_file);
    if (verify->parsed()) {
      config.tags.insert(only.begin(), only.end());
      try {
        config.check();
      } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      return cmd_verify(config, json_out, fail_dir);
    }
    if (replay_cmd->parsed()) return cmd_replay(replay_path);
    if (generate->parsed()) return cmd_generate(kind, gen_seed, gen_cfg, gen_n, gen_out);
    if (demo->parsed()) return cmd_reals(real_spec, queries, real_seed);
    if (check->parsed()) return cmd_ect(fn_spec, code_file, range, fuel);
    if (encode_cmd->parsed()) return cmd_encode(code_file);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
