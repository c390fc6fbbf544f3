#include "cubeprop/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "cubeprop/classifier.hpp"
#include "cubeprop/error.hpp"
#include "cubeprop/fibration.hpp"
#include "cubeprop/generate.hpp"
#include "cubeprop/kleene.hpp"
#include "cubeprop/pi01.hpp"
#include "cubeprop/reals.hpp"
#include "cubeprop/search.hpp"

namespace cubeprop {

const std::vector<std::string>& all_tags() {
  static const std::vector<std::string> tags{"cube-laws",         "adjunction", "delta-preserves", "nat-pullback",
                                             "internalise",       "negmono",    "negpoints",       "negneg-classifier",
                                             "detruncate",        "extensional", "cuts",           "pi01",
                                             "ect"};
  return tags;
}

void SuiteConfig::check() const {
  if (trunc < 1) throw PreconditionError("suites touching path objects need trunc >= 1");
  if (max_level_size == 0 || count == 0 || fuel == 0) throw PreconditionError("bounds must be positive");
  for (const auto& t : tags) {
    if (std::find(all_tags().begin(), all_tags().end(), t) == all_tags().end()) {
      throw PreconditionError("unknown tag '" + t + "'");
    }
  }
}

Json SuiteConfig::to_json() const {
  return Json{{"trunc", trunc},
              {"max_level_size", max_level_size},
              {"seed", seed},
              {"count", count},
              {"fuel", fuel},
              {"tags", std::vector<std::string>(tags.begin(), tags.end())}};
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [s](const Record& r) { return r.status == s; }));
}

Json Report::to_json() const {
  Json recs = Json::array();
  for (const Record& r : records) {
    Json j{{"theorem", r.tag}, {"instance", r.instance}, {"status", to_string(r.status)}, {"witness", r.witness}};
    if (r.replay) j["replay"] = *r.replay;
    recs.push_back(j);
  }
  return Json{{"config", config},
              {"records", recs},
              {"summary",
               {{"pass", count(Status::Pass)},
                {"fail", count(Status::Fail)},
                {"inconclusive", count(Status::Inconclusive)}}}};
}

namespace {

Json set_map_json(const SetMap& m) { return Json{{"dom", m.dom}, {"cod", m.cod}, {"map", m.map}}; }

SetMap set_map_from(const Json& j) {
  SetMap m{j.at("dom").get<FinSet>(), j.at("cod").get<FinSet>(), j.at("map").get<std::vector<std::size_t>>()};
  m.check();
  return m;
}

CheckResult pass(std::string witness) { return {Status::Pass, std::move(witness)}; }
CheckResult fail(std::string witness) { return {Status::Fail, std::move(witness)}; }

std::string pad(std::size_t i) {
  std::string s = std::to_string(i);
  return std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
}

// ---- cube-laws

CheckResult check_cube(const Json& d) {
  if (d.at("kind") == "homs") {
    const std::size_t m = d.at("m");
    const std::size_t n = d.at("n");
    std::size_t expected = 1;
    for (std::size_t i = 0; i < n; ++i) expected *= m + 2;
    const auto homs = enum_homs(m, n);
    if (homs.size() != expected || hom_count(m, n) != expected) {
      return fail("|hom| = " + std::to_string(homs.size()) + ", expected " + std::to_string(expected));
    }
    for (std::size_t i = 0; i < homs.size(); ++i) {
      if (hom_rank(homs[i]) != i || !(hom_unrank(m, n, i) == homs[i])) return fail("rank mismatch at " + homs[i].to_string());
      if (i > 0 && !(homs[i - 1] < homs[i])) return fail("enumeration out of order at " + homs[i].to_string());
    }
    return pass(std::to_string(expected) + " morphisms");
  }
  const auto dims = d.at("dims").get<std::vector<std::size_t>>();
  const auto fs = enum_homs(dims[0], dims[1]);
  const auto gs = enum_homs(dims[1], dims[2]);
  const auto hs = enum_homs(dims[2], dims[3]);
  std::size_t triples = 0;
  for (const auto& f : fs) {
    if (!(compose(CubeMor::identity(dims[1]), f) == f) || !(compose(f, CubeMor::identity(dims[0])) == f)) {
      return fail("identity law fails at " + f.to_string());
    }
    for (const auto& g : gs) {
      const CubeMor gf = compose(g, f);
      for (const auto& h : hs) {
        ++triples;
        if (!(compose(h, gf) == compose(compose(h, g), f))) {
          return fail("associativity fails at " + f.to_string() + ", " + g.to_string() + ", " + h.to_string());
        }
      }
    }
  }
  return pass(std::to_string(triples) + " triples");
}

// ---- adjunction

CheckResult check_adjunction(const Json& d) {
  const FinSet z = d.at("z").get<FinSet>();
  const TCSet x = tcset_from_json(d.at("x"));
  const std::size_t trunc = x.trunc();
  if (!(gamma(delta_const(z, trunc)) == z)) return fail("Gamma Delta Z differs from Z");

  // Hom(Delta Z, X) -> Fun(Z, Gamma X), phi |-> phi_0.
  std::set<std::vector<std::size_t>> seen;
  std::size_t homs = 0;
  for (const auto& phi : all_morphisms(delta_const(z, trunc), x)) {
    ++homs;
    seen.insert(phi.component(0));
  }
  const std::size_t funs = all_functions(z.size(), x.size(0)).size();
  if (homs != funs || seen.size() != funs) {
    return fail("Hom(Delta Z, X) has " + std::to_string(homs) + " elements, Fun(Z, Gamma X) has " +
                std::to_string(funs));
  }
  // Hom(X, Nabla Z) -> Fun(Gamma X, Z), phi |-> phi_0, with the transpose of u
  // being Nabla(u) after the unit.
  std::set<std::vector<std::size_t>> seen2;
  std::size_t homs2 = 0;
  const TCSetMor unit = nabla_unit(x);
  for (const auto& phi : all_morphisms(x, nabla(z, trunc))) {
    ++homs2;
    seen2.insert(phi.component(0));
    const SetMap u{x.level(0), z, phi.component(0)};
    if (!(compose(nabla_map(u, trunc), unit) == phi)) return fail("transpose of phi_0 does not recover phi");
  }
  const std::size_t funs2 = all_functions(x.size(0), z.size()).size();
  if (homs2 != funs2 || seen2.size() != funs2) {
    return fail("Hom(X, Nabla Z) has " + std::to_string(homs2) + " elements, Fun(Gamma X, Z) has " +
                std::to_string(funs2));
  }
  return pass(std::to_string(homs) + " + " + std::to_string(homs2) + " bijective pairs");
}

// ---- delta-preserves

CheckResult check_delta(const Json& d) {
  const std::size_t trunc = d.at("trunc");
  const SetMap f = set_map_from(d.at("f"));
  const SetMap g = set_map_from(d.at("g"));
  const FinSet& a = f.dom;
  const FinSet& b = g.dom;

  // Products.
  FinSet ab;
  for (const auto& s : a) {
    for (const auto& t : b) ab.push_back("(" + s + "," + t + ")");
  }
  const PairCone prod = product(delta_const(a, trunc), delta_const(b, trunc));
  const TCSetMor prod_iso = TCSetMor::build(delta_const(ab, trunc), prod.object, [&](std::size_t n, std::size_t e) {
    return *prod.index(n, e / b.size(), e % b.size());
  });
  if (!is_iso(prod_iso)) return fail("Delta(A x B) -> Delta A x Delta B is not an isomorphism");

  // Coproducts.
  FinSet sum;
  for (const auto& s : a) sum.push_back("l" + s);
  for (const auto& t : b) sum.push_back("r" + t);
  const Coproduct co = coproduct(delta_const(a, trunc), delta_const(b, trunc));
  const TCSetMor co_iso = TCSetMor::build(delta_const(sum, trunc), co.object, [&](std::size_t n, std::size_t e) {
    return e < a.size() ? co.left(n, e) : co.right(n, e - a.size());
  });
  if (!is_iso(co_iso)) return fail("Delta(A + B) -> Delta A + Delta B is not an isomorphism");

  // Pullbacks.
  std::vector<std::pair<std::size_t, std::size_t>> pb;
  FinSet pb_names;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (f(i) == g(j)) {
        pb.emplace_back(i, j);
        pb_names.push_back(a[i] + "|" + b[j]);
      }
    }
  }
  const PairCone cone = pullback(delta_map(f, trunc), delta_map(g, trunc));
  const TCSetMor pb_iso = TCSetMor::build(delta_const(pb_names, trunc), cone.object, [&](std::size_t n, std::size_t e) {
    return *cone.index(n, pb[e].first, pb[e].second);
  });
  if (!is_iso(pb_iso)) return fail("Delta(A x_C B) -> pullback is not an isomorphism");

  // Interval exponentials.
  const TCSet exp = interval_exponential(delta_const(a, trunc));
  const TCSetMor exp_iso =
      TCSetMor::build(delta_const(a, trunc - 1), exp, [](std::size_t, std::size_t e) { return e; });
  if (!is_iso(exp_iso)) return fail("Delta A -> (Delta A)^I is not an isomorphism");
  return pass("product, coproduct, pullback, exponential");
}

// ---- nat-pullback

CheckResult check_nat_pullback_tag(const Json& d) {
  const TCSetMor f = tcsetmor_from_json(d.at("map"));
  const bool negative = d.value("expect", std::string("pullback")) == "not-pullback";
  const bool lifts = is_mono(f) && find_point_lifts(f).has_value();
  std::size_t squares = 0;
  std::optional<std::string> counterexample;
  const std::size_t top = std::min<std::size_t>(2, f.trunc());
  for (std::size_t m = 0; m <= top && !counterexample; ++m) {
    for (std::size_t n = 0; n <= top && !counterexample; ++n) {
      for (const CubeMor& s : enum_homs(m, n)) {
        ++squares;
        auto report = check_nat_pullback(f, s);
        if (!report.pullback) {
          counterexample = report.counterexample;
          break;
        }
      }
    }
  }
  if (negative) {
    if (lifts) return fail("negative control unexpectedly has point lifts");
    if (!counterexample) return fail("negative control: every square is a pullback");
    return pass("no point lifts; " + *counterexample);
  }
  if (!lifts) return fail("instance is not a monomorphism with point lifts");
  if (counterexample) return fail(*counterexample);
  return pass(std::to_string(squares) + " squares");
}

// ---- internalise

CheckResult check_internalise(const Json& d) {
  if (d.contains("set_map")) {
    const SetMap m = set_map_from(d.at("set_map"));
    const std::size_t trunc = d.at("trunc");
    const TCSetMor f = delta_map(m, trunc);
    auto lifts = find_point_lifts(f);
    if (!lifts) return fail("constant mono without point lifts");
    const Internalisation in = internalise(f, *lifts, ExtMono::truth());
    const SetMap chi = classify_set(m, ExtMono::truth());
    if (!(in.chi == delta_map(chi, trunc))) return fail("internalised map differs from Delta of the set-level map");
    return pass("chi = Delta(chi_set)");
  }
  const TCSetMor f = tcsetmor_from_json(d.at("map"));
  auto lifts = find_point_lifts(f);
  if (!lifts) return fail("instance has no point lifts");
  const Internalisation in = internalise(f, *lifts, ExtMono::truth());
  return pass("reconstructed over Y; " + std::to_string(in.pulled.object.total_size()) + " elements");
}

// ---- negmono / negpoints

CheckResult check_negmono(const Json& d) {
  const TCSetMor f = tcsetmor_from_json(d.at("map"));
  const TCSetMor neg = neg_map(f);
  if (!is_mono(neg)) return fail("neg_map is not a monomorphism");
  return pass("mono; " + std::to_string(neg.source().total_size()) + " elements");
}

CheckResult check_negpoints(const Json& d) {
  const TCSetMor inc = tcsetmor_from_json(d.at("map"));
  const Subobject a = image(inc);
  const Subobject na = neg_sub(a);
  for (std::size_t e = 0; e < a.ambient().size(0); ++e) {
    if (na.contains(0, e) == a.contains(0, e)) {
      return fail("level 0 negation wrong at " + a.ambient().name(0, e));
    }
  }
  if (!(neg_sub_by_morphisms(a) == na)) return fail("point-based and morphism-based negation differ");
  return pass("level 0 complement; both negations agree");
}

// ---- negneg-classifier

CheckResult check_negneg(const Json& d) {
  const TCSetMor f = tcsetmor_from_json(d.at("map"));
  auto witness = is_hprop(f);
  if (d.value("expect", std::string()) == "not-hprop") {
    if (witness) return fail("expected a non-h-proposition");
    return pass("not an h-proposition");
  }
  if (!witness) return fail("instance is not an h-proposition");
  const Subobject im = image(f);
  const bool stable = neg_sub(neg_sub(im)) == im;
  try {
    const NegNegClassification c = classify_negneg(f, *witness);
    if (!stable) return fail("classified an unstable proposition");
    return pass("classified; chi_0 = " + std::to_string(c.internal.chi.component(0).size()) + " values");
  } catch (const NotStableError& e) {
    if (stable) return fail(std::string("stable proposition rejected: ") + e.what());
    return pass("not double-negation stable");
  }
}

// ---- detruncate

CheckResult check_detruncate(const Json& d) {
  const FinSet z = d.at("z").get<FinSet>();
  const TCSetMor f = tcsetmor_from_json(d.at("map"));
  if (!is_hprop(f)) return fail("W -> Delta Z is not an h-proposition");
  const NablaRel rel = nabla_rel(z, f);
  if (!is_hprop(rel.projection)) return fail("Nabla_Z Gamma W -> Delta Z is not an h-proposition");
  auto s = find_section(rel.projection);
  if (!s) return fail("no section of Nabla_Z Gamma W -> Delta Z");
  const SetMap t = gamma_section_transfer(z, f, rel, *s);
  if (!(compose(gamma_map(f), t) == identity_map(z))) return fail("transferred map is not a section");
  return pass("section of Gamma W -> Z");
}

// ---- extensional

CheckResult check_extensional(const Json& d) {
  const SetMap m = set_map_from(d.at("mono"));
  const Extensionalization ext = make_extensional(m);
  const SetMap chi = classify_set(m, ext.mono);
  if (chi.map != ext.quotient.map) return fail("classifying map differs from the quotient map");
  std::size_t inhabited = 0;
  for (std::size_t p = 0; p < ext.mono.base().size(); ++p) inhabited += ext.mono.inhabited(p) ? 1 : 0;
  if (inhabited > 1) return fail("extensional base has two inhabited points");
  if (count_classifying_maps(m, ext.mono.mono()) != 1) return fail("classifying map is not unique");
  const ExtensionalityProbe probe = probe_extensionality(m);
  const bool ext_m = is_extensional(m);
  if (!probe.pulled_along_second) return fail("probe mono is not a pullback along the second projection");
  if (probe.projections_agree != ext_m) return fail("probe disagrees with the extensionality test");
  // Exhaustive count where the map space is small, otherwise the product of
  // the per-element choices.
  std::size_t choices = 1;
  const auto inhabited_m = fiber_inhabitation(m);
  const auto image_p = fiber_inhabitation(probe.pulled);
  for (std::size_t y = 0; y < probe.pairs.size(); ++y) {
    choices *= static_cast<std::size_t>(std::count(inhabited_m.begin(), inhabited_m.end(), image_p[y]));
  }
  if (probe.pairs.size() <= 6 && count_classifying_maps(probe.pulled, m) != choices) {
    return fail("exhaustive and per-element counts of classifying maps differ");
  }
  const bool unique = choices == 1;
  if (unique != ext_m) return fail("uniqueness of classifying maps disagrees with extensionality");
  return pass(ext_m ? "extensional" : "not extensional; quotient has " + std::to_string(ext.mono.base().size()) +
                                          " points");
}

// ---- cuts

SampleReal real_from(const std::string& spec) {
  if (spec.rfind("sqrt:", 0) == 0) return sample_sqrt(static_cast<unsigned>(std::stoul(spec.substr(5))));
  return sample_rational(parse_rat(spec));
}

Rat random_rat(Rng& rng, const Rat& lo, const Rat& hi) {
  const std::size_t den = 1 + rng.below(24);
  const Rat t(static_cast<long long>(rng.below(den + 1)), static_cast<long long>(den));
  return lo + (hi - lo) * t;
}

CheckResult check_cuts(const Json& d) {
  const SampleReal real = real_from(d.at("real"));
  Rng rng(d.at("seed").get<std::uint64_t>());
  const std::size_t queries = d.at("queries");
  const Cocut& c = real.cocut;
  const LocatedCut l = cocut_to_cut(c);
  const Cocut c2 = neg_cut(l);
  const LocatedCut l2 = cocut_to_cut(neg_cut(l));
  CocutLog clog;
  LeftCutLog llog;
  const Rat lo = c.bound_out() - 2;
  const Rat hi = c.bound_in() + 2;
  for (std::size_t i = 0; i < queries; ++i) {
    Rat a = random_rat(rng, lo, hi);
    Rat b = random_rat(rng, lo, hi);
    if (a == b) b += Rat(1, 7);
    if (b < a) std::swap(a, b);
    for (const CocutAnswer& ans : {c.locate(a, b), c2.locate(a, b)}) {
      clog.record(ans);
      if ((ans.kind == CocutAnswer::Kind::InC) != real.member(ans.point)) {
        return fail("cocut answer " + to_string(ans) + " is false");
      }
    }
    for (const LeftAnswer& ans : {l.locate(a, b), l2.locate(a, b)}) {
      llog.record(ans);
      if ((ans.kind == LeftAnswer::Kind::InL) == real.member(ans.point)) {
        return fail("left cut answer " + to_string(ans) + " is false");
      }
    }
  }
  if (!clog.consistent()) return fail(*clog.conflict());
  if (!llog.consistent()) return fail(*llog.conflict());
  // Closedness: a member, including the infimum when it is rational, passes
  // every a + 1/n test; a point below the lower bound is exposed.
  const std::size_t bound = 50;
  const Membership boundary = member_up_to(c, c.bound_in(), bound);
  if (boundary.kind != Membership::Kind::ConsistentInUpTo) return fail("bound_in rejected by member_up_to");
  if (member_up_to(c, c.bound_out() - 1, bound).kind != Membership::Kind::DefinitelyOut) {
    return fail("point below bound_out not rejected");
  }
  return pass(std::to_string(clog.size() + llog.size()) + " consistent answers");
}

// ---- pi01

CheckResult check_pi01(const Json& d) {
  const SampleReal real = real_from(d.at("real"));
  std::vector<Rat> samples;
  for (const auto& s : d.at("samples")) samples.push_back(parse_rat(s.get<std::string>()));
  const std::size_t bound = d.at("bound");
  const std::size_t trunc = d.at("trunc");
  const DecisionFamily fam = weakly_pi01(real.cocut);
  for (const Rat& a : samples) {
    bool raised = false;
    for (std::size_t n = 1; n <= bound; ++n) {
      // Each answer must be true; where only one branch is true it must be taken.
      const bool r_true = real.member(a + Rat(1, n));
      const bool out_true = !real.member(a);
      const bool r_given = fam.decide(a, n).kind == Pi01Answer::Kind::RHolds;
      if ((r_given && !r_true) || (!r_given && !out_true)) {
        return fail("decision at " + to_string(a) + ", n = " + std::to_string(n) + " disagrees with comparison");
      }
      try {
        negneg_decide(fam, a, n);
      } catch (const PromiseViolation&) {
        raised = true;
        if (real.member(a)) return fail("promise violation for member " + to_string(a));
      }
    }
    if (!real.member(a) && !raised) return fail("non-member " + to_string(a) + " never exposed");
  }
  const Pi01Extraction ex = extract_pi01(cocut_witness(real, samples, bound, trunc));
  std::size_t members = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) members += ex.bounded.holds(i) ? 1 : 0;
  return pass(std::to_string(members) + " of " + std::to_string(samples.size()) + " samples classified in");
}

// ---- ect

CheckResult check_ect(const Json& d) {
  const std::uint64_t fuel = d.at("fuel");
  if (d.contains("fn")) {
    const PartialFn f = parse_fn_spec(d.at("fn").get<std::string>());
    const Natural e = encode(standard_program(d.at("program")).program);
    const EctReport report = ect_check(f, e, d.at("range"), fuel);
    const std::string got = to_string(report.status);
    if (got != d.at("expect").get<std::string>()) return fail("ect_check returned " + got);
    return pass("ect_check " + got);
  }
  const NamedProgram& p = standard_program(d.at("program"));
  const Natural e = encode(p.program);
  if (!(decode(e) == p.program)) return fail("code does not decode to the program");
  std::vector<Natural> traces;
  for (std::uint64_t x = 0; x < d.at("inputs").get<std::uint64_t>(); ++x) {
    const RunResult r = run(e, x, fuel);
    const auto expected = p.reference(x);
    if (r.halted != expected.has_value() || (expected && *expected != r.output)) {
      return fail("run disagrees with the reference at x = " + std::to_string(x));
    }
    if (!r.halted) continue;
    const Natural z = *emit_trace(e, x, fuel);
    if (!kleene_T(e, x, z) || kleene_U(z) != r.output) return fail("emitted trace rejected at x = " + std::to_string(x));
    const auto t = decode_trace(z);
    if (!t || t->steps != r.steps) return fail("trace step count differs at x = " + std::to_string(x));
    if (kleene_T(e, x + 1, z)) return fail("trace accepted for the wrong input");
    if (kleene_T(e, x, z ^ Natural(2))) return fail("corrupted trace accepted at x = " + std::to_string(x));
    traces.push_back(z);
  }
  return pass(std::to_string(traces.size()) + " halting traces");
}

const std::map<std::string, std::function<CheckResult(const Json&)>>& checks() {
  static const std::map<std::string, std::function<CheckResult(const Json&)>> table{
      {"cube-laws", check_cube},
      {"adjunction", check_adjunction},
      {"delta-preserves", check_delta},
      {"nat-pullback", check_nat_pullback_tag},
      {"internalise", check_internalise},
      {"negmono", check_negmono},
      {"negpoints", check_negpoints},
      {"negneg-classifier", check_negneg},
      {"detruncate", check_detruncate},
      {"extensional", check_extensional},
      {"cuts", check_cuts},
      {"pi01", check_pi01},
      {"ect", check_ect},
  };
  return table;
}

// Rationals for the pi01 suite: members of C and points that a + 1/bound
// still leaves outside C, so the finite index set can expose them.
std::vector<std::string> pi01_samples(Rng& rng, const SampleReal& real, std::size_t bound) {
  std::vector<std::string> out;
  const Rat lo = real.cocut.bound_out() - 2;
  const Rat hi = real.cocut.bound_in() + 2;
  while (out.size() < 4) {
    const Rat a = random_rat(rng, lo, hi);
    if (!real.member(a) && real.member(a + Rat(1, bound))) continue;
    const std::string s = to_string(a);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<PlannedCheck> plan_checks(const SuiteConfig& config) {
  config.check();
  std::vector<PlannedCheck> out;
  Rng base(config.seed);
  GenConfig gen{config.trunc, config.max_level_size};
  auto selected = [&](const std::string& tag) { return config.tags.empty() || config.tags.count(tag) > 0; };
  for (const std::string& tag : all_tags()) {
    Rng rng = base.split();
    if (!selected(tag)) continue;
    auto add = [&](std::string instance, Json data) { out.push_back({tag, std::move(instance), std::move(data)}); };
    if (tag == "cube-laws") {
      for (std::size_t m = 0; m <= 4; ++m) {
        for (std::size_t n = 0; n <= 4; ++n) {
          add("homs-" + std::to_string(m) + "-" + std::to_string(n), Json{{"kind", "homs"}, {"m", m}, {"n", n}});
        }
      }
      for (std::size_t i = 0; i < 81; ++i) {
        std::vector<std::size_t> dims{i / 27, (i / 9) % 3, (i / 3) % 3, i % 3};
        add("assoc-" + std::to_string(dims[0]) + std::to_string(dims[1]) + std::to_string(dims[2]) +
                std::to_string(dims[3]),
            Json{{"kind", "assoc"}, {"dims", dims}});
      }
    } else if (tag == "adjunction") {
      GenConfig small{config.trunc, std::min<std::size_t>(3, config.max_level_size)};
      for (std::size_t i = 0; i < config.count; ++i) {
        const FinSet z = random_set(rng, 1, 2, "z");
        add("random#" + pad(i), Json{{"z", z}, {"x", to_json(random_tcset(rng, small))}});
      }
    } else if (tag == "delta-preserves") {
      for (std::size_t i = 0; i < config.count; ++i) {
        const FinSet a = random_set(rng, 1, 3, "a");
        const FinSet b = random_set(rng, 1, 3, "b");
        const FinSet c = random_set(rng, 1, 3, "c");
        add("random#" + pad(i), Json{{"trunc", config.trunc},
                                     {"f", set_map_json(random_set_map(rng, a, c))},
                                     {"g", set_map_json(random_set_map(rng, b, c))}});
      }
    } else if (tag == "nat-pullback" || tag == "internalise") {
      for (std::size_t i = 0; i < config.count; ++i) {
        const Instance inst = random_fibrant_mono(rng, gen);
        add(inst.label + "#" + pad(i), Json{{"map", to_json(inst.map)}});
      }
      if (tag == "nat-pullback") {
        add("control-endpoint",
            Json{{"map", to_json(endpoint_of_interval(config.trunc).inclusion())}, {"expect", "not-pullback"}});
      } else {
        add("double-negation-of-boundary",
            Json{{"map", to_json(neg_sub(neg_sub(boundary_of_interval(config.trunc))).inclusion())}});
        for (std::size_t i = 0; i < std::max<std::size_t>(1, config.count / 4); ++i) {
          const FinSet cod = random_set(rng, 1, 4, "b");
          const FinSet dom = numbered_set("a", rng.below(cod.size() + 1));
          add("delta-set-mono#" + pad(i),
              Json{{"set_map", set_map_json(random_set_mono(rng, dom, cod))}, {"trunc", config.trunc}});
        }
      }
    } else if (tag == "negmono") {
      std::size_t i = 0;
      while (i < config.count) {
        const TCSet x = random_tcset(rng, gen);
        const TCSet y = random_tcset(rng, gen);
        if (auto f = random_morphism(rng, x, y)) add("random#" + pad(i++), Json{{"map", to_json(*f)}});
      }
    } else if (tag == "negpoints") {
      for (std::size_t i = 0; i < config.count; ++i) {
        const TCSet y = random_tcset(rng, gen);
        add("random#" + pad(i), Json{{"map", to_json(random_subobject(rng, y).inclusion())}});
      }
    } else if (tag == "negneg-classifier") {
      for (std::size_t i = 0; i < config.count; ++i) {
        const Instance inst = random_hprop(rng, gen);
        add(inst.label + "#" + pad(i), Json{{"map", to_json(inst.map)}});
      }
      add("control-two-points",
          Json{{"map", to_json(delta_map(SetMap{{"a", "b"}, {"*"}, {0, 0}}, config.trunc))}, {"expect", "not-hprop"}});
    } else if (tag == "detruncate") {
      for (std::size_t i = 0; i < config.count; ++i) {
        FinSet z;
        const Instance inst = random_inhabited_hprop_over_delta(rng, gen, z);
        add(inst.label + "#" + pad(i), Json{{"z", z}, {"map", to_json(inst.map)}});
      }
    } else if (tag == "extensional") {
      for (std::size_t i = 0; i < config.count; ++i) {
        const FinSet cod = random_set(rng, 1, 4, "p");
        const FinSet dom = numbered_set("q", rng.below(cod.size() + 1));
        add("random#" + pad(i), Json{{"mono", set_map_json(random_set_mono(rng, dom, cod))}});
      }
    } else if (tag == "cuts") {
      for (const std::string spec : {"0", "1/2", "-3/7", "sqrt:2", "sqrt:3"}) {
        add(spec, Json{{"real", spec}, {"seed", rng.next()}, {"queries", 100}});
      }
    } else if (tag == "pi01") {
      const std::vector<std::string> reals{"0", "1/2", "-3/7", "sqrt:2", "sqrt:3"};
      for (std::size_t i = 0; i < config.count; ++i) {
        const std::string spec = reals[i % reals.size()];
        const std::size_t bound = 10;
        add(spec + "#" + pad(i), Json{{"real", spec},
                                      {"samples", pi01_samples(rng, real_from(spec), bound)},
                                      {"bound", bound},
                                      {"trunc", config.trunc}});
      }
    } else if (tag == "ect") {
      for (const NamedProgram& p : standard_programs()) {
        add("program-" + p.name, Json{{"program", p.name}, {"inputs", 10}, {"fuel", config.fuel}});
      }
      const std::vector<std::array<std::string, 3>> cases{{"id", "identity", "PASS"},
                                                          {"succ", "succ", "PASS"},
                                                          {"succ@even", "succ", "PASS"},
                                                          {"zero@even", "zero-on-even", "PASS"},
                                                          {"id", "succ", "FAIL"}};
      for (const auto& [fn, program, expect] : cases) {
        add("fn-" + fn + "-by-" + program,
            Json{{"fn", fn}, {"program", program}, {"range", 10}, {"fuel", config.fuel}, {"expect", expect}});
      }
    }
  }
  return out;
}

CheckResult run_check(const std::string& tag, const Json& data) {
  auto it = checks().find(tag);
  if (it == checks().end()) return fail("unknown tag '" + tag + "'");
  try {
    return it->second(data);
  } catch (const std::exception& e) {
    return fail(std::string("exception: ") + e.what());
  }
}

Json replay_file(const Record& record) {
  return Json{{"tag", record.tag}, {"instance", record.instance}, {"data", record.data}};
}

Record replay(const Json& file) {
  Record r{file.at("tag"), file.at("instance"), Status::Pass, {}, file.at("data"), std::nullopt};
  const CheckResult res = run_check(r.tag, r.data);
  r.status = res.status;
  r.witness = res.witness;
  return r;
}

Report run_suite(const SuiteConfig& config, const std::optional<std::filesystem::path>& fail_dir) {
  const std::vector<PlannedCheck> plan = plan_checks(config);
  std::vector<Record> records(plan.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < plan.size(); i = next++) {
      const CheckResult res = run_check(plan[i].tag, plan[i].data);
      records[i] = Record{plan[i].tag, plan[i].instance, res.status, res.witness, plan[i].data, std::nullopt};
    }
  };
  const std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::sort(records.begin(), records.end(),
            [](const Record& a, const Record& b) { return std::tie(a.tag, a.instance) < std::tie(b.tag, b.instance); });
  if (fail_dir) {
    for (Record& r : records) {
      if (r.status != Status::Fail) continue;
      std::filesystem::create_directories(*fail_dir);
      std::string file = r.tag + "-" + r.instance + ".json";
      std::replace_if(file.begin(), file.end(), [](char c) { return c == '/' || c == '#' || c == ':'; }, '_');
      const std::filesystem::path path = *fail_dir / file;
      write_json_file(path, replay_file(r));
      r.replay = path.string();
    }
  }
  return Report{config.to_json(), std::move(records)};
}

}  // namespace cubeprop
