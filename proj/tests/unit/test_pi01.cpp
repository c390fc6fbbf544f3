#include <doctest.h>

#include "cubeprop/error.hpp"
#include "cubeprop/pi01.hpp"

using namespace cubeprop;

TEST_CASE("bounded witnesses hold on all-zero rows") {
  BoundedPi01Witness w{{"a", "b"}, 3, {{false, false, false}, {false, true, false}}};
  CHECK(w.holds(0));
  CHECK_FALSE(w.holds(1));
}

TEST_CASE("finite classifier groups every nonzero sequence together") {
  Pi01Classifier c = pi01_classifier({{true, false}, {false, true}});
  CHECK(c.sequences.size() == 3);
  CHECK(c.classes.mono.base().size() == 2);
  const std::size_t zero = c.sequence_index({false, false});
  CHECK(c.classes.mono.inhabited(c.classes.quotient(zero)));
  CHECK(c.classes.quotient(c.sequence_index({true, false})) == c.classes.quotient(c.sequence_index({false, true})));
  CHECK_THROWS_AS(c.sequence_index({true, true}), PreconditionError);
  CHECK(pi01_classifier({{false}}).classes.mono.base().size() == 1);
  CHECK_THROWS_AS(pi01_classifier({{true}, {true, false}}), PreconditionError);
}

TEST_CASE("cocut witnesses extract to the membership predicate") {
  for (const SampleReal& real : sample_reals()) {
    std::vector<Rat> samples = {Rat(-2), Rat(-1, 2), Rat(0), Rat(1, 3), Rat(1), Rat(2)};
    for (std::size_t trunc : {0, 1}) {
      WeaklyPi01Witness w = cocut_witness(real, samples, 8, trunc);
      CHECK_NOTHROW(validate(w));
      Pi01Extraction e = extract_pi01(w);
      for (std::size_t i = 0; i < samples.size(); ++i) {
        // Samples whose exclusion only shows beyond the bound look like members.
        const bool exposed_out = !real.member(samples[i] + Rat(1, 8));
        if (real.member(samples[i])) CHECK(e.bounded.holds(i));
        if (exposed_out) CHECK_FALSE(e.bounded.holds(i));
        CHECK(e.classifying(i) == e.classifier.classes.quotient(e.classifier.sequence_index(e.bounded.g[i])));
      }
    }
  }
}

TEST_CASE("the extracted sequence for zero") {
  WeaklyPi01Witness w = cocut_witness(sample_rational(0), {Rat(-1), Rat(1)}, 3, 0);
  Pi01Extraction e = extract_pi01(w);
  // The locator for a rational looks only at the left end, so -1 is refuted
  // at every k even though -1 + 1/1 = 0 lies in the cocut.
  CHECK(e.bounded.g[0] == std::vector<bool>{true, true, true});
  CHECK(e.bounded.g[1] == std::vector<bool>{false, false, false});
}

TEST_CASE("broken witnesses are rejected") {
  WeaklyPi01Witness w = cocut_witness(sample_rational(0), {Rat(-1), Rat(1)}, 3, 1);
  WeaklyPi01Witness lie = w;
  lie.decision[1][0].reset();
  CHECK_THROWS_AS(validate(lie), PreconditionError);
  WeaklyPi01Witness short_rows = w;
  short_rows.forward.clear();
  CHECK_THROWS_AS(validate(short_rows), PreconditionError);
  WeaklyPi01Witness no_back = w;
  no_back.backward[1].reset();
  CHECK_THROWS_AS(validate(no_back), PreconditionError);
  CHECK_THROWS_AS(cocut_witness(sample_rational(0), {Rat(1)}, 0, 1), PreconditionError);
}
