#include <doctest.h>

#include "canex/count.hpp"
#include "canex/intuition.hpp"
#include "canex/oracle.hpp"
#include "canex/randgen.hpp"

using namespace canex;

namespace {

const char* const kPeirce = "((a1->a0)->a1)->a1";
const char* const kCleanedMP =
    "a28->(a22->(a26->(a14->a2)->a11->a8)->a28)->(a28->a9->a13)->a14->(a28->a0)->a0";

}  // namespace

TEST_CASE("simple") {
  CHECK(isSimple(parseTerm("a1->a0->a0")));
  CHECK_FALSE(isSimple(parseTerm(kPeirce)));
  CHECK_FALSE(isSimple(parseTerm("a0")));
}

TEST_CASE("modus ponens") {
  CHECK(isMP(parseTerm("(a1->a0)->a1->a0")));
  CHECK(isMP(parseTerm("a1->(a1->a0)->a0")));
  CHECK(isMP(parseTerm(kCleanedMP)));
  CHECK(proveIntuitionistic(parseTerm(kCleanedMP)));
  CHECK_FALSE(isMP(parseTerm("a1->a0")));
  // Only the literal two-leaf pattern by default.
  const Term general = parseTerm("(a2->a1)->((a2->a1)->a0)->a0");
  CHECK_FALSE(isMP(general));
  CHECK(isMP(general, IntuitOptions{true}));
  CHECK(proveIntuitionistic(general));
}

TEST_CASE("easy") {
  CHECK(isEasy(parseTerm("a1->a0->a0")));
  CHECK(isEasy(parseTerm("(a1->a0)->a1->a0")));
  CHECK_FALSE(isEasy(parseTerm(kPeirce)));
  CHECK_FALSE(proveIntuitionistic(parseTerm(kPeirce)));
}

TEST_CASE("clean") {
  CHECK(render(clean(parseTerm("((a0->a0)->a1)->a1"))) == "a1->a1");
  CHECK(proveIntuitionistic(parseTerm("((a0->a0)->a1)->a1")));
  CHECK(proveIntuitionistic(parseTerm("a1->a1")));
  CHECK(clean(parseTerm(kPeirce)) == parseTerm(kPeirce));
  CHECK(render(clean(parseTerm("a0"))) == "a0");
  // Nested removals.
  CHECK(render(clean(parseTerm("(((a2->a2)->a1)->a1)->a0"))) == "a0");
}

TEST_CASE("minor") {
  CHECK(isMinor(parseTerm("a2->(a1->a0)->a1->a0")));
  CHECK_FALSE(isSimple(parseTerm("a2->(a1->a0)->a1->a0")));
  CHECK(isMinor(parseTerm("a1->a0->a0")));
  CHECK_FALSE(isMinor(parseTerm("a1->a0")));
}

TEST_CASE("cheap") {
  const IntuitVerdict v = isCheap(parseTerm("((a0->a0)->a1)->a1"));
  CHECK(v.cheap);
  CHECK_FALSE(v.easy);
  CHECK(render(v.cleaned) == "a1->a1");
  CHECK(v.cleanedSize == 2);

  CHECK_FALSE(isCheap(parseTerm(kPeirce)).cheap);

  const IntuitVerdict s = isCheap(parseTerm("a1->a0->a0"));
  CHECK(s.cheap);
  CHECK(s.simple);
}

TEST_CASE("cascade is sound and clean preserves provability for sizes up to 6") {
  std::size_t cheap = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    forEachCanonical(n, [&](TermView e) {
      const bool provable = proveIntuitionistic(e);
      const IntuitVerdict v = isCheap(e);
      if (v.cheap) {
        ++cheap;
        CHECK(provable);
      }
      CHECK(proveIntuitionistic(v.cleaned) == provable);
      CHECK(leafCount(v.cleaned) <= leafCount(e));
      CHECK(v.cleanedSize == leafCount(v.cleaned));
      // Monotonicity of the cascade.
      if (v.simple) CHECK(isMinor(e));
      if (v.simple || v.mp) CHECK(v.easy);
      if (v.easy) CHECK(v.cheap);
      // Fixpoint.
      CHECK(clean(v.cleaned) == v.cleaned);
    });
  }
  CHECK(cheap > 0);
}

TEST_CASE("generalized modus ponens stays sound") {
  for (std::size_t n = 1; n <= 5; ++n)
    forEachCanonical(n, [&](TermView e) {
      if (isCheap(e, IntuitOptions{true}).cheap) CHECK(proveIntuitionistic(e));
    });
}

TEST_CASE("cascade is sound on random size 25 expressions") {
  const StamTable table = stamTable(25);
  Rng rng(2025);
  for (int i = 0; i < 500; ++i) {
    const Term t = randomCanonical(rng, 25, table).toTerm();
    const IntuitVerdict v = isCheap(t);
    if (v.cheap) CHECK(proveIntuitionistic(t));
    CHECK(leafCount(v.cleaned) <= 25);
  }
}
