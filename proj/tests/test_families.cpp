#include <doctest.h>

#include "oracles.hpp"
#include "pdslab/families.hpp"

using namespace pdslab;

namespace {

FamilySpec spec(Family f, const char* e, const char* a, const char* b, const char* v = "") {
  FamilySpec s;
  s.family = f;
  s.e = e;
  s.a = a;
  s.b = b;
  s.v = v;
  return s;
}

FamilySpec spec_D(int eps) {
  FamilySpec s;
  s.family = Family::D;
  s.epsilon = eps;
  return s;
}

struct Run {
  FamilyInstance inst;
  DirectInvariants direct;
  FamilyComparison cmp;
};

Run run(const FamilySpec& s) {
  FamilyInstance inst = build_family(s);
  DirectInvariants d = direct_invariants(*inst.group);
  FamilyComparison c = compare_family(inst, d);
  return Run{std::move(inst), std::move(d), std::move(c)};
}

bool passes(const Run& r, const char* name) {
  const Check* c = r.cmp.find(name);
  REQUIRE(c);
  return c->pass;
}

}  // namespace

TEST_CASE("family A instance") {
  const Run r = run(spec(Family::A, "11", "00", "10", "11"));
  CHECK(r.direct.nilpotency_class == 2);
  CHECK(r.direct.exponent == 4);
  REQUIRE(r.direct.derived_type);
  CHECK(*r.direct.derived_type == make_type(3, 0));
  CHECK(oracle::count(oracle::naive_derived(*r.inst.group)) == 8);
  for (const char* n : {"class", "exponent", "derived.order", "derived.type", "center.order", "center.type",
                        "frattini.order", "frattini.type"})
    CHECK_MESSAGE(passes(r, n), n);
  CHECK(verify_regular_action(*r.inst.group, r.inst.targets).ok());
}

TEST_CASE("family A admissibility") {
  CHECK(family_A_admissible(parse_gf2_vector("11"), parse_gf2_vector("01")));
  CHECK_FALSE(family_A_admissible(parse_gf2_vector("00"), parse_gf2_vector("01")));
  CHECK_THROWS_AS(build_family(spec(Family::A, "00", "00", "10", "01")), InputError);
  CHECK_THROWS_AS(build_family(spec(Family::A, "11", "00", "00", "11")), InputError);
  CHECK_THROWS_AS(build_family(spec(Family::A, "1", "0", "1", "1")), InputError);
}

TEST_CASE("family B instances") {
  Run r = run(spec(Family::B, "00", "11", "11"));
  CHECK(r.direct.nilpotency_class == 2);
  CHECK(r.direct.exponent == 4);
  CHECK(r.cmp.all_pass());
  r = run(spec(Family::B, "11", "11", "10"));
  CHECK(r.direct.exponent == 8);
  CHECK(r.direct.center.order() == 16);
  CHECK(r.cmp.all_pass());
  CHECK_THROWS_AS(build_family(spec(Family::B, "00", "1w", "11")), InputError);
}

TEST_CASE("family C instances") {
  const Run r = run(spec(Family::C, "00", "ww", "10"));
  CHECK(r.inst.targets.size() == 2);
  CHECK(r.inst.group->e() == 4);
  CHECK(verify_regular_action(*r.inst.group, r.inst.targets).ok());
  CHECK(passes(r, "derived.order"));
  CHECK(passes(r, "exponent"));
  CHECK_THROWS_AS(build_family(spec(Family::C, "00", "11", "10")), InputError);
}

TEST_CASE("family C reported mismatches are genuine") {
  // Frattini order for b*Tr(a) != b, and class 3 for a twisted e.
  Run r = run(spec(Family::C, "00", "w0", "01"));
  const auto derived = oracle::naive_derived(*r.inst.group);
  CHECK(r.direct.frattini.order() == oracle::frattini_order_via_abelianization(*r.inst.group, derived));
  CHECK(r.direct.frattini.order() == 32);
  CHECK_FALSE(passes(r, "frattini.order"));

  r = run(spec(Family::C, "11", "w0", "10"));
  CHECK(r.direct.nilpotency_class == 3);
  CHECK(r.direct.lower_central_series.size() == 4);
  CHECK_FALSE(passes(r, "class"));
}

TEST_CASE("family D, untwisted rotation") {
  const Run r = run(spec_D(0));
  const RegularGroup& g = *r.inst.group;
  CHECK(g.size() == 65536);
  CHECK(r.direct.nilpotency_class == 4);
  CHECK(r.direct.exponent == 8);
  CHECK(r.direct.derived.order() == 1024);
  CHECK(r.direct.center.order() == 16);
  CHECK(r.direct.frattini.order() == 2048);
  std::vector<bool> derived(g.size(), false);
  r.direct.derived.members.for_each([&](Index x) { derived[x] = true; });
  CHECK(oracle::frattini_order_via_abelianization(g, derived) == 2048);
  CHECK(r.cmp.all_pass());
}

TEST_CASE("family D, twisted rotation") {
  const Run r = run(spec_D(1));
  const RegularGroup& g = *r.inst.group;
  CHECK(r.direct.nilpotency_class == 6);
  CHECK(r.direct.exponent == 16);
  std::vector<bool> derived(g.size(), false);
  r.direct.derived.members.for_each([&](Index x) { derived[x] = true; });
  CHECK(oracle::frattini_order_via_abelianization(g, derived) == r.direct.frattini.order());
  CHECK(r.direct.frattini.order() == 4096);
  CHECK_FALSE(passes(r, "frattini.order"));
  CHECK_THROWS_AS(build_family([] {
                    FamilySpec s = spec_D(1);
                    s.tail_n = 1;
                    return s;
                  }()),
                  InputError);
}

TEST_CASE("family parsing") {
  CHECK(parse_family("C") == Family::C);
  CHECK(to_string(Family::D) == "D");
  CHECK_THROWS_AS(parse_family("E"), InputError);
}
