#include <doctest.h>

#include "pdslab/endomorphism.hpp"
#include "pdslab/regular_group.hpp"

using namespace pdslab;

namespace {

GF4Vector vec(const char* s) { return parse_gf4_vector(s); }

std::vector<std::string> members(const GroupContext& ctx, const Subgroup& s) {
  std::vector<std::string> out;
  s.members.for_each([&](Index g) { out.push_back(format_element(ctx, g)); });
  return out;
}

}  // namespace

TEST_CASE("tau") {
  const GroupContext ctx = GroupContext::parse("0");
  const EndoMap t = make_tau(ctx, vec("1"));
  CHECK(format_element(ctx, t(parse_element_index(ctx, "w0"))) == "ww");
  CHECK(make_tau(ctx, vec("0")).is_identity());
  CHECK(compose(t, t).is_identity());
  CHECK(order(t) == 2);
  CHECK(t.is_automorphism());
  for (std::string e : {"00", "01", "11"})
    for (const char* v : {"01", "10", "11", "w0", "Ww"}) {
      const GroupContext c = GroupContext::parse(e);
      const EndoMap f = make_tau(c, vec(v));
      CHECK(f.is_automorphism());
      CHECK(order(f) == 2);
    }
}

TEST_CASE("rho") {
  const GroupContext ctx = GroupContext::parse("0");
  CHECK(order(make_rho(ctx, vec("w"))) == 4);
  CHECK(order(make_rho(ctx, vec("0"))) == 2);
  for (std::string e : {"0", "1", "00", "01", "11"}) {
    const GroupContext c = GroupContext::parse(e);
    const int n = c.blocks();
    for (int m = 0; m < (1 << (2 * n)); ++m) {
      GF4Vector a;
      for (int i = 0; i < n; ++i) a.push_back(GF4(static_cast<std::uint8_t>((m >> (2 * i)) & 3)));
      const EndoMap r = make_rho(c, a);
      REQUIRE(r.is_automorphism());
      CHECK(compose(r, r).table() == make_tau(c, trace(a)).table());
      CHECK(order(r) == (is_zero(trace(a)) ? 2u : 4u));
    }
  }
}

TEST_CASE("pi rotates four blocks") {
  for (std::string e : {"0000", "1111"}) {
    const GroupContext ctx = GroupContext::parse(e);
    const EndoMap p = make_pi(ctx, {});
    CHECK(format_element(ctx, p(parse_element_index(ctx, "10000000"))) == "00100000");
    CHECK(power(p, 4).is_identity());
    CHECK(order(p) == 4);
    for (GF4 x : GF4::all())
      for (GF4 y : GF4::all()) {
        Index d = 0;
        for (int b = 0; b < 4; ++b) d |= ctx.make_block(b, x, y);
        CHECK(p(d) == d);
      }
    CHECK(is_isometry(p, FormSpec::parse("0000")));
    CHECK(is_isometry(p, FormSpec::parse("wwww")));
    CHECK_FALSE(is_isometry(p, FormSpec::parse("w000")));
  }
  CHECK_THROWS_AS(make_pi(GroupContext::parse("0100"), {}), InputError);
  CHECK_THROWS_AS(make_pi(GroupContext::parse("00"), {}), InputError);
}

TEST_CASE("pointwise arithmetic") {
  const GroupContext ctx = GroupContext::parse("01");
  CHECK(kernel_of(one_minus(make_identity(ctx))).order() == ctx.size());
  CHECK(image_of(make_zero(ctx)).order() == 1);
  for (const EndoMap& f : {make_rho(ctx, vec("w0")), make_tau(ctx, vec("11")), make_rho(ctx, vec("1W"))})
    for (const EndoMap& psi : {one_plus(f), one_minus(f), norm4(f), f})
      CHECK(image_of(psi).order() * kernel_of(psi).order() == ctx.size());
}

TEST_CASE("single-block images") {
  for (std::string e : {"0", "1"}) {
    const GroupContext ctx = GroupContext::parse(e);
    const EndoMap t = make_tau(ctx, vec("1"));
    // Im(1 + tau_1) = {(0, (1 + eps) x)}.
    CHECK(image_of(one_plus(t)).order() == (e == "0" ? 4u : 1u));
    CHECK(members(ctx, kernel_of(one_minus(t))) == std::vector<std::string>{"00", "01", "0w", "0W"});
  }
  const GroupContext g0 = GroupContext::parse("0");
  CHECK(members(g0, image_of(one_plus(make_rho(g0, vec("0"))))) == std::vector<std::string>{"00", "01", "10", "11"});
  CHECK(members(g0, kernel_of(one_minus(make_rho(g0, vec("w"))))) == std::vector<std::string>{"00", "01"});
}

TEST_CASE("isometries") {
  const GroupContext ctx = GroupContext::parse("01");
  for (const char* a : {"00", "0w", "1W"}) {
    const FormSpec f = FormSpec::parse(a);
    CHECK(is_isometry(make_identity(ctx), f));
    for (const char* v : {"01", "10", "11"}) CHECK(is_isometry(make_tau(ctx, vec(v)), f));
    CHECK(is_generalized_isometry(make_rho(ctx, f.a), f));
  }
  CHECK_FALSE(is_isometry(make_rho(ctx, vec("0w")), FormSpec::parse("0w")));
}

TEST_CASE("invariant index-2 subgroups") {
  for (std::string e : {"0", "1", "01"}) {
    const GroupContext ctx = GroupContext::parse(e);
    CHECK(invariant_index2(make_identity(ctx)).size() == index2_subgroups(ctx).size());
  }
  const GroupContext g0 = GroupContext::parse("0");
  const EndoMap t = make_tau(g0, vec("1"));
  const auto ks = invariant_index2(t);
  CHECK(ks.size() == 3);
  for (const Subgroup& k : ks) {
    CHECK(is_invariant(t, k));
    for (const char* lit : {"01", "0w", "0W"}) CHECK(k.contains(parse_element_index(g0, lit)));
  }
}

TEST_CASE("order-2 pair") {
  const GroupContext ctx = GroupContext::parse("00");
  const FormSpec f = FormSpec::parse("00");
  const EndoMap t = make_tau(ctx, vec("11"));
  const GktPair p = order2_pair(t);
  CHECK(p.K.order() == 128);
  CHECK_FALSE(p.K.contains(p.h));
  CHECK(p.K.contains(ctx.add(p.h, t(p.h))));
  CHECK(check_gkt_conditions(ctx, f, p.K, t, p.h).ok());
  CHECK_THROWS_AS(order2_pair(make_rho(ctx, vec("w0"))), ContractError);
}

TEST_CASE("order-4 searches") {
  for (std::string e : {"00", "01", "11"})
    for (const char* a : {"w0", "ww", "1W"}) {
      const GroupContext ctx = GroupContext::parse(e);
      const FormSpec f = FormSpec::parse(a);
      const EndoMap r = make_rho(ctx, f.a);
      const Order4Search s = order4_pair(r);
      REQUIRE(s.pair);
      CHECK(s.subgroups_without_h == 0);
      const Subgroup& K = s.pair->K;
      Index h = 0;
      for (int i = 1; i <= 4; ++i) {
        h = ctx.add(h, power(r, static_cast<std::uint64_t>(i - 1))(s.pair->h));
        CHECK(K.contains(h) == (i == 4));
      }
      CHECK(check_gkt_conditions(ctx, f, K, r, s.pair->h).ok());
      const auto q = order4_quotient_condition(r);
      REQUIRE(q);
      CHECK(q->K.order() * 4 == ctx.size());
      CHECK(is_invariant(r, q->K));
      CHECK(check_gkt_conditions(ctx, f, q->K, r, q->h).ok());
    }
}

TEST_CASE("rotation searches agree") {
  const GroupContext ctx = GroupContext::parse("0000");
  const FormSpec f = FormSpec::parse("0000");
  const EndoMap p = make_pi(ctx, {});
  const Order4Search s = order4_pair(p);
  const auto q = order4_quotient_condition(p);
  REQUIRE(s.pair);
  REQUIRE(q);
  CHECK(check_gkt_conditions(ctx, f, s.pair->K, p, s.pair->h).ok());
  CHECK(check_gkt_conditions(ctx, f, q->K, p, q->h).ok());
}

TEST_CASE("search preconditions") {
  const GroupContext ctx = GroupContext::parse("00");
  CHECK_THROWS_AS(order4_pair(make_tau(ctx, vec("11"))), ContractError);
  CHECK_THROWS_AS(order4_quotient_condition(make_identity(ctx)), ContractError);
}
