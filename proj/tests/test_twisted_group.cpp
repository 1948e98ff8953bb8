#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pdslab/twisted_group.hpp"

using namespace pdslab;

namespace {

std::vector<int> twist_of(const GroupContext& ctx) {
  std::vector<int> t;
  for (auto b : ctx.twist()) t.push_back(b);
  return t;
}

}  // namespace

TEST_CASE("twisted addition matches the coordinate law for every pair") {
  for (std::string e : {"0", "1", "00", "01", "10", "11"}) {
    const GroupContext ctx = GroupContext::parse(e);
    const auto lits = oracle::all_literals(ctx.blocks());
    for (const auto& u : lits)
      for (const auto& v : lits) {
        const auto expect = oracle::format(oracle::add(twist_of(ctx), oracle::parse(u), oracle::parse(v)));
        REQUIRE(format_element(ctx, ctx.add(parse_element_index(ctx, u), parse_element_index(ctx, v))) == expect);
      }
  }
}

TEST_CASE("examples of the group law") {
  const GroupContext g1 = GroupContext::parse("1");
  const GroupContext g0 = GroupContext::parse("0");
  const Index w0 = parse_element_index(g1, "w0");
  CHECK(format_element(g1, g1.add(w0, w0)) == "0w");
  CHECK(format_element(g0, g0.add(w0, w0)) == "00");
  CHECK(format_element(g1, g1.neg(w0)) == "ww");
  CHECK(format_element(g0, g0.neg(parse_element_index(g0, "w1"))) == "w1");
  for (Index u = 0; u < g1.size(); ++u) {
    CHECK(g1.add(u, 0) == u);
    CHECK(g1.add(u, g1.neg(u)) == 0);
  }
}

TEST_CASE("element indices") {
  const GroupContext c1 = GroupContext::parse("0");
  const GroupContext c2 = GroupContext::parse("00");
  CHECK(parse_element_index(c1, "00") == 0);
  CHECK(parse_element_index(c1, "w1") == 9);
  CHECK(parse_element_index(c2, "0010") == 4);
  for (Index k = 0; k < c2.size(); ++k) CHECK(element_index(c2, index_element(c2, k)) == k);
  CHECK_THROWS_AS(index_element(c2, 256), InputError);
  CHECK_THROWS_AS(parse_element_index(c2, "00"), InputError);
}

TEST_CASE("associativity and commutativity") {
  for (std::string e : {"0", "1"}) {
    const GroupContext ctx = GroupContext::parse(e);
    for (Index a = 0; a < 16; ++a)
      for (Index b = 0; b < 16; ++b) {
        CHECK(ctx.add(a, b) == ctx.add(b, a));
        for (Index c = 0; c < 16; ++c) REQUIRE(ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c)));
      }
  }
  std::mt19937 rng(7);
  for (std::string e : {"01", "111"}) {
    const GroupContext ctx = GroupContext::parse(e);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(ctx.size() - 1));
    for (int i = 0; i < 100000; ++i) {
      const Index a = pick(rng), b = pick(rng), c = pick(rng);
      REQUIRE(ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c)));
    }
  }
}

TEST_CASE("doubling is (0, eps x)") {
  const GroupContext ctx = GroupContext::parse("01");
  for (Index u = 0; u < ctx.size(); ++u)
    for (int b = 0; b < 2; ++b) {
      const Index d = ctx.twice(u);
      CHECK(ctx.x(d, b) == GF4::zero());
      CHECK(ctx.y(d, b) == (ctx.twisted(b) ? ctx.x(u, b) : GF4::zero()));
    }
}

TEST_CASE("subgroup closure") {
  const GroupContext g1 = GroupContext::parse("1");
  const GroupContext g0 = GroupContext::parse("0");
  CHECK(subgroup_closure(g1, {}).order() == 1);
  const Subgroup c4 = subgroup_closure(g1, {parse_element(g1, "10")});
  CHECK(c4.order() == 4);
  for (const char* lit : {"00", "10", "01", "11"}) CHECK(c4.contains(parse_element_index(g1, lit)));
  CHECK(subgroup_closure(g0, {parse_element(g0, "10")}).order() == 2);
}

TEST_CASE("abelian types of the blocks") {
  const GroupContext g0 = GroupContext::parse("0");
  const GroupContext g1 = GroupContext::parse("1");
  CHECK(to_string(abelian_type(g0, whole_group(g0))) == to_string(make_type(4, 0)));
  CHECK(to_string(abelian_type(g1, whole_group(g1))) == to_string(make_type(0, 2)));
  CHECK(abelian_type(g1, trivial_subgroup(g1)).empty());
  for (std::string e : {"00", "01", "11", "011"}) {
    const GroupContext ctx = GroupContext::parse(e);
    const AbelianType t = abelian_type(ctx, whole_group(ctx));
    CHECK(type_order(t) == ctx.size());
    const Subgroup phi = frattini(ctx);
    CHECK(phi.order() == (std::size_t{1} << (2 * ctx.twist_weight())));
    CHECK(abelian_type(ctx, phi) == make_type(2 * ctx.twist_weight(), 0));
  }
}

TEST_CASE("abelian type rejects a non-subgroup") {
  const GroupContext g1 = GroupContext::parse("1");
  Subgroup bogus{IndexSet::from(16, std::vector<Index>{0, parse_element_index(g1, "10")}), {}};
  CHECK_THROWS_AS(abelian_type(g1, bogus), ContractError);
}

TEST_CASE("index-2 subgroup counts") {
  CHECK(index2_subgroups(GroupContext::parse("1")).size() == 3);
  CHECK(index2_subgroups(GroupContext::parse("0")).size() == 15);
  const GroupContext ctx = GroupContext::parse("01");
  const auto subs = index2_subgroups(ctx);
  CHECK(subs.size() == 63);
  for (const Subgroup& s : subs) {
    CHECK(s.order() * 2 == ctx.size());
    CHECK(s.contains(0));
    CHECK(frattini(ctx).is_subgroup_of(s));
  }
}
