#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "pdslab/pds.hpp"
#include "pdslab/quadratic_form.hpp"

using namespace pdslab;

namespace {

std::vector<bool> flags(const IndexSet& d) {
  std::vector<bool> f(d.universe(), false);
  d.for_each([&](Index x) { f[x] = true; });
  return f;
}

PdsParams params(const PdsResult& r) {
  REQUIRE(std::holds_alternative<PdsParams>(r));
  return std::get<PdsParams>(r);
}

}  // namespace

TEST_CASE("single-block level sets") {
  const GroupContext g0 = GroupContext::parse("0");
  const GroupContext g1 = GroupContext::parse("1");
  CHECK(params(verify_pds(g0, level_set(g0, FormSpec::parse("0"), GF4::zero()))) == PdsParams{16, 6, 2, 2});
  CHECK(params(verify_pds(g0, level_set(g0, FormSpec::parse("w"), GF4::one()))) == PdsParams{16, 5, 0, 2});
  CHECK(params(verify_pds(g1, level_set(g1, FormSpec::parse("0"), GF4::omega()))) == PdsParams{16, 3, 2, 0});
  const PdsParams empty = params(verify_pds(g0, level_set(g0, FormSpec::parse("w"), GF4::zero())));
  CHECK(empty.k == 0);
  CHECK(empty.degenerate);
}

TEST_CASE("verification agrees with direct counting") {
  std::mt19937 rng(11);
  for (std::string e : {"0", "1", "01"}) {
    const GroupContext ctx = GroupContext::parse(e);
    for (std::string a : {"0", "w", "0w", "11"}) {
      if (a.size() != e.size()) continue;
      for (GF4 x : GF4::all()) {
        const IndexSet d = level_set(ctx, FormSpec::parse(a), x);
        if (d.empty()) continue;
        const auto c = oracle::naive_counts(ctx, flags(d));
        const auto fast = difference_counts(ctx, d);
        for (Index g = 1; g < ctx.size(); ++g) REQUIRE(fast[g] == c[g]);
        const PdsParams p = params(verify_pds(ctx, d));
        for (Index g = 1; g < ctx.size(); ++g) REQUIRE(c[g] == (d.contains(g) ? p.lambda : p.mu));
      }
    }
  }
}

TEST_CASE("threads do not change the counts") {
  const GroupContext ctx = GroupContext::parse("011");
  const IndexSet d = level_set(ctx, FormSpec::parse("0w1"), GF4::zero());
  CHECK(difference_counts(ctx, d, 1) == difference_counts(ctx, d, 3));
  CHECK(params(verify_pds(ctx, d, 4)) == params(verify_pds(ctx, d, 1)));
}

TEST_CASE("failure reports") {
  const GroupContext g1 = GroupContext::parse("1");
  IndexSet with_one = IndexSet::from(16, std::vector<Index>{0, 5});
  auto f = std::get<PdsFailure>(verify_pds(g1, with_one));
  CHECK(f.reason == PdsFailure::Reason::contains_identity);

  const Index x = parse_element_index(g1, "w0");
  REQUIRE(g1.neg(x) != x);
  f = std::get<PdsFailure>(verify_pds(g1, IndexSet::from(16, std::vector<Index>{x})));
  CHECK(f.reason == PdsFailure::Reason::not_inverse_closed);
  CHECK(f.violating_g == x);

  const GroupContext g0 = GroupContext::parse("0");
  const IndexSet odd = IndexSet::from(16, std::vector<Index>{1, 2, 4, 8, 3});
  f = std::get<PdsFailure>(verify_pds(g0, odd));
  CHECK((f.reason == PdsFailure::Reason::lambda_not_constant || f.reason == PdsFailure::Reason::mu_not_constant));
  const auto c = oracle::naive_counts(g0, flags(odd));
  CHECK(c[f.violating_g] == f.count);
  CHECK(f.count != f.expected);

  CHECK_THROWS_AS(verify_pds(g0, IndexSet(256)), InputError);
}

TEST_CASE("expected parameters") {
  CHECK(expected_params(2, 1, true) == PdsParams{256, 75, 26, 20});
  CHECK(expected_params(2, -1, true) == PdsParams{256, 51, 2, 12});
  CHECK(expected_params(2, -1, false) == PdsParams{256, 68, 12, 20});
  CHECK(expected_params(1, 1, true) == PdsParams{16, 6, 2, 2});
  CHECK(expected_params(1, 1, false) == PdsParams{16, 3, 2, 0});
  CHECK(expected_params(1, -1, false) == PdsParams{16, 5, 0, 2});
  CHECK(expected_params(1, -1, true).degenerate);
  CHECK_THROWS_AS(expected_params(0, 1, true), InputError);
  CHECK_THROWS_AS(expected_params(2, 0, true), InputError);
  for (int n = 1; n <= 4; ++n)
    for (int s : {1, -1})
      for (bool z : {true, false}) {
        const PdsParams p = expected_params(n, s, z);
        if (!p.degenerate) CHECK(counting_identity_holds(p));
      }
}

TEST_CASE("latin square classification") {
  LatinClass c = classify_ls_nls(PdsParams{16, 6, 2, 2});
  CHECK(c.kind == LatinClass::Kind::LS);
  CHECK(c.r == 2);
  c = classify_ls_nls(PdsParams{16, 5, 0, 2});
  CHECK(c.kind == LatinClass::Kind::NLS);
  CHECK(c.r == 1);
  c = classify_ls_nls(PdsParams{256, 60, 20, 12});
  CHECK(c.to_string() == "LS(16,4)");
  CHECK(classify_ls_nls(PdsParams{15, 6, 1, 3}).kind == LatinClass::Kind::neither);
}

TEST_CASE("relabelling by a random bijection keeps the parameters") {
  const GroupContext ctx = GroupContext::parse("01");
  const FiniteGroupTable t = FiniteGroupTable::from_group(ctx);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Index> perm(ctx.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const FiniteGroupTable r = t.relabeled(perm);
    CHECK(check_group_axioms(r, 20000));
    for (GF4 x : GF4::all()) {
      const IndexSet d = level_set(ctx, FormSpec::parse("w1"), x);
      IndexSet moved(ctx.size());
      d.for_each([&](Index g) { moved.insert(perm[g]); });
      CHECK(params(verify_pds(r, moved)) == params(verify_pds(ctx, d)));
    }
  }
}
