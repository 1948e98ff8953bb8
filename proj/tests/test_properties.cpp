#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "pdslab/families.hpp"
#include "pdslab/scheme.hpp"

using namespace pdslab;

namespace {

const char* const kTwists2[] = {"00", "01", "10", "11"};

std::vector<GF4Vector> all_vectors(int n) {
  std::vector<GF4Vector> out;
  for (int m = 0; m < (1 << (2 * n)); ++m) {
    GF4Vector a;
    for (int i = 0; i < n; ++i) a.push_back(GF4(static_cast<std::uint8_t>((m >> (2 * (n - 1 - i))) & 3)));
    out.push_back(a);
  }
  return out;
}

std::set<std::string> as_set(const GroupContext& ctx, const Subgroup& s) {
  std::set<std::string> out;
  s.members.for_each([&](Index g) { out.insert(format_element(ctx, g)); });
  return out;
}

std::set<std::string> lits(std::initializer_list<const char*> l) { return {l.begin(), l.end()}; }

std::set<std::string> all_y(const char* x_chars) {
  std::set<std::string> out;
  for (const char* x = x_chars; *x; ++x)
    for (char y : std::string("01wW")) out.insert(std::string{*x, y});
  return out;
}

}  // namespace

TEST_CASE("single-block images and kernels of 1 +- tau") {
  for (int eps = 0; eps < 2; ++eps) {
    const GroupContext ctx({static_cast<std::uint8_t>(eps)});
    for (GF4 nu : GF4::all()) {
      const EndoMap t = make_tau(ctx, {nu});
      std::set<std::string> plus, minus;
      for (GF4 x : GF4::all()) {
        plus.insert(format_element(ctx, ctx.make_block(0, GF4::zero(), (nu + GF4(static_cast<std::uint8_t>(eps))) * x)));
        minus.insert(format_element(ctx, ctx.make_block(0, GF4::zero(), nu * x)));
      }
      CHECK(as_set(ctx, image_of(one_plus(t))) == plus);
      CHECK(as_set(ctx, image_of(one_minus(t))) == minus);
      if (nu.in_prime_field()) {
        std::set<std::string> ker;
        for (GF4 x : GF4::all())
          for (GF4 y : GF4::all()) ker.insert(format_element(ctx, ctx.make_block(0, (nu + GF4::one()) * x, y)));
        CHECK(as_set(ctx, kernel_of(one_minus(t))) == ker);
      }
    }
  }
}

TEST_CASE("single-block images and kernels of 1 +- rho") {
  const auto s01 = lits({"00", "01", "10", "11"});
  const auto s1w = lits({"00", "01", "1w", "1W"});
  const auto s0 = lits({"00", "01"});
  const auto s8 = all_y("01");
  for (int eps = 0; eps < 2; ++eps) {
    const GroupContext ctx({static_cast<std::uint8_t>(eps)});
    for (GF4 alpha : GF4::all()) {
      CAPTURE(eps);
      CAPTURE(alpha.to_char());
      const EndoMap r = make_rho(ctx, {alpha});
      const bool prime = alpha.in_prime_field();
      const GF4 shifted = alpha + GF4(static_cast<std::uint8_t>(eps));
      CHECK(as_set(ctx, image_of(one_plus(r))) == (!prime ? s8 : alpha.is_zero() ? s01 : s1w));
      CHECK(as_set(ctx, kernel_of(one_plus(r))) == (!prime ? s0 : shifted.is_zero() ? s01 : s1w));
      CHECK(as_set(ctx, image_of(one_minus(r))) == (!prime ? s8 : shifted.is_zero() ? s01 : s1w));
      CHECK(as_set(ctx, kernel_of(one_minus(r))) == (!prime ? s0 : alpha.is_zero() ? s01 : s1w));
    }
  }
}

TEST_CASE("rho squared is tau of the trace") {
  for (int n = 1; n <= 2; ++n)
    for (int m = 0; m < (1 << n); ++m) {
      std::vector<std::uint8_t> bits;
      for (int i = 0; i < n; ++i) bits.push_back(static_cast<std::uint8_t>((m >> i) & 1));
      const GroupContext ctx(bits);
      for (const GF4Vector& a : all_vectors(n)) {
        const EndoMap r = make_rho(ctx, a);
        REQUIRE(compose(r, r).table() == make_tau(ctx, trace(a)).table());
      }
    }
}

TEST_CASE("index-2 subgroups are invariant exactly when they contain Im(1 + f)") {
  for (int n = 1; n <= 2; ++n)
    for (const char* e : kTwists2) {
      const GroupContext ctx = GroupContext::parse(std::string(e).substr(0, static_cast<std::size_t>(n)));
      if (n == 1 && e[1] != '0') continue;
      std::vector<EndoMap> maps;
      for (const GF4Vector& a : all_vectors(n)) maps.push_back(make_rho(ctx, a));
      for (const GF4Vector& v : all_vectors(n))
        if (in_prime_field(v)) maps.push_back(make_tau(ctx, v));
      for (const EndoMap& f : maps) {
        const Subgroup im = image_of(one_plus(f));
        for (const Subgroup& k : index2_subgroups(ctx)) REQUIRE(is_invariant(f, k) == im.is_subgroup_of(k));
      }
    }
}

TEST_CASE("Im(1 + f + f^2 + f^3) lies in every invariant index-4 subgroup") {
  std::size_t checked = 0;
  for (const char* e : kTwists2) {
    const GroupContext ctx = GroupContext::parse(e);
    const auto maxes = index2_subgroups(ctx);
    for (const GF4Vector& a : all_vectors(2)) {
      const EndoMap f = make_rho(ctx, a);
      const Subgroup img = image_of(norm4(f));
      std::set<std::vector<Index>> seen;
      for (std::size_t i = 0; i < maxes.size(); ++i)
        for (std::size_t j = i + 1; j < maxes.size(); ++j) {
          const Subgroup k = intersect(ctx, maxes[i], maxes[j]);
          if (!seen.insert(k.members.to_vector()).second || !is_invariant(f, k)) continue;
          REQUIRE(img.is_subgroup_of(k));
          ++checked;
        }
      if (order(f) == 4) {
        const Order4Search s = order4_pair(f);
        REQUIRE(s.pair);
        CHECK(img.is_subgroup_of(s.pair->K));
        const auto q = order4_quotient_condition(f);
        REQUIRE(q);
        CHECK(img.is_subgroup_of(q->K));
        checked += 2;
      }
    }
  }
  for (int eps = 0; eps < 2; ++eps) {
    FamilySpec s;
    s.family = Family::D;
    s.epsilon = eps;
    const FamilyInstance inst = build_family(s);
    CHECK(image_of(norm4(inst.group->tau())).is_subgroup_of(inst.group->K()));
  }
  CHECK(checked > 0);
}

TEST_CASE("order-4 search and the kernel criterion when Im(1 + f) avoids Phi") {
  std::size_t cases = 0;
  for (const char* e : kTwists2) {
    const GroupContext ctx = GroupContext::parse(e);
    const Subgroup phi = frattini(ctx);
    for (const GF4Vector& a : all_vectors(2)) {
      const EndoMap f = make_rho(ctx, a);
      if (order(f) != 4) continue;
      const EndoMap op = one_plus(f);
      const Subgroup im = image_of(op);
      if (intersect(ctx, im, phi).order() != 1) continue;
      ++cases;
      const bool criterion = kernel_of(op).order() < kernel_of(compose(op, op)).order();
      CHECK(order4_pair(f).pair.has_value() == criterion);
    }
  }
  MESSAGE("instances with Im(1+f) meeting Phi trivially: " << cases);
}

TEST_CASE("every level set at n = 2 has the predicted parameters") {
  for (const char* e : kTwists2) {
    const GroupContext ctx = GroupContext::parse(e);
    for (const GF4Vector& a : all_vectors(2)) {
      const FormSpec f{a};
      for (GF4 x : GF4::all()) {
        const PdsResult r = verify_pds(ctx, level_set(ctx, f, x));
        REQUIRE(std::holds_alternative<PdsParams>(r));
        const PdsParams p = std::get<PdsParams>(r);
        CHECK(matches_expected(p, expected_params(2, form_sign(f), x.is_zero())));
        CHECK(counting_identity_holds(p));
      }
    }
  }
}

TEST_CASE("fused intersection numbers are block sums") {
  const GroupContext ctx = GroupContext::parse("01");
  const SchemePartition s = build_scheme(ctx, FormSpec::parse("1w"), 4);
  const auto base = std::get<IntersectionNumbers>(intersection_numbers(s));
  for (const auto& rgs : set_partitions(4)) {
    std::vector<std::vector<int>> blocks;
    for (std::size_t c = 0; c < rgs.size(); ++c) {
      if (static_cast<std::size_t>(rgs[c]) >= blocks.size()) blocks.emplace_back();
      blocks[static_cast<std::size_t>(rgs[c])].push_back(static_cast<int>(c) + 1);
    }
    const auto fused = std::get<IntersectionNumbers>(intersection_numbers(fuse(s, blocks)));
    auto block = [&](int i) { return i == 0 ? std::vector<int>{0} : blocks[static_cast<std::size_t>(i - 1)]; };
    for (int i = 0; i < fused.size(); ++i)
      for (int j = 0; j < fused.size(); ++j)
        for (int k = 0; k < fused.size(); ++k) {
          std::int64_t sum = 0;
          for (int ii : block(i))
            for (int jj : block(j)) sum += base.at(ii, jj, block(k).front());
          REQUIRE(fused.at(i, j, k) == sum);
        }
  }
}

TEST_CASE("isometries preserve S4, generalized isometries preserve S3") {
  for (const char* e : kTwists2) {
    const GroupContext ctx = GroupContext::parse(e);
    for (const GF4Vector& a : all_vectors(2)) {
      const FormSpec f{a};
      const SchemePartition s4 = build_scheme(ctx, f, 4);
      const SchemePartition s3 = build_scheme(ctx, f, 3);
      for (const GF4Vector& v : all_vectors(2)) {
        if (!in_prime_field(v)) continue;
        const EndoMap t = make_tau(ctx, v);
        REQUIRE(is_isometry(t, f));
        CHECK(is_scheme_automorphism(t, s4));
      }
      const EndoMap r = make_rho(ctx, a);
      REQUIRE(is_generalized_isometry(r, f));
      CHECK(is_scheme_automorphism(r, s3));
      CHECK(is_scheme_automorphism(r, s4) == is_isometry(r, f));
    }
  }
}

TEST_CASE("searched constructions are regular with bounded class") {
  for (const char* e : {"00", "01", "11"}) {
    const GroupContext ctx = GroupContext::parse(e);
    for (const GF4Vector& a : all_vectors(2)) {
      const FormSpec f{a};
      const EndoMap r = make_rho(ctx, a);
      std::optional<GktPair> pair;
      if (order(r) == 2)
        pair = order2_pair(r);
      else
        pair = order4_pair(r).pair;
      REQUIRE(pair);
      const GktReport gkt = check_gkt_conditions(ctx, f, pair->K, r, pair->h);
      REQUIRE(gkt.ok());
      const RegularGroup g = RegularGroup::build(ctx, f, pair->K, r, pair->h);
      CHECK(verify_regular_action(g, build_scheme(ctx, f, 3).classes).ok());
      const DirectInvariants d = direct_invariants(g);
      CHECK(d.nilpotency_class <= (g.e() == 2 ? 3 : 6));
      if (gkt.nonabelian_by_index) CHECK(d.derived.order() > 1);
      const EquationMatches m = compare_predictions(d, predicted_subgroups(g));
      CHECK(m.eq2);
      CHECK(m.eq3());
      CHECK(m.eq4);
      CHECK(m.eq4_variants_agree);
    }
  }
}

TEST_CASE("relabelled pullbacks keep their parameters") {
  FamilySpec s;
  s.family = Family::B;
  s.e = "01";
  s.a = "10";
  s.b = "11";
  const FamilyInstance inst = build_family(s);
  const FiniteGroupTable t = group_table(inst.group);
  std::vector<Index> perm(t.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937(9));
  const FiniteGroupTable r = t.relabeled(perm);
  for (const IndexSet& d : inst.targets) {
    const IndexSet dp = pds_pullback(*inst.group, d);
    IndexSet moved(t.size());
    dp.for_each([&](Index g) { moved.insert(perm[g]); });
    CHECK(std::get<PdsParams>(verify_pds(r, moved)) == std::get<PdsParams>(verify_pds(inst.group->context(), d)));
  }
}
