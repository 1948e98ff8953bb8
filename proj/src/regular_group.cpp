#include "pdslab/regular_group.hpp"

#include <algorithm>
#include <random>

namespace pdslab {

GktReport check_gkt_conditions(const GroupContext& ctx, const FormSpec& a, const Subgroup& K, const EndoMap& tau,
                               Index h) {
  GktReport report;
  const std::size_t n = ctx.size();
  if (!(tau.context() == ctx)) throw InputError("tau is defined on a different group");
  if (K.members.universe() != n) throw InputError("K is a subset of a different group");
  if (h >= n) throw InputError("h is out of range");

  if (!tau.is_automorphism()) {
    report.violations.push_back({"a", "tau is not an automorphism of G_e", std::nullopt});
    return report;
  }
  if (!is_generalized_isometry(tau, a))
    report.violations.push_back({"a", "tau is not a generalized isometry of Q_a", std::nullopt});
  report.e = order(tau);
  const std::uint64_t e = report.e;
  if (e <= 1) {
    report.violations.push_back({"a", "tau has order 1", std::nullopt});
    return report;
  }

  std::optional<Index> escape;
  K.members.for_each([&](Index x) {
    if (!escape && !K.contains(tau(x))) escape = x;
  });
  if (escape) report.violations.push_back({"b", "K is not tau-invariant", escape});
  if (K.order() * e != n)
    report.violations.push_back(
        {"b", "K has index " + std::to_string(n / std::max<std::size_t>(K.order(), 1)) + ", expected " +
                  std::to_string(e),
         std::nullopt});

  Index hi = 0;
  Index tih = h;
  for (std::uint64_t i = 1; i <= e; ++i) {
    hi = ctx.add(hi, tih);
    tih = tau(tih);
    if (i < e && K.contains(hi))
      report.violations.push_back({"c", "h_" + std::to_string(i) + " lies in K", hi});
    if (i == e && !K.contains(hi)) report.violations.push_back({"c", "h_e does not lie in K", hi});
  }

  report.nonabelian_by_index = n / fixed_points(tau).order() > e;
  return report;
}

RegularGroup RegularGroup::build(const GroupContext& ctx, const FormSpec& a, Subgroup K, const EndoMap& tau, Index h,
                                 bool validate) {
  if (validate) {
    const GktReport r = check_gkt_conditions(ctx, a, K, tau, h);
    if (!r.ok()) {
      std::string msg = "conditions violated:";
      for (const auto& v : r.violations) msg += " (" + v.condition + ") " + v.message + ";";
      throw InputError(msg);
    }
  }
  if (!(tau.context() == ctx) || K.members.universe() != ctx.size() || h >= ctx.size())
    throw InputError("K, tau and h must live on the same group");
  if (!tau.is_automorphism()) throw InputError("tau must be an automorphism");
  const std::uint64_t e = order(tau);
  if (e <= 1 || K.order() * e != ctx.size()) throw InputError("K must have index equal to the order of tau");

  RegularGroup g(ctx, a, std::move(K), tau, h);
  g.e_ = static_cast<unsigned>(e);
  g.block_ = g.K_.order();

  g.tau_pow_.push_back(make_identity(ctx).table());
  for (unsigned i = 1; i < g.e_; ++i) {
    std::vector<Index> next(ctx.size());
    for (Index x = 0; x < ctx.size(); ++x) next[x] = tau(g.tau_pow_.back()[x]);
    g.tau_pow_.push_back(std::move(next));
  }
  g.h_sums_.push_back(0);
  for (unsigned i = 0; i < g.e_; ++i) g.h_sums_.push_back(ctx.add(g.h_sums_.back(), g.tau_pow_[i][h]));

  const std::vector<Index> k_members = g.K_.members.to_vector();
  g.pos_.assign(g.e_, std::vector<Index>(ctx.size(), kAbsent));
  g.elem_at_.resize(ctx.size());
  for (unsigned i = 0; i < g.e_; ++i) {
    std::vector<Index> coset;
    coset.reserve(k_members.size());
    for (Index k : k_members) coset.push_back(ctx.add(k, g.h_sums_[i]));
    std::sort(coset.begin(), coset.end());
    for (std::size_t r = 0; r < coset.size(); ++r) {
      const auto idx = static_cast<Index>(i * g.block_ + r);
      g.pos_[i][coset[r]] = idx;
      g.elem_at_[idx] = coset[r];
    }
  }
  return g;
}

std::optional<Index> RegularGroup::try_element(Index a, unsigned i) const {
  if (a >= ctx_.size()) return std::nullopt;
  const Index x = pos_[i % e_][a];
  if (x == kAbsent) return std::nullopt;
  return x;
}

Index RegularGroup::element(Index a, unsigned i) const {
  const auto x = try_element(a, i);
  if (!x) throw ContractError("element " + format_element(ctx_, a) + " is not in the coset K + h_" + std::to_string(i % e_));
  return *x;
}

std::vector<Index> RegularGroup::generators() const {
  std::vector<Index> gens;
  for (Index k : K_.generators) gens.push_back(element(k, 0));
  gens.push_back(element(h_, 1));
  return gens;
}

std::string RegularGroup::format(Index x) const {
  return "(" + format_element(ctx_, elem_at_[x]) + "," + std::to_string(level(x)) + ")";
}

FiniteGroupTable group_table(std::shared_ptr<const RegularGroup> g) { return FiniteGroupTable::from_group(std::move(g)); }

RegularityReport verify_regular_action(const RegularGroup& g, const std::vector<IndexSet>& targets, std::size_t samples,
                                       std::uint64_t seed) {
  RegularityReport report;
  const GroupContext& ctx = g.context();
  const auto n = static_cast<Index>(ctx.size());

  IndexSet orbit(n);
  std::size_t fixers = 0;
  for (Index x = 0; x < g.size(); ++x) {
    const Index p = g.act(x, 0);
    orbit.insert(p);
    fixers += p == 0;
  }
  report.orbit_size = orbit.size();
  report.orbit_regular = orbit.size() == n && g.size() == n;
  report.trivial_stabilizer = fixers == 1;
  if (!report.orbit_regular || !report.trivial_stabilizer) {
    report.witness = "orbit of 0 has " + std::to_string(orbit.size()) + " points and " + std::to_string(fixers) +
                     " elements fix 0";
    return report;
  }

  std::vector<int> label(n, -1);
  label[0] = 0;
  for (std::size_t c = 0; c < targets.size(); ++c)
    targets[c].for_each([&](Index d) { label[d] = static_cast<int>(c) + 1; });

  const std::vector<Index> gens = g.generators();
  auto check = [&](Index x, Index p, Index q) {
    ++report.pairs_checked;
    const Index before = ctx.sub(q, p);
    const Index after = ctx.sub(g.act(x, q), g.act(x, p));
    if (label[before] == label[after]) return true;
    report.witness = "generator " + g.format(x) + " moves pair (" + format_element(ctx, p) + ", " +
                     format_element(ctx, q) + ") out of its class";
    return false;
  };

  report.exhaustive = ctx.blocks() <= 2;
  if (report.exhaustive) {
    for (Index x : gens)
      for (Index p = 0; p < n; ++p)
        for (Index q = 0; q < n; ++q)
          if (!check(x, p, q)) return report;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Index> pick(0, n - 1);
    std::uniform_int_distribution<std::size_t> pick_gen(0, gens.size() - 1);
    for (std::size_t s = 0; s < samples; ++s)
      if (!check(gens[pick_gen(rng)], pick(rng), pick(rng))) return report;
  }
  report.preserves_classes = true;
  return report;
}

Subgroup center(const RegularGroup& g) {
  const std::vector<Index> gens = g.generators();
  IndexSet z(g.size());
  for (Index x = 0; x < g.size(); ++x) {
    bool central = true;
    for (Index s : gens)
      if (!commute(g, x, s)) {
        central = false;
        break;
      }
    if (central) z.insert(x);
  }
  return as_subgroup(g, z);
}

std::vector<Subgroup> lower_central_series(const RegularGroup& g) {
  const std::vector<Index> gens = g.generators();
  std::vector<Subgroup> series{closure(g, gens)};
  while (series.back().order() > 1) {
    std::vector<Index> seeds;
    for (Index x : series.back().generators)
      for (Index y : gens) seeds.push_back(commutator(g, x, y));
    Subgroup next = normal_closure(g, seeds, std::span<const Index>(gens));
    if (next.order() == series.back().order()) throw ContractError("lower central series does not terminate");
    series.push_back(std::move(next));
  }
  return series;
}

Subgroup frattini(const RegularGroup& g) {
  SubgroupBuilder<RegularGroup> b(g);
  for (Index x = 0; x < g.size(); ++x) b.add(g.mul(x, x));
  return std::move(b).build();
}

DirectInvariants direct_invariants(const RegularGroup& g) {
  DirectInvariants d;
  d.order = g.size();
  d.lower_central_series = lower_central_series(g);
  d.nilpotency_class = static_cast<int>(d.lower_central_series.size()) - 1;
  d.derived = d.lower_central_series.size() > 1 ? d.lower_central_series[1] : d.lower_central_series[0];
  d.center = center(g);
  d.frattini = frattini(g);
  d.exponent = exponent(g, d.lower_central_series[0].members);
  auto type_if_abelian = [&](const Subgroup& s) -> std::optional<AbelianType> {
    if (!is_abelian(g, s)) return std::nullopt;
    return abelian_type(g, s);
  };
  d.center_type = type_if_abelian(d.center);
  d.derived_type = type_if_abelian(d.derived);
  d.frattini_type = type_if_abelian(d.frattini);
  return d;
}

namespace {

/// {(x, 0) : x in s} for s <= K.
Subgroup embed_level0(const RegularGroup& g, const Subgroup& s) {
  SubgroupBuilder<RegularGroup> b(g);
  for (Index x : s.generators) b.add(g.element(x, 0));
  return std::move(b).build();
}

}  // namespace

PredictedSubgroups predicted_subgroups(const RegularGroup& g) {
  const GroupContext& ctx = g.context();
  const EndoMap& tau = g.tau();
  PredictedSubgroups p;

  const EndoMap one_minus_tau = one_minus(tau);
  Subgroup level = g.K();
  for (int step = 0; step < 64; ++step) {
    level = image_of(one_minus_tau, level);
    p.derived_series.push_back(embed_level0(g, level));
    if (level.order() == 1) break;
  }

  p.t = restricted_order(tau, g.K());
  const auto t = static_cast<unsigned>(p.t);
  p.m = element_order(g, g.element(g.h_sum(t), t));
  p.h_e_order = element_order(ctx, g.h_sum(g.e()));
  const Subgroup fix_k = intersect(ctx, g.K(), fixed_points(tau));
  {
    SubgroupBuilder<RegularGroup> b(g, embed_level0(g, fix_k));
    if (t < g.e()) b.add(g.element(g.h_sum(t), t));
    p.center = std::move(b).build();
  }
  p.center_order_formula = t < g.e() ? fix_k.order() * p.m / p.h_e_order : fix_k.order();

  SubgroupBuilder<RegularGroup> minus(g);
  SubgroupBuilder<RegularGroup> plus(g);
  for (Index x : g.K().generators) {
    const Index twice = g.element(ctx.twice(x), 0);
    minus.add(twice);
    plus.add(twice);
    minus.add(g.element(ctx.sub(x, tau(x)), 0));
    plus.add(g.element(ctx.add(x, tau(x)), 0));
  }
  const Index h2 = g.element(g.h_sum(2), 2);
  minus.add(h2);
  plus.add(h2);
  p.frattini_minus = std::move(minus).build();
  p.frattini_plus = std::move(plus).build();
  return p;
}

EquationMatches compare_predictions(const DirectInvariants& direct, const PredictedSubgroups& predicted) {
  EquationMatches m;
  const auto& series = direct.lower_central_series;
  m.eq2 = series.size() == predicted.derived_series.size() + 1;
  for (std::size_t k = 1; m.eq2 && k < series.size(); ++k) m.eq2 = series[k] == predicted.derived_series[k - 1];
  m.eq3_subgroup = predicted.center == direct.center;
  m.eq3_order = predicted.center_order_formula == direct.center.order();
  m.eq4 = predicted.frattini_minus == direct.frattini;
  m.eq4_variants_agree = predicted.frattini_minus == predicted.frattini_plus;
  return m;
}

IndexSet pds_pullback(const RegularGroup& g, const IndexSet& d) {
  if (d.universe() != g.context().size()) throw InputError("subset universe does not match G_e");
  IndexSet out(g.size());
  d.for_each([&](Index a) {
    for (unsigned i = 0; i < g.e(); ++i)
      if (const auto x = g.try_element(a, i)) {
        out.insert(*x);
        break;
      }
  });
  return out;
}

}  // namespace pdslab
