#include "pdslab/endomorphism.hpp"

#include <numeric>
#include <random>

namespace pdslab {

namespace {

bool check_homomorphism(const GroupContext& ctx, const std::vector<Index>& t) {
  const auto n = static_cast<Index>(ctx.size());
  if (t[ctx.identity()] != ctx.identity()) return false;
  auto ok = [&](Index u, Index v) { return t[ctx.add(u, v)] == ctx.add(t[u], t[v]); };
  if (n <= 256) {
    for (Index u = 0; u < n; ++u)
      for (Index v = 0; v < n; ++v)
        if (!ok(u, v)) return false;
    return true;
  }
  std::mt19937_64 rng(0x7a11);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  for (int i = 0; i < 100000; ++i)
    if (!ok(pick(rng), pick(rng))) return false;
  return true;
}

bool check_bijective(const std::vector<Index>& t) {
  std::vector<bool> seen(t.size(), false);
  for (Index v : t) {
    if (v >= t.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void require_same_group(const EndoMap& f, const EndoMap& g) {
  if (!(f.context() == g.context())) throw InputError("maps act on different groups");
}

template <class F>
std::vector<Index> tabulate(const GroupContext& ctx, F&& f) {
  std::vector<Index> t(ctx.size());
  for (Index g = 0; g < ctx.size(); ++g) t[g] = f(g);
  return t;
}

void require_endomorphism(const EndoMap& f) {
  if (!f.is_endomorphism()) throw ContractError("map " + f.descriptor().kind + " is not a homomorphism");
}

void require_automorphism(const EndoMap& f) {
  if (!f.is_automorphism()) throw ContractError("map " + f.descriptor().kind + " is not an automorphism");
}

}  // namespace

EndoMap EndoMap::from_table(const GroupContext& ctx, std::vector<Index> table, MapDescriptor descriptor) {
  if (table.size() != ctx.size()) throw InputError("map table has the wrong size");
  for (Index v : table)
    if (v >= ctx.size()) throw InputError("map table value out of range");
  EndoMap m(ctx, std::move(table), std::move(descriptor));
  m.homomorphism_ = check_homomorphism(m.ctx_, m.table_);
  m.bijective_ = check_bijective(m.table_);
  return m;
}

bool EndoMap::is_identity() const {
  for (Index g = 0; g < table_.size(); ++g)
    if (table_[g] != g) return false;
  return true;
}

EndoMap make_identity(const GroupContext& ctx) {
  return EndoMap::from_table(ctx, tabulate(ctx, [](Index g) { return g; }), {"identity", ""});
}

EndoMap make_zero(const GroupContext& ctx) {
  return EndoMap::from_table(ctx, tabulate(ctx, [](Index) { return Index{0}; }), {"zero", ""});
}

EndoMap make_tau(const GroupContext& ctx, const GF4Vector& v) {
  if (static_cast<int>(v.size()) != ctx.blocks()) throw InputError("tau parameter length mismatch");
  auto table = tabulate(ctx, [&](Index g) {
    Index out = 0;
    for (int i = 0; i < ctx.blocks(); ++i) {
      const GF4 x = ctx.x(g, i);
      out |= ctx.make_block(i, x, ctx.y(g, i) + v[static_cast<std::size_t>(i)] * x);
    }
    return out;
  });
  return EndoMap::from_table(ctx, std::move(table), {"tau", format_gf4_vector(v)});
}

EndoMap make_rho(const GroupContext& ctx, const GF4Vector& a) {
  if (static_cast<int>(a.size()) != ctx.blocks()) throw InputError("rho parameter length mismatch");
  auto table = tabulate(ctx, [&](Index g) {
    Index out = 0;
    for (int i = 0; i < ctx.blocks(); ++i) {
      const GF4 x2 = ctx.x(g, i).square();
      out |= ctx.make_block(i, x2, ctx.y(g, i).square() + a[static_cast<std::size_t>(i)] * x2);
    }
    return out;
  });
  return EndoMap::from_table(ctx, std::move(table), {"rho", format_gf4_vector(a)});
}

EndoMap make_pi(const GroupContext& ctx, const GF4Vector& tail_v) {
  if (ctx.blocks() < 4 || static_cast<int>(tail_v.size()) != ctx.blocks() - 4)
    throw InputError("pi needs a context of 4 + n blocks and a tail vector of length n");
  for (int i = 1; i < 4; ++i)
    if (ctx.twisted(i) != ctx.twisted(0)) throw InputError("pi needs the first four twist bits to agree");
  auto table = tabulate(ctx, [&](Index g) {
    Index out = 0;
    for (int i = 0; i < 4; ++i) {
      const int src = (i + 3) % 4;
      out |= ctx.make_block(i, ctx.x(g, src), ctx.y(g, src));
    }
    for (int i = 4; i < ctx.blocks(); ++i) {
      const GF4 x = ctx.x(g, i);
      out |= ctx.make_block(i, x, ctx.y(g, i) + tail_v[static_cast<std::size_t>(i - 4)] * x);
    }
    return out;
  });
  return EndoMap::from_table(ctx, std::move(table), {"pi", format_gf4_vector(tail_v)});
}

EndoMap compose(const EndoMap& f, const EndoMap& g) {
  require_same_group(f, g);
  auto table = tabulate(f.context(), [&](Index x) { return f(g(x)); });
  return EndoMap::from_table(f.context(), std::move(table),
                             {"composite", "(" + f.descriptor().kind + ")o(" + g.descriptor().kind + ")"});
}

EndoMap power(const EndoMap& f, std::uint64_t k) {
  std::vector<Index> table(f.table().size());
  std::iota(table.begin(), table.end(), Index{0});
  for (std::uint64_t i = 0; i < k; ++i)
    for (auto& v : table) v = f(v);
  return EndoMap::from_table(f.context(), std::move(table),
                             {"composite", f.descriptor().kind + "^" + std::to_string(k)});
}

std::uint64_t order(const EndoMap& f) {
  if (!f.is_bijective()) throw ContractError("order is only defined for bijective maps");
  std::vector<bool> seen(f.table().size(), false);
  std::uint64_t result = 1;
  for (Index start = 0; start < f.table().size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (Index g = start; !seen[g]; g = f(g)) {
      seen[g] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::uint64_t restricted_order(const EndoMap& f, const Subgroup& s) {
  require_endomorphism(f);
  std::vector<Index> cur = s.generators;
  for (std::uint64_t t = 1; t <= f.table().size(); ++t) {
    for (auto& v : cur) v = f(v);
    if (cur == s.generators) return t;
  }
  throw ContractError("map does not act periodically on the subgroup");
}

EndoMap one_plus(const EndoMap& f) {
  const auto& ctx = f.context();
  return EndoMap::from_table(ctx, tabulate(ctx, [&](Index g) { return ctx.add(g, f(g)); }),
                             {"composite", "1+" + f.descriptor().kind});
}

EndoMap one_minus(const EndoMap& f) {
  const auto& ctx = f.context();
  return EndoMap::from_table(ctx, tabulate(ctx, [&](Index g) { return ctx.sub(g, f(g)); }),
                             {"composite", "1-" + f.descriptor().kind});
}

EndoMap norm4(const EndoMap& f) {
  const auto& ctx = f.context();
  auto table = tabulate(ctx, [&](Index g) {
    const Index f1 = f(g);
    const Index f2 = f(f1);
    const Index f3 = f(f2);
    return ctx.add(ctx.add(g, f1), ctx.add(f2, f3));
  });
  return EndoMap::from_table(ctx, std::move(table), {"composite", "1+f+f^2+f^3 of " + f.descriptor().kind});
}

Subgroup image_of(const EndoMap& f) {
  require_endomorphism(f);
  const auto& ctx = f.context();
  IndexSet members(ctx.size());
  for (Index v : f.table()) members.insert(v);
  return as_subgroup(ctx, members);
}

Subgroup image_of(const EndoMap& f, const Subgroup& s) {
  require_endomorphism(f);
  std::vector<Index> imgs;
  for (Index g : s.generators) imgs.push_back(f(g));
  return closure(f.context(), imgs);
}

Subgroup kernel_of(const EndoMap& f) {
  require_endomorphism(f);
  const auto& ctx = f.context();
  IndexSet members(ctx.size());
  for (Index g = 0; g < ctx.size(); ++g)
    if (f(g) == ctx.identity()) members.insert(g);
  return as_subgroup(ctx, members);
}

Subgroup fixed_points(const EndoMap& f) { return kernel_of(one_minus(f)); }

bool is_isometry(const EndoMap& f, const FormSpec& a) {
  const auto q = form_table(f.context(), a);
  for (Index g = 0; g < q.size(); ++g)
    if (q[f(g)] != q[g]) return false;
  return true;
}

bool is_generalized_isometry(const EndoMap& f, const FormSpec& a) {
  const auto q = form_table(f.context(), a);
  bool plain = true;
  bool frobenius = true;
  for (Index g = 0; g < q.size(); ++g) {
    plain = plain && q[f(g)] == q[g];
    frobenius = frobenius && q[f(g)] == q[g].square();
  }
  return plain || frobenius;
}

bool is_invariant(const EndoMap& f, const Subgroup& s) {
  IndexSet img(s.members.universe());
  s.members.for_each([&](Index g) { img.insert(f(g)); });
  return img == s.members;
}

std::vector<Subgroup> invariant_index2(const EndoMap& f) {
  require_automorphism(f);
  const auto& ctx = f.context();
  const Subgroup im = image_of(one_plus(f));
  std::vector<Subgroup> out;
  for (const Functional& fn : functionals_vanishing_on(ctx, im)) {
    Subgroup k = functional_kernel(ctx, fn);
    if (!is_invariant(f, k)) throw ContractError("index-2 subgroup containing Im(1+f) is not invariant");
    out.push_back(std::move(k));
  }
  return out;
}

GktPair order2_pair(const EndoMap& f) {
  require_automorphism(f);
  if (order(f) != 2) throw ContractError("order2_pair requires an automorphism of order 2");
  const auto& ctx = f.context();
  const Subgroup im = image_of(one_plus(f));
  const auto fns = functionals_vanishing_on(ctx, im);
  if (fns.empty()) throw ContractError("no invariant index-2 subgroup exists");
  GktPair pair{functional_kernel(ctx, fns.front()), 0, std::nullopt};
  Index h = 0;
  while (pair.K.contains(h)) ++h;
  pair.h = h;
  return pair;
}

Order4Search order4_pair(const EndoMap& f) {
  require_automorphism(f);
  if (order(f) != 4) throw ContractError("order4_pair requires an automorphism of order 4");
  const auto& ctx = f.context();
  const EndoMap op = one_plus(f);
  const Subgroup im = image_of(op);
  const Subgroup ker = kernel_of(op);
  const Subgroup lower = join(ctx, ker, im);

  Order4Search result;
  for (const Functional& fn : functionals_vanishing_on(ctx, lower)) {
    const Subgroup h_sub = functional_kernel(ctx, fn);
    const Subgroup p = join(ctx, frattini(ctx, h_sub), image_of(op, h_sub));
    bool escapes = false;
    for (Index g : im.generators) escapes = escapes || !p.contains(g);
    if (!escapes) continue;
    ++result.qualifying_subgroups;
    if (result.pair) continue;

    std::optional<Index> h;
    for (Index g = 0; g < ctx.size() && !h; ++g)
      if (fn.evaluate(g) && !p.contains(op(g))) h = g;
    if (!h) {
      ++result.subgroups_without_h;
      continue;
    }
    Subgroup k = maximal_subgroup_avoiding(ctx, h_sub, p, op(*h));
    result.pair = GktPair{std::move(k), *h, h_sub};
  }
  return result;
}

std::optional<GktPair> order4_quotient_condition(const EndoMap& f) {
  require_automorphism(f);
  if (order(f) != 4) throw ContractError("order4_quotient_condition requires an automorphism of order 4");
  const auto& ctx = f.context();
  const EndoMap op = one_plus(f);
  const Subgroup m = join(ctx, frattini(ctx), image_of(one_plus(power(f, 2))));

  std::optional<Index> h;
  for (Index g = 0; g < ctx.size() && !h; ++g)
    if (!m.contains(op(g))) h = g;
  if (!h) return std::nullopt;

  const Index u = op(*h);
  for (const Functional& fn : functionals_vanishing_on(ctx, m)) {
    if (!fn.evaluate(u)) continue;
    Subgroup h_sub = functional_kernel(ctx, fn);
    IndexSet moved(ctx.size());
    h_sub.members.for_each([&](Index g) { moved.insert(f(g)); });
    Subgroup k = greedy_closure(ctx, h_sub.members.intersection(moved));
    return GktPair{std::move(k), *h, std::move(h_sub)};
  }
  throw ContractError("no index-2 subgroup separates h + f(h) from Phi(G_e) + Im(1 + f^2)");
}

}  // namespace pdslab
