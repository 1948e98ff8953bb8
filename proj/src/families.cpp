#include "pdslab/families.hpp"

#include "pdslab/scheme.hpp"

namespace pdslab {

Family parse_family(std::string_view s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  throw InputError("unknown family '" + std::string(s) + "' (expected A, B, C or D)");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

std::string FamilySpec::to_string() const {
  std::string s = "family " + pdslab::to_string(family);
  if (family == Family::D) {
    s += " epsilon=" + std::to_string(epsilon) + " alpha=" + alpha + " tail_n=" + std::to_string(tail_n);
    if (tail_n > 0) s += " e=" + e + " a=" + a + " v=" + v;
    return s;
  }
  s += " e=" + e + " a=" + a;
  if (family == Family::A) s += " v=" + v;
  s += " b=" + b;
  return s;
}

bool family_A_admissible(const GF4Vector& e, const GF4Vector& v) {
  if (e.size() != v.size() || is_zero(v)) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].is_zero() && e[i].is_zero()) return false;
  return true;
}

namespace {

std::uint64_t pow2(int k) {
  if (k < 0 || k > 63) throw ContractError("exponent out of range");
  return std::uint64_t{1} << k;
}

/// 2^k for each k >= 0; negative exponents belong to vacuous displays.
std::vector<std::uint64_t> stated(std::initializer_list<int> exps) {
  std::vector<std::uint64_t> out;
  for (int k : exps)
    if (k >= 0) out.push_back(pow2(k));
  return out;
}

PredictedValue typed(std::string condition, int twos, int fours) {
  PredictedValue p;
  p.condition = std::move(condition);
  if (twos < 0 || fours < 0) {
    p.applicable = false;
    return p;
  }
  p.type = make_type(twos, fours);
  p.order = type_order(*p.type);
  return p;
}

PredictedValue order_only(std::string condition, std::uint64_t order) {
  PredictedValue p;
  p.condition = std::move(condition);
  p.order = order;
  return p;
}

std::vector<std::uint8_t> twist_bits(const GF4Vector& e) {
  std::vector<std::uint8_t> bits;
  for (GF4 x : e) bits.push_back(x.code());
  return bits;
}

void require_blocks(std::size_t n) {
  if (n < 2 || n > static_cast<std::size_t>(kMaxBlocks))
    throw InputError("families A, B and C need 2 <= n <= " + std::to_string(kMaxBlocks) + " blocks");
}

void require_length(const GF4Vector& x, std::size_t n, const char* name) {
  if (x.size() != n) throw InputError(std::string(name) + " must have " + std::to_string(n) + " entries");
}

/// sum_i b_i x_i over the blocks of g.
GF4 linear_form(const GroupContext& ctx, const GF4Vector& b, Index g) {
  GF4 s;
  for (int i = 0; i < ctx.blocks(); ++i) s += b[static_cast<std::size_t>(i)] * ctx.x(g, i);
  return s;
}

Subgroup subgroup_where(const GroupContext& ctx, auto&& pred) {
  IndexSet m(ctx.size());
  for (Index g = 0; g < ctx.size(); ++g)
    if (pred(g)) m.insert(g);
  return as_subgroup(ctx, m);
}

Index least_outside(const GroupContext& ctx, const Subgroup& s) {
  for (Index g = 0; g < ctx.size(); ++g)
    if (!s.contains(g)) return g;
  throw ContractError("subgroup is the whole group");
}

FamilyInstance finish(const FamilySpec& spec, const GroupContext& ctx, const FormSpec& form, Subgroup K,
                      const EndoMap& tau, Index h, int variant) {
  FamilyInstance inst;
  inst.spec = spec;
  inst.group = std::make_shared<const RegularGroup>(RegularGroup::build(ctx, form, std::move(K), tau, h));
  const SchemePartition s = build_scheme(ctx, form, variant);
  inst.targets = s.classes;
  inst.target_labels = s.labels;
  return inst;
}

}  // namespace

FamilyInstance build_family_A(const FamilySpec& spec) {
  const GF4Vector e = parse_gf2_vector(spec.e);
  const std::size_t n = e.size();
  require_blocks(n);
  const GF4Vector a = parse_gf4_vector(spec.a);
  const GF4Vector v = parse_gf2_vector(spec.v);
  const GF4Vector b = parse_gf4_vector(spec.b);
  require_length(a, n, "a");
  require_length(v, n, "v");
  require_length(b, n, "b");
  if (is_zero(b)) throw InputError("b must be nonzero");
  const int k = weight(v);
  const int l = weight(hadamard(v, e) + e);
  const int ni = static_cast<int>(n);
  if (!(0 <= l && l <= weight(e) && 1 <= ni - l && ni - l <= k && k <= ni))
    throw InputError("v is not admissible: need 0 <= l <= w(e) and 1 <= n-l <= k <= n");

  const GroupContext ctx(twist_bits(e));
  const FormSpec form{a};
  Subgroup K = subgroup_where(ctx, [&](Index g) { return linear_form(ctx, b, g).trace().is_zero(); });
  const Index h = least_outside(ctx, K);
  FamilyInstance inst = finish(spec, ctx, form, std::move(K), make_tau(ctx, v), h, 4);

  PredictedInvariants& p = inst.predicted;
  p.nilpotency_class = 2;
  p.class_condition = "always";
  p.exponent = 4;
  p.exponent_condition = "always";

  const GF4Vector one = ones(n);
  const bool b_v1_zero = is_zero(hadamard(b, v + one));
  p.derived = b_v1_zero ? typed("b*(v+1)=0", 2 * k - 1, 0) : typed("b*(v+1)!=0", 2 * k, 0);

  const int c0 = 4 * ni - 2 * k - 4 * l;
  if (b_v1_zero)
    p.center = typed("b*(v+1)=0", c0, 2 * l);
  else if (is_zero(hadamard(hadamard(b, v + one), e + one)))
    p.center = typed("b*(v+1)!=0, b*(v+1)*(e+1)=0", c0 + 1, 2 * l - 1);
  else
    p.center = typed("b*(v+1)*(e+1)!=0", c0 - 1, 2 * l);

  const int f = 2 * weight(hadamard(v, e) + v) + 2 * weight(e);
  p.frattini = is_zero(hadamard(b, hadamard(v, e) + one)) ? typed("b*(v*e+1)=0", f - 1, 0)
                                                           : typed("b*(v*e+1)!=0", f, 0);

  p.derived_orders_stated = stated({2 * k, 2 * k - 1});
  p.center_orders_stated = stated({c0 + 4 * l, c0 + 1 + 2 * (2 * l - 1), c0 - 1 + 4 * l});
  p.frattini_orders_stated = stated({2 * l + 2 * weight(e) - 1, 2 * l + 2 * weight(e)});
  return inst;
}

FamilyInstance build_family_B(const FamilySpec& spec) {
  const GF4Vector e = parse_gf2_vector(spec.e);
  const std::size_t n = e.size();
  require_blocks(n);
  const GF4Vector a = parse_gf2_vector(spec.a);
  const GF4Vector b = parse_gf2_vector(spec.b);
  require_length(a, n, "a");
  require_length(b, n, "b");
  if (is_zero(b)) throw InputError("b must be nonzero");

  const GroupContext ctx(twist_bits(e));
  const FormSpec form{a};
  Subgroup K = subgroup_where(ctx, [&](Index g) { return linear_form(ctx, b, g).trace().is_zero(); });
  const Index h = least_outside(ctx, K);
  FamilyInstance inst = finish(spec, ctx, form, std::move(K), make_rho(ctx, a), h, 3);

  PredictedInvariants& p = inst.predicted;
  const int ni = static_cast<int>(n);
  const int we = weight(e);
  const bool be_b = hadamard(b, e) == b;
  const bool class2 = we == 0 || (we == 1 && weight(b) == 1 && weight(hadamard(e, b)) == 1);
  p.nilpotency_class = class2 ? 2 : 3;
  p.class_condition = class2 ? "e=0 or w(e)=w(b)=w(e*b)=1" : "otherwise";
  p.exponent = we == 0 ? 4 : 8;
  p.exponent_condition = we == 0 ? "e=0" : "e!=0";

  p.derived = be_b ? typed("b*e=b", 2 * (ni - we) + 1, we - 1) : typed("b*e!=b", 2 * (ni - we) - 1, we);
  p.center = typed("always", 2 * (ni - we), we);
  p.frattini = be_b ? typed("b*e=b", 2 * ni - we - 1, we) : typed("b*e!=b", 2 * ni - we, we);

  const int d1 = 2 * (ni - we) + 1 + 2 * (we - 1);
  const int d2 = 2 * (ni - we) - 1 + 2 * we;
  p.derived_orders_stated = stated({d1, d2});
  p.center_orders_stated = stated({2 * (ni - we) + 2 * we});
  p.frattini_orders_stated = stated({2 * ni - we - 1 + 2 * we, 2 * ni - we + 2 * we});
  return inst;
}

FamilyInstance build_family_C(const FamilySpec& spec) {
  const GF4Vector e = parse_gf2_vector(spec.e);
  const std::size_t n = e.size();
  require_blocks(n);
  const GF4Vector a = parse_gf4_vector(spec.a);
  const GF4Vector b = parse_gf2_vector(spec.b);
  require_length(a, n, "a");
  require_length(b, n, "b");
  if (is_zero(b)) throw InputError("b must be nonzero");
  if (in_prime_field(a)) throw InputError("family C needs a outside F2^n");

  const GroupContext ctx(twist_bits(e));
  const FormSpec form{a};
  Subgroup H = subgroup_where(ctx, [&](Index g) { return linear_form(ctx, b, g).trace().is_zero(); });
  Subgroup K = subgroup_where(ctx, [&](Index g) { return linear_form(ctx, b, g).is_zero(); });
  const Index h = least_outside(ctx, H);
  const EndoMap rho = make_rho(ctx, a);
  FamilyInstance inst = finish(spec, ctx, form, K, rho, h, 4);
  // Only the graphs of Q^-1(0)\{0} and Q^-1(1) are targets.
  inst.targets.resize(2);
  inst.target_labels.resize(2);
  inst.H = std::move(H);

  PredictedInvariants& p = inst.predicted;
  const int ni = static_cast<int>(n);
  const GF4Vector T = trace(a);
  const GF4Vector one = ones(n);
  const int wT = weight(T);
  const int we = weight(e);
  const bool bT_b = hadamard(b, T) == b;
  const bool be_b = hadamard(b, e) == b;
  const bool order2 = wT == 1 && weight(b) == 1 && weight(hadamard(T, b)) == 1;

  p.nilpotency_class = order2 ? 2 : 4;
  p.class_condition = order2 ? "w(Tr(a))=w(b)=w(Tr(a)*b)=1" : "otherwise";
  const bool exp4 = is_zero(T + e);
  p.exponent = exp4 ? 4 : 8;
  p.exponent_condition = exp4 ? "Tr(a)+e=0" : "Tr(a)+e!=0";

  if (bT_b && be_b)
    p.derived = typed("b*Tr(a)=b, b*e=b", 2 * (ni - we) + wT, we - 1);
  else if (bT_b)
    p.derived = typed("b*Tr(a)=b, b*e!=b", 2 * (ni - we - 1) + wT, we);
  else if (be_b)
    p.derived = typed("b*Tr(a)!=b, b*e=b", 2 * (ni - we) + wT + 1, we - 1);
  else
    p.derived = typed("b*Tr(a)!=b, b*e!=b", 2 * (ni - we) + wT - 1, we);

  const int A = weight(hadamard(T + one, e + one));
  const int B = weight(hadamard(T + one, e));
  PredictedValue ker;
  if (bT_b)
    ker = typed("b*Tr(a)=b", wT + 2 * A, B);
  else if (be_b)
    ker = typed("b*Tr(a)!=b, b*e=b", wT + 2 * A + 1, B - 1);
  else
    ker = typed("b*Tr(a)!=b, b*e!=b", wT + 2 * A - 1, B);

  if (!order2) {
    p.center = ker;
  } else {
    const RegularGroup& g = *inst.group;
    const Subgroup ker_k = intersect(ctx, g.K(), fixed_points(rho));
    const Index h4 = g.h_sum(4);
    const bool in_phi = frattini(ctx, ker_k).contains(h4);
    PredictedValue z;
    z.applicable = ker.applicable;
    if (in_phi) {
      z.condition = "o(rho|K)=2, h_4 in Phi(Ker_K(1-rho))";
      if (ker.type) {
        AbelianType t = *ker.type;
        ++t[2];
        z.type = t;
      }
    } else {
      z.condition = "o(rho|K)=2, h_4 not in Phi(Ker_K(1-rho))";
      if (ker.type) {
        AbelianType t = *ker.type;
        const std::uint64_t o = element_order(ctx, h4);
        if (t.count(o) && t[o] > 0) {
          if (--t[o] == 0) t.erase(o);
          ++t[4];
          z.type = t;
        } else {
          z.applicable = false;
        }
      }
    }
    if (z.type) z.order = type_order(*z.type);
    p.center = z;
  }

  p.frattini = order_only("always", pow2(2 * ni - 1 + wT + B));
  p.derived_orders_stated = stated({2 * (ni - 1) + wT, 2 * ni + wT - 1});
  p.center_orders_stated = stated({2 * ni - wT, 2 * ni - wT - 1});
  p.frattini_orders_stated = stated({2 * ni - 1 + wT + B});
  return inst;
}

FamilyInstance build_family_D(const FamilySpec& spec) {
  if (spec.epsilon != 0 && spec.epsilon != 1) throw InputError("epsilon must be 0 or 1");
  if (spec.tail_n != 0)
    throw InputError("family D supports tail_n = 0 only: four rotated blocks already reach the " +
                     std::to_string(kMaxBlocks) + "-block limit");
  if (!spec.e.empty() || !spec.v.empty() || !spec.a.empty())
    throw InputError("family D with tail_n = 0 takes no tail vectors");
  const GF4Vector alpha = parse_gf4_vector(spec.alpha);
  if (alpha.size() != 1) throw InputError("alpha must be a single F4 literal");

  const auto eps = static_cast<std::uint8_t>(spec.epsilon);
  const GroupContext ctx(std::vector<std::uint8_t>(4, eps));
  const FormSpec form{GF4Vector(4, alpha[0])};
  Subgroup K = subgroup_where(ctx, [&](Index g) {
    return ctx.x(g, 0).trace() == ctx.x(g, 2).trace() && ctx.x(g, 1).trace() == ctx.x(g, 3).trace();
  });
  const Index h = ctx.make_block(0, GF4::omega(), GF4::zero());
  FamilyInstance inst = finish(spec, ctx, form, std::move(K), make_pi(ctx, {}), h, 4);

  // Tail quantities; the tail is empty here.
  const int n = 0;
  const int k = 0;
  const int l = 0;
  const int A = 0;
  const int B = 0;

  PredictedInvariants& p = inst.predicted;
  const bool e0 = spec.epsilon == 0;
  p.nilpotency_class = e0 ? 4 : 6;
  p.class_condition = e0 ? "epsilon=0" : "epsilon=1";
  p.exponent = e0 ? 8 : 16;
  p.exponent_condition = p.class_condition;
  p.derived = e0 ? typed("epsilon=0", 2 * (5 + k), 0) : typed("epsilon=1", 2 * (1 + k), 4);
  p.center = e0 ? typed("epsilon=0", 2 * (k + 2 * A + 2), 2 * B) : typed("epsilon=1", 2 * (k + 2 * A), 2 * (1 + B));
  p.frattini = e0 ? order_only("epsilon=0", pow2(2 * (5 + k + l) + 1)) : order_only("epsilon=1", pow2(2 * (6 + k + l) + 1));
  p.derived_orders_stated = stated({2 * (5 + k)});
  p.center_orders_stated = stated({2 * (n + l + 2)});
  p.frattini_orders_stated = stated({2 * (5 + k + l) + 1, 2 * (6 + k + l) + 1});
  return inst;
}

FamilyInstance build_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::A: return build_family_A(spec);
    case Family::B: return build_family_B(spec);
    case Family::C: return build_family_C(spec);
    case Family::D: return build_family_D(spec);
  }
  throw InputError("unknown family");
}

bool FamilyComparison::all_pass() const {
  for (const Check& c : checks)
    if (c.applicable && !c.pass) return false;
  return true;
}

const Check* FamilyComparison::find(std::string_view name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::string type_or_nonabelian(const std::optional<AbelianType>& t) { return t ? to_string(*t) : "non-abelian"; }

void compare_value(FamilyComparison& out, const std::string& name, const PredictedValue& p, const Subgroup& actual,
                   const std::optional<AbelianType>& actual_type, const std::vector<std::uint64_t>& stated) {
  const std::string order = std::to_string(actual.order());
  if (!p.applicable) {
    out.checks.push_back({name + ".order", "not applicable (" + p.condition + ")", order, false, false});
  } else {
    if (p.order)
      out.checks.push_back({name + ".order", std::to_string(*p.order), order, true, *p.order == actual.order()});
    if (p.type) {
      const std::string at = type_or_nonabelian(actual_type);
      out.checks.push_back({name + ".type", to_string(*p.type), at, true, actual_type && *actual_type == *p.type});
    }
  }
  std::string set;
  bool hit = false;
  for (std::uint64_t s : stated) {
    set += (set.empty() ? "" : "|") + std::to_string(s);
    hit = hit || s == actual.order();
  }
  out.checks.push_back({name + ".order_stated", set, order, true, hit});
}

}  // namespace

FamilyComparison compare_family(const FamilyInstance& inst, const DirectInvariants& direct) {
  FamilyComparison out;
  const PredictedInvariants& p = inst.predicted;
  out.checks.push_back({"class", std::to_string(p.nilpotency_class), std::to_string(direct.nilpotency_class), true,
                        p.nilpotency_class == direct.nilpotency_class});
  out.checks.push_back({"exponent", std::to_string(p.exponent), std::to_string(direct.exponent), true,
                        p.exponent == direct.exponent});
  compare_value(out, "derived", p.derived, direct.derived, direct.derived_type, p.derived_orders_stated);
  compare_value(out, "center", p.center, direct.center, direct.center_type, p.center_orders_stated);
  compare_value(out, "frattini", p.frattini, direct.frattini, direct.frattini_type, p.frattini_orders_stated);
  return out;
}

}  // namespace pdslab
