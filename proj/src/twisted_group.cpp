#include "pdslab/twisted_group.hpp"

namespace pdslab {

GroupContext::GroupContext(std::vector<std::uint8_t> twist) : twist_(std::move(twist)) {
  if (twist_.empty() || static_cast<int>(twist_.size()) > kMaxBlocks)
    throw InputError("block count must be between 1 and " + std::to_string(kMaxBlocks));
  for (int i = 0; i < blocks(); ++i) {
    if (twist_[static_cast<std::size_t>(i)] > 1) throw InputError("twist bits must be 0 or 1");
    if (twist_[static_cast<std::size_t>(i)]) twisted_shifts_.push_back(shift(i));
  }
}

GroupContext GroupContext::parse(std::string_view twist) {
  std::vector<std::uint8_t> bits;
  for (char c : twist) {
    if (c != '0' && c != '1') throw InputError("twist vector must be binary, got '" + std::string(twist) + "'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return GroupContext(std::move(bits));
}

int GroupContext::twist_weight() const {
  int w = 0;
  for (auto b : twist_) w += b;
  return w;
}

std::string GroupContext::twist_string() const {
  std::string s;
  for (auto b : twist_) s.push_back(static_cast<char>('0' + b));
  return s;
}

GF4Vector GroupContext::twist_vector() const {
  GF4Vector v;
  for (auto b : twist_) v.push_back(GF4(b));
  return v;
}

Index element_index(const GroupContext& ctx, const TwistedElement& u) {
  if (static_cast<int>(u.blocks.size()) != ctx.blocks()) throw InputError("element dimension mismatch");
  Index k = 0;
  for (const auto& [x, y] : u.blocks) k = (k << 4) | static_cast<Index>((x.code() << 2) | y.code());
  return k;
}

TwistedElement index_element(const GroupContext& ctx, std::uint64_t k) {
  if (k >= ctx.size()) throw InputError("element index out of range");
  TwistedElement u;
  const auto idx = static_cast<Index>(k);
  for (int i = 0; i < ctx.blocks(); ++i) u.blocks.emplace_back(ctx.x(idx, i), ctx.y(idx, i));
  return u;
}

TwistedElement parse_element(const GroupContext& ctx, std::string_view literal) {
  if (literal.size() != 2 * static_cast<std::size_t>(ctx.blocks()))
    throw InputError("element literal '" + std::string(literal) + "' must have " +
                     std::to_string(2 * ctx.blocks()) + " characters");
  TwistedElement u;
  for (std::size_t i = 0; i < literal.size(); i += 2)
    u.blocks.emplace_back(GF4::from_char(literal[i]), GF4::from_char(literal[i + 1]));
  return u;
}

Index parse_element_index(const GroupContext& ctx, std::string_view literal) {
  return element_index(ctx, parse_element(ctx, literal));
}

std::string format_element(const GroupContext& ctx, Index u) {
  std::string s;
  for (int i = 0; i < ctx.blocks(); ++i) {
    s.push_back(ctx.x(u, i).to_char());
    s.push_back(ctx.y(u, i).to_char());
  }
  return s;
}

TwistedElement twisted_add(const GroupContext& ctx, const TwistedElement& u, const TwistedElement& v) {
  return index_element(ctx, ctx.add(element_index(ctx, u), element_index(ctx, v)));
}

TwistedElement twisted_neg(const GroupContext& ctx, const TwistedElement& u) {
  return index_element(ctx, ctx.neg(element_index(ctx, u)));
}

Subgroup subgroup_closure(const GroupContext& ctx, const std::vector<TwistedElement>& gens) {
  std::vector<Index> idx;
  for (const auto& g : gens) idx.push_back(element_index(ctx, g));
  return closure(ctx, idx);
}

AbelianType abelian_type(const GroupContext& ctx, const Subgroup& s) {
  if (s.members.universe() != ctx.size()) throw ContractError("subgroup belongs to a different group");
  const Subgroup checked = as_subgroup(ctx, s.members);
  return abelian_type<GroupContext>(ctx, checked);
}

Subgroup frattini(const GroupContext& ctx) {
  std::vector<Index> doubles;
  for (Index g = 0; g < ctx.size(); ++g) doubles.push_back(ctx.twice(g));
  return closure(ctx, doubles);
}

Subgroup frattini(const GroupContext& ctx, const Subgroup& s) {
  std::vector<Index> doubles;
  for (Index g : s.generators) doubles.push_back(ctx.twice(g));
  return closure(ctx, doubles);
}

namespace {

std::vector<int> basis_bits(const GroupContext& ctx) {
  std::vector<int> bits;
  for (int i = 0; i < ctx.blocks(); ++i) {
    const int sh = ctx.shift(i);
    bits.push_back(sh + 2);
    bits.push_back(sh + 3);
    if (!ctx.twisted(i)) {
      bits.push_back(sh);
      bits.push_back(sh + 1);
    }
  }
  return bits;
}

}  // namespace

int frattini_quotient_rank(const GroupContext& ctx) { return static_cast<int>(basis_bits(ctx).size()); }

std::vector<Functional> index2_functionals(const GroupContext& ctx) {
  const std::vector<int> bits = basis_bits(ctx);
  const int r = static_cast<int>(bits.size());
  std::vector<Functional> out;
  out.reserve((std::size_t{1} << r) - 1);
  for (std::uint64_t c = 1; c < (std::uint64_t{1} << r); ++c) {
    Functional f;
    f.coefficients = c;
    for (int j = 0; j < r; ++j)
      if ((c >> (r - 1 - j)) & 1u) f.mask |= Index{1} << bits[static_cast<std::size_t>(j)];
    out.push_back(f);
  }
  return out;
}

std::vector<Functional> functionals_vanishing_on(const GroupContext& ctx, const Subgroup& s) {
  std::vector<Functional> out;
  for (const Functional& f : index2_functionals(ctx)) {
    bool vanishes = true;
    for (Index g : s.generators)
      if (f.evaluate(g)) {
        vanishes = false;
        break;
      }
    if (vanishes) out.push_back(f);
  }
  return out;
}

Subgroup functional_kernel(const GroupContext& ctx, const Functional& f) {
  IndexSet members(ctx.size());
  for (Index g = 0; g < ctx.size(); ++g)
    if (!f.evaluate(g)) members.insert(g);
  return greedy_closure(ctx, members);
}

std::vector<Subgroup> index2_subgroups(const GroupContext& ctx) {
  std::vector<Subgroup> out;
  for (const Functional& f : index2_functionals(ctx)) out.push_back(functional_kernel(ctx, f));
  return out;
}

}  // namespace pdslab
