#include "pdslab/quadratic_form.hpp"

namespace pdslab {

namespace {

void check_dims(const GroupContext& ctx, const FormSpec& a) {
  if (a.blocks() != ctx.blocks())
    throw InputError("form has " + std::to_string(a.blocks()) + " coefficients but the group has " +
                     std::to_string(ctx.blocks()) + " blocks");
}

}  // namespace

GF4 eval_form(const GroupContext& ctx, const FormSpec& a, Index g) {
  check_dims(ctx, a);
  GF4 q;
  for (int i = 0; i < ctx.blocks(); ++i) q += eval_block(a.a[static_cast<std::size_t>(i)], ctx.x(g, i), ctx.y(g, i));
  return q;
}

GF4 eval_form(const GroupContext& ctx, const FormSpec& a, const TwistedElement& g) {
  return eval_form(ctx, a, element_index(ctx, g));
}

int form_sign(const FormSpec& a) {
  int s = 1;
  for (GF4 alpha : a.a)
    if (alpha.trace() == GF4::one()) s = -s;
  return s;
}

std::vector<GF4> form_table(const GroupContext& ctx, const FormSpec& a) {
  check_dims(ctx, a);
  std::vector<GF4> table(ctx.size());
  for (Index g = 0; g < ctx.size(); ++g) table[g] = eval_form(ctx, a, g);
  return table;
}

IndexSet level_set(const GroupContext& ctx, const FormSpec& a, GF4 value) {
  check_dims(ctx, a);
  IndexSet out(ctx.size());
  for (Index g = 0; g < ctx.size(); ++g)
    if (eval_form(ctx, a, g) == value) out.insert(g);
  if (value.is_zero()) out.erase(ctx.identity());
  return out;
}

}  // namespace pdslab
