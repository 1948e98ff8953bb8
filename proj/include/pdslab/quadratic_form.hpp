#pragma once

#include <string_view>

#include "pdslab/twisted_group.hpp"

namespace pdslab {

/// Coefficients (alpha_1, ..., alpha_n) of Q_a = Q_{alpha_1} + ... + Q_{alpha_n},
/// where Q_alpha(x, y) = alpha x^2 + x y + y^2.
struct FormSpec {
  GF4Vector a;

  static FormSpec parse(std::string_view literal) { return FormSpec{parse_gf4_vector(literal)}; }
  std::string to_string() const { return format_gf4_vector(a); }
  int blocks() const { return static_cast<int>(a.size()); }
};

/// Q_alpha(x, y) for a single block.
constexpr GF4 eval_block(GF4 alpha, GF4 x, GF4 y) { return alpha * x.square() + x * y + y.square(); }

/// Q_a(g); depends only on the coordinates, not on the twist vector.
GF4 eval_form(const GroupContext& ctx, const FormSpec& a, Index g);
GF4 eval_form(const GroupContext& ctx, const FormSpec& a, const TwistedElement& g);

/// prod_i (-1)^Tr(alpha_i).
int form_sign(const FormSpec& a);

/// {g : Q_a(g) = value}, with 0 removed when value = 0.
IndexSet level_set(const GroupContext& ctx, const FormSpec& a, GF4 value);

/// Q_a evaluated on every element, indexed by element index.
std::vector<GF4> form_table(const GroupContext& ctx, const FormSpec& a);

}  // namespace pdslab
