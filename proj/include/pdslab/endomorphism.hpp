#pragma once

// Self-maps of G_e materialized as full index tables, the named maps
// tau_v, rho_a and the block rotation pi, pointwise endomorphism arithmetic
// (1 + f, 1 - f, 1 + f + f^2 + f^3) and searches for invariant subgroups.

#include <optional>
#include <string>
#include <vector>

#include "pdslab/quadratic_form.hpp"

namespace pdslab {

/// Symbolic origin of a map: kind is identity, zero, tau, rho, pi or composite.
struct MapDescriptor {
  std::string kind;
  std::string param;
};

class EndoMap {
 public:
  /// Wraps a table and checks the homomorphism property (all pairs when
  /// |G_e| <= 256, otherwise 1e5 sampled pairs) and bijectivity.
  static EndoMap from_table(const GroupContext& ctx, std::vector<Index> table, MapDescriptor descriptor);

  const GroupContext& context() const { return ctx_; }
  const std::vector<Index>& table() const { return table_; }
  const MapDescriptor& descriptor() const { return descriptor_; }
  Index operator()(Index g) const { return table_[g]; }

  bool is_endomorphism() const { return homomorphism_; }
  bool is_bijective() const { return bijective_; }
  bool is_automorphism() const { return homomorphism_ && bijective_; }
  bool is_identity() const;

 private:
  EndoMap(GroupContext ctx, std::vector<Index> table, MapDescriptor descriptor)
      : ctx_(std::move(ctx)), table_(std::move(table)), descriptor_(std::move(descriptor)) {}

  GroupContext ctx_;
  std::vector<Index> table_;
  MapDescriptor descriptor_;
  bool homomorphism_ = false;
  bool bijective_ = false;
};

EndoMap make_identity(const GroupContext& ctx);
EndoMap make_zero(const GroupContext& ctx);
/// tau_v(x_i, y_i) = (x_i, y_i + v_i x_i) blockwise.
EndoMap make_tau(const GroupContext& ctx, const GF4Vector& v);
/// rho_a(x_i, y_i) = (x_i^2, y_i^2 + a_i x_i^2) blockwise.
EndoMap make_rho(const GroupContext& ctx, const GF4Vector& a);
/// Rotates the first four blocks by one position and applies tau_v to the
/// remaining blocks. The first four twist bits must agree.
EndoMap make_pi(const GroupContext& ctx, const GF4Vector& tail_v);

/// f o g.
EndoMap compose(const EndoMap& f, const EndoMap& g);
EndoMap power(const EndoMap& f, std::uint64_t k);
/// Multiplicative order of a bijective map.
std::uint64_t order(const EndoMap& f);
/// Smallest t >= 1 with f^t = 1 on s.
std::uint64_t restricted_order(const EndoMap& f, const Subgroup& s);

EndoMap one_plus(const EndoMap& f);
EndoMap one_minus(const EndoMap& f);
/// g -> g + f(g) + f^2(g) + f^3(g).
EndoMap norm4(const EndoMap& f);

Subgroup image_of(const EndoMap& f);
Subgroup kernel_of(const EndoMap& f);
/// Image of the restriction of f to s.
Subgroup image_of(const EndoMap& f, const Subgroup& s);
/// Fix(f) = Ker(1 - f).
Subgroup fixed_points(const EndoMap& f);

bool is_isometry(const EndoMap& f, const FormSpec& a);
/// Q_a(f(g)) = Q_a(g) for all g, or Q_a(f(g)) = Q_a(g)^2 for all g.
bool is_generalized_isometry(const EndoMap& f, const FormSpec& a);

/// f(s) = s, by direct scan.
bool is_invariant(const EndoMap& f, const Subgroup& s);

/// Index-2 subgroups K with Im(1 + f) <= K, in functional order.
std::vector<Subgroup> invariant_index2(const EndoMap& f);

struct GktPair {
  Subgroup K;
  Index h = 0;
  /// Index-2 intermediate subgroup used by the order-4 constructions.
  std::optional<Subgroup> H;
};

/// First f-invariant index-2 subgroup with the least element outside it.
GktPair order2_pair(const EndoMap& f);

struct Order4Search {
  std::optional<GktPair> pair;
  /// Index-2 subgroups H satisfying Ker(1+f) + Im(1+f) <= H and Im(1+f) not in Phi(H) + Im_H(1+f).
  int qualifying_subgroups = 0;
  /// Qualifying H for which no h outside H has h + f(h) outside Phi(H) + Im_H(1+f).
  int subgroups_without_h = 0;
};

/// Index-4 invariant subgroup K and h for an order-4 automorphism, built
/// through an index-2 subgroup H as described in the search criterion above.
Order4Search order4_pair(const EndoMap& f);

/// Construction from a non-trivial action of f on G_e / (Phi(G_e) + Im(1 + f^2)):
/// K = H cap f(H) for an index-2 H avoiding h + f(h).
std::optional<GktPair> order4_quotient_condition(const EndoMap& f);

}  // namespace pdslab
