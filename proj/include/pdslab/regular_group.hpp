#pragma once

// The groups G_{K,tau,h} = <R(K), R(h) tau> acting regularly on G_e.
//
// An element is a pair (a, i) with a in K + h_i, where h_0 = 0 and
// h_i = h + tau(h) + ... + tau^{i-1}(h). Multiplication is
//   (a, i)(b, j) = (a + tau^i(b), i + j mod e)
// and (a, i) acts on G_e by p -> tau^i(p) + a.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdslab/endomorphism.hpp"
#include "pdslab/pds.hpp"

namespace pdslab {

struct GktViolation {
  /// "a", "b" or "c".
  std::string condition;
  std::string message;
  std::optional<Index> witness;
};

struct GktReport {
  std::vector<GktViolation> violations;
  std::uint64_t e = 0;
  /// [G_e : Fix(tau)] > e, which forces a non-abelian group.
  bool nonabelian_by_index = false;
  bool ok() const { return violations.empty(); }
};

/// (a) tau is an automorphism and generalized isometry of Q_a of order e > 1;
/// (b) K is tau-invariant of index e; (c) h_e in K and h_1, .., h_{e-1} not in K.
GktReport check_gkt_conditions(const GroupContext& ctx, const FormSpec& a, const Subgroup& K, const EndoMap& tau,
                               Index h);

class RegularGroup {
 public:
  /// Throws InputError listing the violated conditions unless `validate` is
  /// false, in which case only the shapes are checked (for corrupted inputs).
  static RegularGroup build(const GroupContext& ctx, const FormSpec& a, Subgroup K, const EndoMap& tau, Index h,
                            bool validate = true);

  std::size_t size() const { return elem_at_.size(); }
  Index identity() const { return pos_[0][0]; }
  Index mul(Index x, Index y) const {
    const unsigned i = level(x);
    const unsigned j = level(y);
    const Index c = ctx_.add(elem_at_[x], tau_pow_[i][elem_at_[y]]);
    return pos_[(i + j) % e_][c];
  }
  Index inv(Index x) const {
    const unsigned i = level(x);
    const unsigned k = (e_ - i) % e_;
    return pos_[k][tau_pow_[k][ctx_.neg(elem_at_[x])]];
  }

  const GroupContext& context() const { return ctx_; }
  const FormSpec& form() const { return form_; }
  const Subgroup& K() const { return K_; }
  const EndoMap& tau() const { return tau_; }
  Index h() const { return h_; }
  unsigned e() const { return e_; }
  /// h_i for 0 <= i <= e.
  Index h_sum(unsigned i) const { return h_sums_.at(i); }
  Index tau_power(unsigned i, Index g) const { return tau_pow_[i % e_][g]; }

  /// The G_e component a of (a, i).
  Index coset_element(Index x) const { return elem_at_[x]; }
  unsigned level(Index x) const { return static_cast<unsigned>(x / block_); }
  /// Index of (a, i mod e); throws ContractError if a is not in K + h_i.
  Index element(Index a, unsigned i) const;
  /// Index of (a, i mod e), or nullopt when a is not in K + h_i.
  std::optional<Index> try_element(Index a, unsigned i) const;

  /// tau^i(p) + a.
  Index act(Index x, Index p) const { return ctx_.add(tau_pow_[level(x)][p], elem_at_[x]); }

  /// (k, 0) for the generators k of K, then (h, 1).
  std::vector<Index> generators() const;

  std::string format(Index x) const;

 private:
  RegularGroup(GroupContext ctx, FormSpec form, Subgroup K, EndoMap tau, Index h)
      : ctx_(std::move(ctx)), form_(std::move(form)), K_(std::move(K)), tau_(std::move(tau)), h_(h) {}

  static constexpr Index kAbsent = ~Index{0};

  GroupContext ctx_;
  FormSpec form_;
  Subgroup K_;
  EndoMap tau_;
  Index h_;
  unsigned e_ = 1;
  std::size_t block_ = 0;
  std::vector<Index> h_sums_;
  std::vector<std::vector<Index>> tau_pow_;
  /// pos_[i][a] = index of (a, i), or kAbsent.
  std::vector<std::vector<Index>> pos_;
  std::vector<Index> elem_at_;
};

FiniteGroupTable group_table(std::shared_ptr<const RegularGroup> g);

struct RegularityReport {
  bool orbit_regular = false;
  std::size_t orbit_size = 0;
  bool trivial_stabilizer = false;
  bool preserves_classes = false;
  std::size_t pairs_checked = 0;
  bool exhaustive = false;
  /// First generator/pair that moves a class label.
  std::optional<std::string> witness;
  bool ok() const { return orbit_regular && trivial_stabilizer && preserves_classes; }
};

/// Regularity of the action on G_e, and preservation of every graph Cay(G_e, D)
/// for D in `targets` by every generator. Pairs are exhaustive for up to two
/// blocks, otherwise `samples` pseudo-random pairs.
RegularityReport verify_regular_action(const RegularGroup& g, const std::vector<IndexSet>& targets,
                                       std::size_t samples = 1000000, std::uint64_t seed = 0x9e37);

/// Subgroups of G computed from the group law alone.
struct DirectInvariants {
  std::size_t order = 0;
  int nilpotency_class = 0;
  std::uint64_t exponent = 0;
  Subgroup center;
  /// gamma_1 = G, gamma_2, ..., ending with the trivial group.
  std::vector<Subgroup> lower_central_series;
  Subgroup derived;
  Subgroup frattini;
  std::optional<AbelianType> center_type;
  std::optional<AbelianType> derived_type;
  std::optional<AbelianType> frattini_type;
};

Subgroup center(const RegularGroup& g);
std::vector<Subgroup> lower_central_series(const RegularGroup& g);
Subgroup frattini(const RegularGroup& g);
DirectInvariants direct_invariants(const RegularGroup& g);

/// Subgroups generated by the closed-form generating sets, embedded in G.
struct PredictedSubgroups {
  /// P_k = <x - tau(x) : x in P_{k-1}>, P_0 = K, as (x, 0); compared with gamma_{k+1}.
  std::vector<Subgroup> derived_series;
  /// t = o(tau|_K), m = o((h_t, t)).
  std::uint64_t t = 0;
  std::uint64_t m = 0;
  std::uint64_t h_e_order = 0;
  Subgroup center;
  std::uint64_t center_order_formula = 0;
  /// <(2x, 0), (x - tau x, 0), (h_2, 2)> and the variant with x + tau x.
  Subgroup frattini_minus;
  Subgroup frattini_plus;
};

PredictedSubgroups predicted_subgroups(const RegularGroup& g);

struct EquationMatches {
  bool eq2 = false;
  bool eq3_subgroup = false;
  bool eq3_order = false;
  bool eq4 = false;
  bool eq4_variants_agree = false;
  bool eq3() const { return eq3_subgroup && eq3_order; }
};

EquationMatches compare_predictions(const DirectInvariants& direct, const PredictedSubgroups& predicted);

/// D' = {g : act(g, 0) in D}.
IndexSet pds_pullback(const RegularGroup& g, const IndexSet& d);

}  // namespace pdslab
