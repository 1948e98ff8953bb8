#pragma once

// Builders for the four explicit families of regular groups G_{K,tau,h} and
// their closed-form invariant predictions.
//
//   A: tau = tau_v, K a trace hyperplane (e = 2), on S^(4).
//   B: tau = rho_a with a over F2 (e = 2), on S^(3).
//   C: tau = rho_a with a outside F2^n (e = 4), on the graphs of Q^-1(0)\{0} and Q^-1(1).
//   D: tau = block rotation pi on four equal blocks (e = 4), on S^(4).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pdslab/regular_group.hpp"

namespace pdslab {

enum class Family { A, B, C, D };

Family parse_family(std::string_view s);
std::string to_string(Family f);

struct FamilySpec {
  Family family = Family::A;
  /// Twist vector over F2, e.g. "011" (families A, B, C).
  std::string e;
  /// Form coefficients over F4 (families A, B, C).
  std::string a;
  /// tau_v vector over F2 (family A; family D tail).
  std::string v;
  /// Hyperplane vector: over F4 for A, over F2 for B and C.
  std::string b;
  /// Family D: common twist bit and form coefficient of the four rotated blocks.
  int epsilon = 0;
  std::string alpha = "0";
  /// Family D: number of blocks after the rotated four.
  int tail_n = 0;

  std::string to_string() const;
};

/// One closed-form prediction: an order and optionally an abelian type,
/// together with the case condition that selected it.
struct PredictedValue {
  std::string condition;
  std::optional<std::uint64_t> order;
  std::optional<AbelianType> type;
  /// False when the selected display has a negative multiplicity.
  bool applicable = true;
};

struct PredictedInvariants {
  int nilpotency_class = 0;
  std::string class_condition;
  std::uint64_t exponent = 0;
  std::string exponent_condition;
  PredictedValue derived;
  PredictedValue center;
  PredictedValue frattini;
  /// Stated order sets; may be looser than the case displays.
  std::vector<std::uint64_t> derived_orders_stated;
  std::vector<std::uint64_t> center_orders_stated;
  std::vector<std::uint64_t> frattini_orders_stated;
};

struct FamilyInstance {
  FamilySpec spec;
  std::shared_ptr<const RegularGroup> group;
  /// Classes whose Cayley graphs the group must preserve.
  std::vector<IndexSet> targets;
  std::vector<std::string> target_labels;
  /// Intermediate index-2 subgroup (family C).
  std::optional<Subgroup> H;
  PredictedInvariants predicted;
};

FamilyInstance build_family_A(const FamilySpec& spec);
FamilyInstance build_family_B(const FamilySpec& spec);
FamilyInstance build_family_C(const FamilySpec& spec);
FamilyInstance build_family_D(const FamilySpec& spec);
FamilyInstance build_family(const FamilySpec& spec);

/// Nonzero v in F2^n with v_i = 0 only where e_i = 1.
bool family_A_admissible(const GF4Vector& e, const GF4Vector& v);

struct Check {
  std::string name;
  std::string predicted;
  std::string actual;
  bool applicable = true;
  bool pass = false;
};

struct FamilyComparison {
  std::vector<Check> checks;
  bool all_pass() const;
  const Check* find(std::string_view name) const;
};

FamilyComparison compare_family(const FamilyInstance& inst, const DirectInvariants& direct);

}  // namespace pdslab
