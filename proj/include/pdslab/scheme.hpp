#pragma once

// Cayley association schemes on index-encoded groups: the level-set
// partitions of Q_a, intersection numbers by convolution counting, fusion
// enumeration for amorphy, and class-preserving maps.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pdslab/endomorphism.hpp"
#include "pdslab/pds.hpp"

namespace pdslab {

/// Partition of G \ {1} into inverse-closed classes. Class i of the scheme is
/// classes[i - 1]; index 0 is reserved for the identity.
struct SchemePartition {
  FiniteGroupTable group;
  std::vector<IndexSet> classes;
  std::vector<std::string> labels;

  int class_count() const { return static_cast<int>(classes.size()); }
  /// label[g] = scheme class of g (0 for the identity).
  std::vector<int> class_of() const;
};

/// Validates disjointness, coverage of G \ {1} and inverse closure.
SchemePartition make_partition(FiniteGroupTable group, std::vector<IndexSet> classes,
                               std::vector<std::string> labels = {});

/// Level sets of Q_a on G_e: variant 4 is (Q^-1(0)\{0}, Q^-1(1), Q^-1(w), Q^-1(w^2)),
/// variant 3 merges the last two. Throws InputError on an empty class.
SchemePartition build_scheme(const GroupContext& ctx, const FormSpec& a, int variant);

/// p[i][j][k] over classes 0..m, 0 being the identity class.
class IntersectionNumbers {
 public:
  explicit IntersectionNumbers(int classes) : m_(classes + 1), p_(static_cast<std::size_t>(m_ * m_ * m_), 0) {}
  int size() const { return m_; }
  std::int64_t& at(int i, int j, int k) { return p_[static_cast<std::size_t>((i * m_ + j) * m_ + k)]; }
  std::int64_t at(int i, int j, int k) const { return p_[static_cast<std::size_t>((i * m_ + j) * m_ + k)]; }
  friend bool operator==(const IntersectionNumbers&, const IntersectionNumbers&) = default;

 private:
  int m_;
  std::vector<std::int64_t> p_;
};

/// Two elements g, g2 of class k with different product counts over D_i x D_j.
struct SchemeWitness {
  int i = 0;
  int j = 0;
  int k = 0;
  Index g = 0;
  Index g2 = 0;
  std::int64_t count_g = 0;
  std::int64_t count_g2 = 0;
};

using IntersectionResult = std::variant<IntersectionNumbers, SchemeWitness>;

IntersectionResult intersection_numbers(const SchemePartition& s);

struct FusionVerdict {
  /// Blocks of original class indices (1-based).
  std::vector<std::vector<int>> partition;
  bool scheme = false;
  /// Fused tensor equals block sums of the unfused tensor.
  bool consistent = false;
};

struct AmorphyCertificate {
  bool amorphic = false;
  std::vector<FusionVerdict> fusions;
  /// classify_ls_nls of each single class, or a failure note.
  std::vector<std::string> class_types;
  /// Every class is LS, or every class is NLS.
  bool uniform_type = false;
};

/// Restricted-growth strings over {0, .., m-1} in lexicographic order.
std::vector<std::vector<int>> set_partitions(int m);

SchemePartition fuse(const SchemePartition& s, const std::vector<std::vector<int>>& blocks);

AmorphyCertificate is_amorphic(const SchemePartition& s);

/// True iff f maps each class onto itself. The group of s must be G_e of f.
bool is_scheme_automorphism(const EndoMap& f, const SchemePartition& s);

}  // namespace pdslab
