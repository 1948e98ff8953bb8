#pragma once

// The groups G_e = G_{e1} + ... + G_{en}. Each block G_eps is F4 x F4 with
//   (x, y) + (x', y') = (x + x', y + y' + eps (x x')^2).
// Elements are encoded as indices: block i (block 0 most significant)
// contributes the base-16 digit 4 code(x_i) + code(y_i).

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdslab/gf4.hpp"
#include "pdslab/group_algorithms.hpp"

namespace pdslab {

inline constexpr int kMaxBlocks = 4;

class GroupContext {
 public:
  /// `twist` holds the bits eps_i; 1 <= size <= kMaxBlocks.
  explicit GroupContext(std::vector<std::uint8_t> twist);
  /// Parses a binary string such as "011".
  static GroupContext parse(std::string_view twist);

  int blocks() const { return static_cast<int>(twist_.size()); }
  const std::vector<std::uint8_t>& twist() const { return twist_; }
  bool twisted(int block) const { return twist_[static_cast<std::size_t>(block)] != 0; }
  int twist_weight() const;
  std::string twist_string() const;
  GF4Vector twist_vector() const;

  std::size_t size() const { return std::size_t{1} << (4 * blocks()); }
  Index identity() const { return 0; }

  Index add(Index u, Index v) const {
    Index s = u ^ v;
    for (int sh : twisted_shifts_) {
      const unsigned x1 = (u >> (sh + 2)) & 3u;
      const unsigned x2 = (v >> (sh + 2)) & 3u;
      s ^= static_cast<Index>(kTwistTerm[x1][x2]) << sh;
    }
    return s;
  }
  Index neg(Index u) const {
    for (int sh : twisted_shifts_) u ^= ((u >> (sh + 2)) & 3u) << sh;
    return u;
  }
  Index sub(Index u, Index v) const { return add(u, neg(v)); }
  Index twice(Index u) const { return add(u, u); }

  // FiniteGroup interface.
  Index mul(Index u, Index v) const { return add(u, v); }
  Index inv(Index u) const { return neg(u); }

  int shift(int block) const { return 4 * (blocks() - 1 - block); }
  GF4 x(Index u, int block) const { return GF4(static_cast<std::uint8_t>((u >> (shift(block) + 2)) & 3u)); }
  GF4 y(Index u, int block) const { return GF4(static_cast<std::uint8_t>((u >> shift(block)) & 3u)); }
  Index make_block(int block, GF4 x, GF4 y) const {
    return static_cast<Index>((x.code() << 2) | y.code()) << shift(block);
  }

  friend bool operator==(const GroupContext& a, const GroupContext& b) { return a.twist_ == b.twist_; }

  /// (x x')^2 indexed by codes.
  static constexpr std::uint8_t kTwistTerm[4][4] = {
      {0, 0, 0, 0},
      {0, 1, 3, 2},
      {0, 3, 2, 1},
      {0, 2, 1, 3},
  };

 private:
  std::vector<std::uint8_t> twist_;
  std::vector<int> twisted_shifts_;
};

struct TwistedElement {
  std::vector<std::pair<GF4, GF4>> blocks;
  friend bool operator==(const TwistedElement&, const TwistedElement&) = default;
};

Index element_index(const GroupContext& ctx, const TwistedElement& u);
TwistedElement index_element(const GroupContext& ctx, std::uint64_t k);

/// Literal of 2n characters over {0,1,w,W}, block i giving (x_i, y_i).
TwistedElement parse_element(const GroupContext& ctx, std::string_view literal);
Index parse_element_index(const GroupContext& ctx, std::string_view literal);
std::string format_element(const GroupContext& ctx, Index u);

TwistedElement twisted_add(const GroupContext& ctx, const TwistedElement& u, const TwistedElement& v);
TwistedElement twisted_neg(const GroupContext& ctx, const TwistedElement& u);

Subgroup subgroup_closure(const GroupContext& ctx, const std::vector<TwistedElement>& gens);
/// Validates that S is closed, then returns its invariant-factor type.
AbelianType abelian_type(const GroupContext& ctx, const Subgroup& s);

/// Phi(G_e) = 2 G_e.
Subgroup frattini(const GroupContext& ctx);
/// Phi(S) = 2 S for a subgroup S.
Subgroup frattini(const GroupContext& ctx, const Subgroup& s);

/// A homomorphism G_e -> Z2 given by the parity of selected index bits.
/// The admissible bits form the basis of G_e / Phi(G_e), ordered by block
/// then coordinate (x bit 0, x bit 1, y bit 0, y bit 1; y bits only when
/// the block is untwisted). `coefficients` stores the coefficient vector with
/// basis element 0 as the most significant bit.
struct Functional {
  Index mask = 0;
  std::uint64_t coefficients = 0;

  bool evaluate(Index g) const { return (std::popcount(g & mask) & 1) != 0; }
};

/// Rank of G_e / Phi(G_e), i.e. sum of (4 - 2 eps_i).
int frattini_quotient_rank(const GroupContext& ctx);
/// All nonzero functionals, in increasing coefficient order.
std::vector<Functional> index2_functionals(const GroupContext& ctx);
/// Nonzero functionals vanishing on every generator of s.
std::vector<Functional> functionals_vanishing_on(const GroupContext& ctx, const Subgroup& s);
Subgroup functional_kernel(const GroupContext& ctx, const Functional& f);
/// Every index-2 subgroup, as kernels of index2_functionals in order.
std::vector<Subgroup> index2_subgroups(const GroupContext& ctx);

}  // namespace pdslab
