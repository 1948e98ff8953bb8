#pragma once

// Generic finite-group algorithms over index-encoded groups.
//
// A group is anything exposing size(), identity(), mul(a, b) and inv(a) on
// dense indices in [0, size()). Subgroups are dense membership sets plus a
// generating list; all closures are breadth-first over right multiplication.

#include <bit>
#include <concepts>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "pdslab/error.hpp"
#include "pdslab/index_set.hpp"

namespace pdslab {

template <class G>
concept FiniteGroup = requires(const G& g, Index a, Index b) {
  { g.size() } -> std::convertible_to<std::size_t>;
  { g.identity() } -> std::convertible_to<Index>;
  { g.mul(a, b) } -> std::convertible_to<Index>;
  { g.inv(a) } -> std::convertible_to<Index>;
};

struct Subgroup {
  IndexSet members;
  std::vector<Index> generators;

  std::size_t order() const { return members.size(); }
  bool contains(Index x) const { return members.contains(x); }
  bool is_subgroup_of(const Subgroup& other) const { return members.is_subset_of(other.members); }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

/// Invariant-factor type of a finite abelian group: cyclic order -> multiplicity.
using AbelianType = std::map<std::uint64_t, int>;

std::string to_string(const AbelianType& type);
std::uint64_t type_order(const AbelianType& type);
/// Z2^twos x Z4^fours; throws ContractError on a negative multiplicity.
AbelianType make_type(int twos, int fours);

/// Incrementally grows a subgroup from added elements.
template <FiniteGroup G>
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const G& group) : group_(&group), members_(group.size()) {
    members_.insert(group.identity());
  }

  SubgroupBuilder(const G& group, Subgroup start)
      : group_(&group), members_(std::move(start.members)), gens_(std::move(start.generators)) {}

  const IndexSet& members() const { return members_; }
  const std::vector<Index>& generators() const { return gens_; }
  bool contains(Index x) const { return members_.contains(x); }

  /// Adds x to the generating set; returns false if x was already a member.
  bool add(Index x) {
    if (members_.contains(x)) return false;
    gens_.push_back(x);
    std::vector<Index> queue;
    members_.for_each([&](Index y) { queue.push_back(y); });
    std::vector<Index> fresh;
    for (Index y : queue) {
      const Index z = group_->mul(y, x);
      if (members_.insert(z)) fresh.push_back(z);
    }
    for (std::size_t q = 0; q < fresh.size(); ++q) {
      const Index y = fresh[q];
      for (Index s : gens_) {
        const Index z = group_->mul(y, s);
        if (members_.insert(z)) fresh.push_back(z);
      }
    }
    return true;
  }

  template <class Range>
  void add_all(const Range& xs) {
    for (auto x : xs) add(static_cast<Index>(x));
  }

  Subgroup build() && { return Subgroup{std::move(members_), std::move(gens_)}; }
  Subgroup build() const& { return Subgroup{members_, gens_}; }

 private:
  const G* group_;
  IndexSet members_;
  std::vector<Index> gens_;
};

template <FiniteGroup G, class Range>
Subgroup closure(const G& group, const Range& seeds) {
  SubgroupBuilder<G> b(group);
  b.add_all(seeds);
  return std::move(b).build();
}

template <FiniteGroup G>
Subgroup closure(const G& group, std::initializer_list<Index> seeds) {
  return closure(group, std::vector<Index>(seeds));
}

template <FiniteGroup G>
Subgroup trivial_subgroup(const G& group) {
  return SubgroupBuilder<G>(group).build();
}

template <FiniteGroup G>
Subgroup whole_group(const G& group) {
  SubgroupBuilder<G> b(group);
  for (Index x = 0; x < group.size(); ++x) b.add(x);
  return std::move(b).build();
}

/// Greedy generating set of a member set; returns the closure of those
/// generators, which equals `members` exactly when `members` is a subgroup.
template <FiniteGroup G>
Subgroup greedy_closure(const G& group, const IndexSet& members) {
  SubgroupBuilder<G> b(group);
  members.for_each([&](Index x) { b.add(x); });
  return std::move(b).build();
}

/// Validates that `members` is a subgroup and attaches a generating set.
template <FiniteGroup G>
Subgroup as_subgroup(const G& group, const IndexSet& members) {
  Subgroup s = greedy_closure(group, members);
  if (!(s.members == members)) throw ContractError("set is not closed under the group operation");
  return s;
}

template <FiniteGroup G>
Subgroup intersect(const G& group, const Subgroup& a, const Subgroup& b) {
  return greedy_closure(group, a.members.intersection(b.members));
}

/// Subgroup generated by a and b together.
template <FiniteGroup G>
Subgroup join(const G& group, const Subgroup& a, const Subgroup& b) {
  SubgroupBuilder<G> builder(group, a);
  builder.add_all(b.generators);
  return std::move(builder).build();
}

template <FiniteGroup G>
Index power(const G& group, Index x, std::uint64_t k) {
  Index result = group.identity();
  Index base = x;
  while (k) {
    if (k & 1u) result = group.mul(result, base);
    base = group.mul(base, base);
    k >>= 1;
  }
  return result;
}

template <FiniteGroup G>
std::uint64_t element_order(const G& group, Index x) {
  std::uint64_t k = 1;
  Index y = x;
  while (y != group.identity()) {
    y = group.mul(y, x);
    ++k;
    if (k > group.size()) throw ContractError("element order exceeds group size");
  }
  return k;
}

template <FiniteGroup G>
std::uint64_t exponent(const G& group, const IndexSet& members) {
  std::uint64_t e = 1;
  members.for_each([&](Index x) { e = std::lcm(e, element_order(group, x)); });
  return e;
}

template <FiniteGroup G>
Index commutator(const G& group, Index x, Index y) {
  return group.mul(group.mul(group.inv(x), group.inv(y)), group.mul(x, y));
}

template <FiniteGroup G>
bool commute(const G& group, Index x, Index y) {
  return group.mul(x, y) == group.mul(y, x);
}

template <FiniteGroup G>
bool is_abelian(const G& group, const Subgroup& s) {
  for (std::size_t i = 0; i < s.generators.size(); ++i)
    for (std::size_t j = i + 1; j < s.generators.size(); ++j)
      if (!commute(group, s.generators[i], s.generators[j])) return false;
  return true;
}

/// Smallest normal subgroup containing `seeds`, where `group_gens` generate the ambient group.
template <FiniteGroup G, class Range>
Subgroup normal_closure(const G& group, const Range& seeds, std::span<const Index> group_gens) {
  SubgroupBuilder<G> b(group);
  b.add_all(seeds);
  for (std::size_t i = 0; i < b.generators().size(); ++i) {
    const Index w = b.generators()[i];
    for (Index y : group_gens) b.add(group.mul(group.mul(group.inv(y), w), y));
  }
  return std::move(b).build();
}

/// Invariant-factor type of an abelian 2-group by counting solutions of x^(2^k) = 1.
template <FiniteGroup G>
AbelianType abelian_type(const G& group, const Subgroup& s) {
  if (!is_abelian(group, s)) throw ContractError("abelian_type requires an abelian subgroup");
  std::vector<int> level_hist;  // level_hist[k] = #{x : ord(x) = 2^k}
  s.members.for_each([&](Index x) {
    int k = 0;
    Index y = x;
    while (y != group.identity()) {
      y = group.mul(y, y);
      if (++k > 64) throw ContractError("abelian_type: not a 2-group");
    }
    if (level_hist.size() <= static_cast<std::size_t>(k)) level_hist.resize(static_cast<std::size_t>(k) + 1, 0);
    ++level_hist[static_cast<std::size_t>(k)];
  });
  std::vector<std::uint64_t> counts;  // counts[k] = #{x : x^(2^k) = 1}
  std::uint64_t running = 0;
  for (int h : level_hist) counts.push_back(running += static_cast<std::uint64_t>(h));
  auto lg = [](std::uint64_t v) {
    if (!std::has_single_bit(v)) throw ContractError("abelian_type: not a 2-group");
    return std::countr_zero(v);
  };
  std::vector<int> d(counts.size() + 1, 0);
  for (std::size_t k = 1; k < counts.size(); ++k) d[k] = lg(counts[k]) - lg(counts[k - 1]);
  AbelianType type;
  for (std::size_t k = 1; k < counts.size(); ++k) {
    const int c = d[k] - d[k + 1];
    if (c < 0) throw ContractError("abelian_type: inconsistent order counts");
    if (c > 0) type[std::uint64_t{1} << k] = c;
  }
  return type;
}

/// An index-2 subgroup K of `h` with `p` <= K and `avoid` not in K. Requires
/// `p` >= Phi(h) and `avoid` in h \ p. The complement basis is chosen greedily
/// in index order, so the result is deterministic.
template <FiniteGroup G>
Subgroup maximal_subgroup_avoiding(const G& group, const Subgroup& h, const Subgroup& p, Index avoid) {
  if (!h.contains(avoid) || p.contains(avoid)) throw ContractError("avoided element must lie in H but not in P");
  SubgroupBuilder<G> span(group, p);
  span.add(avoid);
  SubgroupBuilder<G> k(group, p);
  h.members.for_each([&](Index x) {
    if (span.add(x)) k.add(x);
  });
  Subgroup out = std::move(k).build();
  if (out.order() * 2 != h.order() || out.contains(avoid))
    throw ContractError("H/P is not elementary abelian");
  return out;
}

/// Checks identity and inverse laws exhaustively and associativity on all
/// triples (size <= 256) or `samples` pseudo-random triples.
template <FiniteGroup G>
bool check_group_axioms(const G& group, std::size_t samples = 100000, std::uint64_t seed = 0x5eed);

}  // namespace pdslab

#include "pdslab/detail/group_axioms.hpp"
