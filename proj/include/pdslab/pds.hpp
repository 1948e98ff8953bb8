#pragma once

// Brute-force verification of partial difference sets in arbitrary finite
// groups. For every non-identity g the count c(g) = |{h in D : g h in D}| is
// obtained as a histogram of d h^{-1} over all pairs (d, h) in D x D, which
// costs |D|^2 group multiplications instead of |G| |D|.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <algorithm>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "pdslab/group_algorithms.hpp"

namespace pdslab {

/// Type-erased finite group on indices [0, size).
class FiniteGroupTable {
 public:
  using MulFn = std::function<Index(Index, Index)>;

  FiniteGroupTable(std::size_t size, Index identity, MulFn mul, std::vector<Index> inverses)
      : size_(size), identity_(identity), mul_(std::move(mul)), inv_(std::move(inverses)) {}

  /// Shares ownership of `group`; inverses are precomputed.
  template <FiniteGroup G>
  static FiniteGroupTable from_group(std::shared_ptr<const G> group) {
    std::vector<Index> inv(group->size());
    for (Index x = 0; x < group->size(); ++x) inv[x] = group->inv(x);
    return FiniteGroupTable(group->size(), group->identity(),
                            [group](Index a, Index b) { return group->mul(a, b); }, std::move(inv));
  }

  template <FiniteGroup G>
  static FiniteGroupTable from_group(const G& group) {
    return from_group(std::make_shared<const G>(group));
  }

  /// The same group transported along the bijection `perm` (old index -> new index).
  FiniteGroupTable relabeled(const std::vector<Index>& perm) const;

  std::size_t size() const { return size_; }
  Index identity() const { return identity_; }
  Index mul(Index a, Index b) const { return mul_(a, b); }
  Index inv(Index a) const { return inv_[a]; }

 private:
  std::size_t size_;
  Index identity_;
  MulFn mul_;
  std::vector<Index> inv_;
};

struct PdsParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  /// D empty, or D = G \ {1} (mu undefined, reported as 0).
  bool degenerate = false;

  friend bool operator==(const PdsParams& a, const PdsParams& b) {
    return a.v == b.v && a.k == b.k && a.lambda == b.lambda && a.mu == b.mu;
  }
};

std::string to_string(const PdsParams& p);

struct PdsFailure {
  enum class Reason { contains_identity, not_inverse_closed, lambda_not_constant, mu_not_constant };
  Reason reason = Reason::lambda_not_constant;
  Index violating_g = 0;
  std::int64_t count = 0;
  std::int64_t expected = 0;
  /// "in_D" or "out_D".
  std::string side;
};

std::string to_string(PdsFailure::Reason r);

using PdsResult = std::variant<PdsParams, PdsFailure>;

/// c(g) = |{h in D : g h in D}| for every g, as a histogram of d h^{-1}.
template <FiniteGroup G>
std::vector<std::uint32_t> difference_counts(const G& group, const IndexSet& d, int threads = 1) {
  const std::vector<Index> members = d.to_vector();
  std::vector<Index> inverses(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) inverses[i] = group.inv(members[i]);

  const std::size_t n = group.size();
  auto work = [&](std::size_t begin, std::size_t end, std::vector<std::uint32_t>& hist) {
    for (std::size_t i = begin; i < end; ++i) {
      const Index di = members[i];
      for (Index hinv : inverses) ++hist[group.mul(di, hinv)];
    }
  };

  const std::size_t t = threads > 1 ? static_cast<std::size_t>(threads) : 1;
  if (t == 1 || members.size() < 2 * t) {
    std::vector<std::uint32_t> hist(n, 0);
    work(0, members.size(), hist);
    return hist;
  }
  std::vector<std::vector<std::uint32_t>> partial(t, std::vector<std::uint32_t>(n, 0));
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (members.size() + t - 1) / t;
    for (std::size_t w = 0; w < t; ++w) {
      const std::size_t b = std::min(members.size(), w * chunk);
      const std::size_t e = std::min(members.size(), b + chunk);
      pool.emplace_back([&, b, e, w] { work(b, e, partial[w]); });
    }
  }
  for (std::size_t w = 1; w < t; ++w)
    for (std::size_t g = 0; g < n; ++g) partial[0][g] += partial[w][g];
  return std::move(partial[0]);
}

template <FiniteGroup G>
PdsResult verify_pds(const G& group, const IndexSet& d, int threads = 1) {
  const auto n = static_cast<Index>(group.size());
  if (d.universe() != n) throw InputError("subset universe does not match the group order");
  const Index one = group.identity();

  PdsParams params;
  params.v = n;
  params.k = static_cast<std::int64_t>(d.size());
  if (d.empty()) {
    params.degenerate = true;
    return params;
  }
  if (d.contains(one)) return PdsFailure{PdsFailure::Reason::contains_identity, one, 0, 0, "in_D"};
  for (Index x : d.to_vector())
    if (!d.contains(group.inv(x))) return PdsFailure{PdsFailure::Reason::not_inverse_closed, x, 0, 0, "in_D"};

  const std::vector<std::uint32_t> counts = difference_counts(group, d, threads);
  std::optional<std::int64_t> lambda, mu;
  for (Index g = 0; g < n; ++g) {
    if (g == one) continue;
    const std::int64_t c = counts[g];
    if (d.contains(g)) {
      if (!lambda) lambda = c;
      else if (*lambda != c) return PdsFailure{PdsFailure::Reason::lambda_not_constant, g, c, *lambda, "in_D"};
    } else {
      if (!mu) mu = c;
      else if (*mu != c) return PdsFailure{PdsFailure::Reason::mu_not_constant, g, c, *mu, "out_D"};
    }
  }
  params.lambda = lambda.value_or(0);
  params.mu = mu.value_or(0);
  params.degenerate = !lambda || !mu;
  return params;
}

/// Parameters of the level sets of Q_a on a group of order 16^n:
/// zero level (Q^{-1}(0) minus 0) or a nonzero level.
PdsParams expected_params(int n, int sign, bool zero_level);

/// Expected parameters with k = 0 match only a degenerate empty result.
bool matches_expected(const PdsParams& actual, const PdsParams& expected);

/// k(k - lambda - 1) = (v - k - 1) mu.
bool counting_identity_holds(const PdsParams& p);

struct LatinClass {
  enum class Kind { LS, NLS, neither };
  Kind kind = Kind::neither;
  std::int64_t n = 0;
  std::int64_t r = 0;
  /// Both LS and NLS parameter families fit; kind is then LS.
  bool both = false;

  /// "LS(n,r)", "NLS(n,r)" or "neither".
  std::string to_string() const;
};

/// Matches (n^2, r(n - eps), eps n + r^2 - 3 eps r, r^2 - eps r) for eps = +1 (LS) or -1 (NLS).
LatinClass classify_ls_nls(const PdsParams& p);

}  // namespace pdslab
