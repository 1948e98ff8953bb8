#include "pdslab/pds.hpp"

#include <cmath>

namespace pdslab {

FiniteGroupTable FiniteGroupTable::relabeled(const std::vector<Index>& perm) const {
  if (perm.size() != size_) throw InputError("relabeling has the wrong size");
  std::vector<Index> back(size_);
  for (Index i = 0; i < size_; ++i) back[perm[i]] = i;
  std::vector<Index> inv(size_);
  for (Index i = 0; i < size_; ++i) inv[perm[i]] = perm[inv_[i]];
  auto base = std::make_shared<const FiniteGroupTable>(*this);
  auto fwd = std::make_shared<const std::vector<Index>>(perm);
  auto bwd = std::make_shared<const std::vector<Index>>(std::move(back));
  return FiniteGroupTable(
      size_, perm[identity_],
      [base, fwd, bwd](Index a, Index b) { return (*fwd)[base->mul((*bwd)[a], (*bwd)[b])]; }, std::move(inv));
}

std::string to_string(const PdsParams& p) {
  return "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," + std::to_string(p.lambda) + "," +
         std::to_string(p.mu) + ")";
}

std::string to_string(PdsFailure::Reason r) {
  switch (r) {
    case PdsFailure::Reason::contains_identity: return "contains_identity";
    case PdsFailure::Reason::not_inverse_closed: return "not_inverse_closed";
    case PdsFailure::Reason::lambda_not_constant: return "lambda_not_constant";
    case PdsFailure::Reason::mu_not_constant: return "mu_not_constant";
  }
  return "unknown";
}

PdsParams expected_params(int n, int sign, bool zero_level) {
  if (n < 1) throw InputError("expected_params needs n >= 1");
  if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
  const std::int64_t q1 = std::int64_t{1} << (2 * (n - 1));  // 4^(n-1)
  const std::int64_t qn = q1 * 4;                              // 4^n
  const std::int64_t q22 = q1 * q1;                            // 4^(2n-2)
  const std::int64_t s = sign;
  PdsParams p;
  p.v = qn * qn;
  if (zero_level) {
    p.k = (q1 + s) * (qn - s);
    p.lambda = q22 + 3 * q1 * s - 2;
    p.mu = q22 + q1 * s;
  } else {
    p.k = q1 * (qn - s);
    p.lambda = q22 + q1 * s;
    p.mu = q22 - q1 * s;
  }
  p.degenerate = p.k == 0;
  return p;
}

bool matches_expected(const PdsParams& actual, const PdsParams& expected) {
  if (expected.k == 0) return actual.v == expected.v && actual.k == 0 && actual.degenerate;
  return actual == expected;
}

bool counting_identity_holds(const PdsParams& p) {
  return p.k * (p.k - p.lambda - 1) == (p.v - p.k - 1) * p.mu;
}

std::string LatinClass::to_string() const {
  switch (kind) {
    case Kind::LS: return "LS(" + std::to_string(n) + "," + std::to_string(r) + ")";
    case Kind::NLS: return "NLS(" + std::to_string(n) + "," + std::to_string(r) + ")";
    case Kind::neither: break;
  }
  return "neither";
}

LatinClass classify_ls_nls(const PdsParams& p) {
  LatinClass out;
  if (p.v <= 0) return out;
  auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(p.v))));
  while (root * root > p.v) --root;
  while ((root + 1) * (root + 1) <= p.v) ++root;
  if (root * root != p.v) return out;

  auto fits = [&](std::int64_t eps) -> std::optional<std::int64_t> {
    const std::int64_t denom = root - eps;
    if (denom <= 0 || p.k % denom != 0) return std::nullopt;
    const std::int64_t r = p.k / denom;
    if (p.lambda != eps * root + r * r - 3 * eps * r) return std::nullopt;
    if (p.mu != r * r - eps * r) return std::nullopt;
    return r;
  };
  const auto ls = fits(+1);
  const auto nls = fits(-1);
  out.n = root;
  if (ls) {
    out.kind = LatinClass::Kind::LS;
    out.r = *ls;
    out.both = nls.has_value();
  } else if (nls) {
    out.kind = LatinClass::Kind::NLS;
    out.r = *nls;
  }
  return out;
}

}  // namespace pdslab
