#include "pdslab/scheme.hpp"

namespace pdslab {

std::vector<int> SchemePartition::class_of() const {
  std::vector<int> label(group.size(), 0);
  for (std::size_t c = 0; c < classes.size(); ++c)
    classes[c].for_each([&](Index g) { label[g] = static_cast<int>(c) + 1; });
  return label;
}

SchemePartition make_partition(FiniteGroupTable group, std::vector<IndexSet> classes,
                               std::vector<std::string> labels) {
  const std::size_t n = group.size();
  IndexSet seen(n);
  std::size_t total = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const IndexSet& d = classes[c];
    if (d.universe() != n) throw InputError("class universe does not match the group order");
    if (d.empty()) throw InputError("class " + std::to_string(c + 1) + " is empty");
    if (d.contains(group.identity())) throw InputError("a class contains the identity");
    if (seen.intersects(d)) throw InputError("classes are not disjoint");
    for (Index g : d.to_vector()) {
      if (!d.contains(group.inv(g))) throw InputError("class " + std::to_string(c + 1) + " is not inverse-closed");
      seen.insert(g);
    }
    total += d.size();
  }
  if (total + 1 != n) throw InputError("classes do not cover G minus the identity");
  if (labels.empty())
    for (std::size_t c = 0; c < classes.size(); ++c) labels.push_back("D" + std::to_string(c + 1));
  return SchemePartition{std::move(group), std::move(classes), std::move(labels)};
}

SchemePartition build_scheme(const GroupContext& ctx, const FormSpec& a, int variant) {
  if (variant != 3 && variant != 4) throw InputError("scheme variant must be 3 or 4");
  std::vector<IndexSet> classes;
  std::vector<std::string> labels;
  classes.push_back(level_set(ctx, a, GF4::zero()));
  labels.push_back("Q^-1(0)\\{0}");
  classes.push_back(level_set(ctx, a, GF4::one()));
  labels.push_back("Q^-1(1)");
  if (variant == 4) {
    classes.push_back(level_set(ctx, a, GF4::omega()));
    labels.push_back("Q^-1(w)");
    classes.push_back(level_set(ctx, a, GF4::omega_sq()));
    labels.push_back("Q^-1(W)");
  } else {
    classes.push_back(level_set(ctx, a, GF4::omega()).united(level_set(ctx, a, GF4::omega_sq())));
    labels.push_back("Q^-1(w)+Q^-1(W)");
  }
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (classes[c].empty()) throw InputError("scheme class " + labels[c] + " is empty");
  return make_partition(FiniteGroupTable::from_group(ctx), std::move(classes), std::move(labels));
}

IntersectionResult intersection_numbers(const SchemePartition& s) {
  const FiniteGroupTable& g = s.group;
  const int m = s.class_count();
  const std::vector<int> label = s.class_of();

  std::vector<std::vector<Index>> members(static_cast<std::size_t>(m) + 1);
  members[0] = {g.identity()};
  for (int c = 1; c <= m; ++c) members[static_cast<std::size_t>(c)] = s.classes[static_cast<std::size_t>(c - 1)].to_vector();

  IntersectionNumbers p(m);
  std::vector<std::int64_t> hist(g.size());
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) {
      std::fill(hist.begin(), hist.end(), 0);
      for (Index u : members[static_cast<std::size_t>(i)])
        for (Index v : members[static_cast<std::size_t>(j)]) ++hist[g.mul(u, v)];
      std::vector<std::int64_t> value(static_cast<std::size_t>(m) + 1, -1);
      std::vector<Index> first(static_cast<std::size_t>(m) + 1, 0);
      for (Index x = 0; x < g.size(); ++x) {
        const auto k = static_cast<std::size_t>(label[x]);
        if (value[k] < 0) {
          value[k] = hist[x];
          first[k] = x;
        } else if (value[k] != hist[x]) {
          return SchemeWitness{i, j, static_cast<int>(k), first[k], x, value[k], hist[x]};
        }
      }
      for (int k = 0; k <= m; ++k) p.at(i, j, k) = value[static_cast<std::size_t>(k)];
    }
  }
  return p;
}

std::vector<std::vector<int>> set_partitions(int m) {
  std::vector<std::vector<int>> out;
  if (m <= 0) return out;
  std::vector<int> a(static_cast<std::size_t>(m), 0);
  for (;;) {
    out.push_back(a);
    // Rightmost position that can be incremented while staying restricted-growth.
    int pos = m - 1;
    for (; pos > 0; --pos) {
      const int mx = *std::max_element(a.begin(), a.begin() + pos);
      if (a[static_cast<std::size_t>(pos)] <= mx) break;
    }
    if (pos <= 0) break;
    ++a[static_cast<std::size_t>(pos)];
    std::fill(a.begin() + pos + 1, a.end(), 0);
  }
  return out;
}

SchemePartition fuse(const SchemePartition& s, const std::vector<std::vector<int>>& blocks) {
  std::vector<IndexSet> classes;
  std::vector<std::string> labels;
  for (const auto& block : blocks) {
    IndexSet u(s.group.size());
    std::string label;
    for (int c : block) {
      if (c < 1 || c > s.class_count()) throw InputError("fusion refers to a missing class");
      u = u.united(s.classes[static_cast<std::size_t>(c - 1)]);
      label += (label.empty() ? "" : "+") + s.labels[static_cast<std::size_t>(c - 1)];
    }
    classes.push_back(std::move(u));
    labels.push_back(std::move(label));
  }
  return make_partition(s.group, std::move(classes), std::move(labels));
}

namespace {

std::vector<std::vector<int>> blocks_of(const std::vector<int>& rgs) {
  const int count = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(count));
  for (std::size_t c = 0; c < rgs.size(); ++c)
    blocks[static_cast<std::size_t>(rgs[c])].push_back(static_cast<int>(c) + 1);
  return blocks;
}

bool fusion_consistent(const IntersectionNumbers& base, const IntersectionNumbers& fused,
                       const std::vector<std::vector<int>>& blocks) {
  // Fused block 0 is the identity class.
  std::vector<std::vector<int>> all{{0}};
  all.insert(all.end(), blocks.begin(), blocks.end());
  const int mf = static_cast<int>(all.size());
  for (int I = 0; I < mf; ++I)
    for (int J = 0; J < mf; ++J)
      for (int K = 0; K < mf; ++K)
        for (int k : all[static_cast<std::size_t>(K)]) {
          std::int64_t sum = 0;
          for (int i : all[static_cast<std::size_t>(I)])
            for (int j : all[static_cast<std::size_t>(J)]) sum += base.at(i, j, k);
          if (sum != fused.at(I, J, K)) return false;
        }
  return true;
}

}  // namespace

AmorphyCertificate is_amorphic(const SchemePartition& s) {
  AmorphyCertificate cert;
  const IntersectionResult base = intersection_numbers(s);
  const auto* base_p = std::get_if<IntersectionNumbers>(&base);

  bool all_pass = true;
  for (const auto& rgs : set_partitions(s.class_count())) {
    FusionVerdict v;
    v.partition = blocks_of(rgs);
    const IntersectionResult r = intersection_numbers(fuse(s, v.partition));
    if (const auto* fp = std::get_if<IntersectionNumbers>(&r)) {
      v.scheme = true;
      v.consistent = base_p != nullptr && fusion_consistent(*base_p, *fp, v.partition);
    }
    all_pass = all_pass && v.scheme && v.consistent;
    cert.fusions.push_back(std::move(v));
  }
  cert.amorphic = all_pass && base_p != nullptr;

  int ls = 0;
  int nls = 0;
  for (const IndexSet& d : s.classes) {
    const PdsResult r = verify_pds(s.group, d);
    if (const auto* p = std::get_if<PdsParams>(&r)) {
      const LatinClass lc = classify_ls_nls(*p);
      ls += lc.kind == LatinClass::Kind::LS;
      nls += lc.kind == LatinClass::Kind::NLS;
      cert.class_types.push_back(lc.to_string());
    } else {
      cert.class_types.push_back("not a PDS");
    }
  }
  const int m = s.class_count();
  cert.uniform_type = m > 0 && (ls == m || nls == m);
  return cert;
}

bool is_scheme_automorphism(const EndoMap& f, const SchemePartition& s) {
  if (f.table().size() != s.group.size()) throw InputError("map and scheme live on different groups");
  for (const IndexSet& d : s.classes) {
    bool ok = true;
    d.for_each([&](Index g) { ok = ok && d.contains(f(g)); });
    if (!ok) return false;
  }
  return true;
}

}  // namespace pdslab
