#include "pdslab/report.hpp"

#include <set>

namespace pdslab {

Json to_json(const PdsParams& p) {
  return Json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}, {"degenerate", p.degenerate}};
}

Json to_json(const PdsFailure& f) {
  return Json{{"reason", to_string(f.reason)},
              {"violating_g", f.violating_g},
              {"count", f.count},
              {"expected", f.expected},
              {"side", f.side}};
}

Json to_json(const PdsResult& r) {
  if (const auto* p = std::get_if<PdsParams>(&r)) return Json{{"pds", true}, {"params", to_json(*p)}};
  return Json{{"pds", false}, {"failure", to_json(std::get<PdsFailure>(r))}};
}

Json to_json(const IntersectionNumbers& p) {
  Json out = Json::array();
  for (int i = 0; i < p.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < p.size(); ++j) {
      Json col = Json::array();
      for (int k = 0; k < p.size(); ++k) col.push_back(p.at(i, j, k));
      row.push_back(std::move(col));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const SchemeWitness& w) {
  return Json{{"i", w.i},          {"j", w.j},           {"k", w.k}, {"g", w.g}, {"g2", w.g2},
              {"count_g", w.count_g}, {"count_g2", w.count_g2}};
}

Json to_json(const AmorphyCertificate& c) {
  Json fusions = Json::array();
  for (const auto& f : c.fusions)
    fusions.push_back(Json{{"partition", f.partition}, {"scheme", f.scheme}, {"consistent", f.consistent}});
  return Json{{"fusions", std::move(fusions)},
              {"class_types", c.class_types},
              {"uniform_type", c.uniform_type},
              {"amorphic", c.amorphic}};
}

Json to_json(const GktReport& r, const GroupContext& ctx) {
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json item{{"condition", x.condition}, {"message", x.message}};
    item["witness"] = x.witness ? Json(format_element(ctx, *x.witness)) : Json(nullptr);
    v.push_back(std::move(item));
  }
  return Json{{"ok", r.ok()}, {"e", r.e}, {"violations", std::move(v)}, {"nonabelian_by_index", r.nonabelian_by_index}};
}

Json to_json(const RegularityReport& r) {
  Json j{{"ok", r.ok()},
         {"orbit_size", r.orbit_size},
         {"orbit_regular", r.orbit_regular},
         {"trivial_stabilizer", r.trivial_stabilizer},
         {"preserves_classes", r.preserves_classes},
         {"pairs_checked", r.pairs_checked},
         {"exhaustive", r.exhaustive}};
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  return j;
}

Json to_json(const FamilyComparison& c) {
  Json checks = Json::array();
  for (const Check& k : c.checks)
    checks.push_back(Json{{"name", k.name},
                          {"predicted", k.predicted},
                          {"actual", k.actual},
                          {"applicable", k.applicable},
                          {"pass", k.pass}});
  return checks;
}

Json to_json(const FamilySpec& s) {
  Json j{{"family", to_string(s.family)}};
  if (s.family == Family::D) {
    j["epsilon"] = s.epsilon;
    j["alpha"] = s.alpha;
    j["tail_n"] = s.tail_n;
    return j;
  }
  j["n"] = s.e.size();
  j["e"] = s.e;
  j["a"] = s.a;
  if (s.family == Family::A) j["v"] = s.v;
  j["b"] = s.b;
  return j;
}

namespace {

Json subgroup_json(const Subgroup& s, const std::optional<AbelianType>& t) {
  Json j{{"order", s.order()}};
  j["type"] = t ? Json(to_string(*t)) : Json(nullptr);
  return j;
}

std::string require_string(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) throw InputError(std::string("missing string field '") + key + "'");
  return j.at(key).get<std::string>();
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed JSON: ") + ex.what());
  }
}

}  // namespace

Json invariants_json(const DirectInvariants& d, const EquationMatches& m) {
  return Json{{"order", d.order},
              {"class", d.nilpotency_class},
              {"exponent", d.exponent},
              {"derived", subgroup_json(d.derived, d.derived_type)},
              {"center", subgroup_json(d.center, d.center_type)},
              {"frattini", subgroup_json(d.frattini, d.frattini_type)},
              {"eq2_match", m.eq2},
              {"eq3_match", m.eq3()},
              {"eq4_match", m.eq4},
              {"eq4_variants_agree", m.eq4_variants_agree}};
}

FamilySpec family_spec_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("family spec must be a JSON object");
  FamilySpec s;
  s.family = parse_family(require_string(j, "family"));
  auto opt = [&](const char* key, std::string& out) {
    if (j.contains(key)) {
      if (!j.at(key).is_string()) throw InputError(std::string("field '") + key + "' must be a string");
      out = j.at(key).get<std::string>();
    }
  };
  opt("e", s.e);
  opt("a", s.a);
  opt("v", s.v);
  opt("b", s.b);
  opt("alpha", s.alpha);
  if (j.contains("epsilon")) s.epsilon = j.at("epsilon").get<int>();
  if (j.contains("tail_n")) s.tail_n = j.at("tail_n").get<int>();
  if (j.contains("n") && s.family != Family::D && j.at("n").get<std::size_t>() != s.e.size())
    throw InputError("n does not match the length of e");
  return s;
}

EndoMap map_from_json(const GroupContext& ctx, const Json& j) {
  if (!j.is_object()) throw InputError("map descriptor must be a JSON object");
  const std::string kind = require_string(j, "kind");
  if (kind == "tau") return make_tau(ctx, parse_gf4_vector(require_string(j, "v")));
  if (kind == "rho") return make_rho(ctx, parse_gf4_vector(require_string(j, "a")));
  if (kind == "pi") return make_pi(ctx, j.contains("v") ? parse_gf4_vector(require_string(j, "v")) : GF4Vector{});
  if (kind == "identity") return make_identity(ctx);
  throw InputError("unknown map kind '" + kind + "'");
}

Pullback parse_pullback(std::string_view s) {
  if (s == "auto") return Pullback::automatic;
  if (s == "none") return Pullback::none;
  if (s == "all") return Pullback::all;
  throw InputError("pullback must be auto, none or all");
}

RunResult error_result(const std::string& command, const std::string& message, int exit_code) {
  return RunResult{Json{{"schema", kReportSchema}, {"command", command}, {"error", message}}, exit_code};
}

namespace {

GF4Vector checked_vector(const std::string& text, int n, const char* name, bool binary) {
  GF4Vector v = binary ? parse_gf2_vector(text) : parse_gf4_vector(text);
  if (n > 0 && static_cast<int>(v.size()) != n)
    throw InputError(std::string(name) + " must have n = " + std::to_string(n) + " entries");
  return v;
}

GroupContext context_from(const GF4Vector& e) {
  std::vector<std::uint8_t> bits;
  for (GF4 x : e) bits.push_back(x.code());
  return GroupContext(bits);
}

GF4 parse_level(const std::string& level) {
  if (level.size() != 1) throw InputError("level must be one of 0, 1, w, W");
  return GF4::from_char(level[0]);
}

/// Regularity, invariants, closed-form comparisons and PDS pullbacks for one group.
struct Analysis {
  Json json;
  bool ok = true;
  DirectInvariants direct;
};

Analysis analyze(const RegularGroup& g, const std::vector<IndexSet>& targets, const std::vector<std::string>& labels,
                 Pullback pullback, int threads) {
  Analysis out;
  const RegularityReport reg = verify_regular_action(g, targets);
  out.json["regularity"] = to_json(reg);
  out.json["regularity"]["targets"] = labels;
  out.ok = reg.ok();

  out.direct = direct_invariants(g);
  const PredictedSubgroups pred = predicted_subgroups(g);
  const EquationMatches m = compare_predictions(out.direct, pred);
  out.json["invariants"] = invariants_json(out.direct, m);
  out.json["eq3"] = Json{{"t", pred.t},
                         {"m", pred.m},
                         {"h_e_order", pred.h_e_order},
                         {"center_order_formula", pred.center_order_formula},
                         {"subgroup_match", m.eq3_subgroup},
                         {"order_match", m.eq3_order}};
  out.ok = out.ok && m.eq2 && m.eq3() && m.eq4 && m.eq4_variants_agree;

  const GroupContext& ctx = g.context();
  std::size_t count = 0;
  if (pullback == Pullback::all || (pullback == Pullback::automatic && ctx.size() <= 4096))
    count = targets.size();
  else if (pullback == Pullback::automatic)
    count = targets.empty() ? 0 : 1;
  Json pulls = Json::array();
  for (std::size_t c = 0; c < count; ++c) {
    const PdsResult abelian = verify_pds(ctx, targets[c], threads);
    const IndexSet d = pds_pullback(g, targets[c]);
    const PdsResult nonabelian = verify_pds(g, d, threads);
    const auto* pa = std::get_if<PdsParams>(&abelian);
    const auto* pn = std::get_if<PdsParams>(&nonabelian);
    const bool same = pa && pn && *pa == *pn && pa->degenerate == pn->degenerate;
    pulls.push_back(Json{{"class", labels[c]},
                         {"abelian", to_json(abelian)},
                         {"pulled_back", to_json(nonabelian)},
                         {"same_parameters", same}});
    out.ok = out.ok && same;
  }
  out.json["pullback"] = std::move(pulls);
  out.json["derived_nontrivial"] = out.direct.derived.order() > 1;
  return out;
}

/// S^(4) when f is an isometry of Q_a, S^(3) otherwise.
SchemePartition target_scheme(const GroupContext& ctx, const FormSpec& form, const EndoMap& f) {
  return build_scheme(ctx, form, is_isometry(f, form) ? 4 : 3);
}

Json gens_json(const GroupContext& ctx, const Subgroup& s) {
  Json out = Json::array();
  for (Index x : s.generators) out.push_back(format_element(ctx, x));
  return out;
}

}  // namespace

RunResult cmd_verify_pds(const VerifyPdsOptions& opt) {
  if (opt.n < 1) throw InputError("n must be at least 1");
  const GF4Vector e = checked_vector(opt.e, opt.n, "e", true);
  const FormSpec form{checked_vector(opt.a, opt.n, "a", false)};
  const GF4 level = parse_level(opt.level);
  const GroupContext ctx = context_from(e);

  const IndexSet d = level_set(ctx, form, level);
  const PdsResult r = verify_pds(ctx, d, opt.threads);
  const int s = form_sign(form);
  const PdsParams expected = expected_params(opt.n, s, level.is_zero());

  RunResult out;
  Json& j = out.report;
  j["schema"] = kReportSchema;
  j["command"] = "verify-pds";
  j["inputs"] = Json{{"n", opt.n}, {"e", opt.e}, {"a", opt.a}, {"level", opt.level}, {"threads", opt.threads}};
  const auto* p = std::get_if<PdsParams>(&r);
  const bool match = p && matches_expected(*p, expected);
  j["verdicts"] = Json{{"pds", p != nullptr}, {"expected_match", match}, {"degenerate", p && p->degenerate}};
  j["result"] = to_json(r);
  j["result"]["sign"] = s;
  j["result"]["expected"] = to_json(expected);
  j["result"]["latin_type"] = p ? classify_ls_nls(*p).to_string() : "neither";
  out.exit_code = match ? kExitOk : kExitFailure;
  return out;
}

RunResult cmd_scheme(const SchemeOptions& opt) {
  if (opt.n < 1) throw InputError("n must be at least 1");
  const GF4Vector e = checked_vector(opt.e, opt.n, "e", true);
  const FormSpec form{checked_vector(opt.a, opt.n, "a", false)};
  const GroupContext ctx = context_from(e);
  const SchemePartition s = build_scheme(ctx, form, opt.variant);

  RunResult out;
  Json& j = out.report;
  j["schema"] = kReportSchema;
  j["command"] = "scheme";
  j["inputs"] = Json{{"n", opt.n}, {"e", opt.e}, {"a", opt.a}, {"variant", opt.variant}, {"amorphic", opt.amorphic}};
  Json sizes = Json::array();
  for (const auto& c : s.classes) sizes.push_back(c.size());

  const IntersectionResult r = intersection_numbers(s);
  const auto* p = std::get_if<IntersectionNumbers>(&r);
  j["verdicts"] = Json{{"scheme", p != nullptr}};
  Json result{{"classes", s.labels}, {"class_sizes", std::move(sizes)}};
  if (p)
    result["intersection_numbers"] = to_json(*p);
  else
    result["witness"] = to_json(std::get<SchemeWitness>(r));
  bool ok = p != nullptr;
  if (opt.amorphic) {
    const AmorphyCertificate cert = is_amorphic(s);
    std::size_t passed = 0;
    for (const auto& f : cert.fusions) passed += f.scheme && f.consistent;
    j["verdicts"]["amorphic"] = cert.amorphic;
    j["verdicts"]["uniform_type"] = cert.uniform_type;
    j["verdicts"]["fusions_passed"] = std::to_string(passed) + "/" + std::to_string(cert.fusions.size());
    result["certificate"] = to_json(cert);
    ok = ok && cert.amorphic && cert.uniform_type;
  }
  j["result"] = std::move(result);
  out.exit_code = ok ? kExitOk : kExitFailure;
  return out;
}

RunResult cmd_regular(const RegularOptions& opt) {
  const int modes = opt.family.has_value() + opt.custom.has_value() + opt.search.has_value();
  if (modes != 1) throw InputError("choose exactly one of --family, --custom, --search");

  RunResult out;
  Json& j = out.report;
  j["schema"] = kReportSchema;
  j["command"] = "regular";

  if (opt.family) {
    const FamilyInstance inst = build_family(*opt.family);
    const RegularGroup& g = *inst.group;
    j["inputs"] = to_json(*opt.family);
    j["inputs"]["pullback"] = opt.pullback == Pullback::all ? "all" : opt.pullback == Pullback::none ? "none" : "auto";
    Analysis a = analyze(g, inst.targets, inst.target_labels, opt.pullback, opt.threads);
    const FamilyComparison cmp = compare_family(inst, a.direct);
    const GktReport gkt = check_gkt_conditions(g.context(), g.form(), g.K(), g.tau(), g.h());
    j["construction"] = Json{{"twist", g.context().twist_string()},
                             {"form", g.form().to_string()},
                             {"tau", g.tau().descriptor().kind + ":" + g.tau().descriptor().param},
                             {"e", g.e()},
                             {"K_gens", gens_json(g.context(), g.K())},
                             {"h", format_element(g.context(), g.h())},
                             {"conditions", to_json(gkt, g.context())}};
    if (inst.H) j["construction"]["H_gens"] = gens_json(g.context(), *inst.H);
    j["verdicts"] = Json{{"conditions", gkt.ok()},
                         {"regular", a.json["regularity"]["ok"]},
                         {"equations", a.json["invariants"]["eq2_match"].get<bool>() &&
                                           a.json["invariants"]["eq3_match"].get<bool>() &&
                                           a.json["invariants"]["eq4_match"].get<bool>()},
                         {"predictions", cmp.all_pass()}};
    j["result"] = std::move(a.json);
    j["result"]["predictions"] = to_json(cmp);
    out.exit_code = (a.ok && gkt.ok() && cmp.all_pass()) ? kExitOk : kExitFailure;
    return out;
  }

  if (opt.custom) {
    const Json c = parse_json_text(*opt.custom);
    if (!c.is_object()) throw InputError("custom input must be a JSON object");
    const std::string e_text = require_string(c, "e");
    const int n = c.contains("n") ? c.at("n").get<int>() : static_cast<int>(e_text.size());
    const GroupContext ctx = context_from(checked_vector(e_text, n, "e", true));
    const FormSpec form{checked_vector(require_string(c, "a"), n, "a", false)};
    if (!c.contains("tau")) throw InputError("custom input needs a tau descriptor");
    const EndoMap tau = map_from_json(ctx, c.at("tau"));
    std::vector<Index> gens;
    if (!c.contains("K_gens") || !c.at("K_gens").is_array()) throw InputError("custom input needs a K_gens array");
    for (const auto& lit : c.at("K_gens")) gens.push_back(parse_element_index(ctx, lit.get<std::string>()));
    const Subgroup K = closure(ctx, gens);
    const Index h = parse_element_index(ctx, require_string(c, "h"));

    j["inputs"] = c;
    const GktReport gkt = check_gkt_conditions(ctx, form, K, tau, h);
    j["construction"] = Json{{"K_order", K.order()}, {"conditions", to_json(gkt, ctx)}};
    j["verdicts"] = Json{{"conditions", gkt.ok()}};
    if (!gkt.ok()) {
      std::string names;
      std::set<std::string> seen;
      for (const auto& v : gkt.violations)
        if (seen.insert(v.condition).second) names += (names.empty() ? "" : ",") + v.condition;
      j["verdicts"]["failed_check"] = "condition (" + names + ")";
      out.exit_code = kExitFailure;
      return out;
    }
    const RegularGroup g = RegularGroup::build(ctx, form, K, tau, h);
    const SchemePartition s = target_scheme(ctx, form, tau);
    Analysis a = analyze(g, s.classes, s.labels, opt.pullback, opt.threads);
    j["verdicts"]["regular"] = a.json["regularity"]["ok"];
    j["verdicts"]["analysis"] = a.ok;
    j["result"] = std::move(a.json);
    out.exit_code = a.ok ? kExitOk : kExitFailure;
    return out;
  }

  const Json d = parse_json_text(*opt.search);
  const GF4Vector e = checked_vector(opt.e, 0, "e", true);
  const GroupContext ctx = context_from(e);
  const FormSpec form{checked_vector(opt.a, static_cast<int>(e.size()), "a", false)};
  const EndoMap tau = map_from_json(ctx, d);
  if (!tau.is_automorphism()) throw InputError("the map is not an automorphism");
  const std::uint64_t e_ord = order(tau);
  j["inputs"] = Json{{"e", opt.e}, {"a", opt.a}, {"tau", d}};

  std::vector<std::pair<std::string, std::optional<GktPair>>> found;
  Json searches = Json::array();
  if (e_ord == 2) {
    std::optional<GktPair> p;
    try {
      p = order2_pair(tau);
    } catch (const ContractError&) {
    }
    found.emplace_back("order2_pair", p);
  } else if (e_ord == 4) {
    const Order4Search s4 = order4_pair(tau);
    found.emplace_back("order4_pair", s4.pair);
    searches.push_back(Json{{"method", "order4_pair"},
                            {"qualifying_subgroups", s4.qualifying_subgroups},
                            {"subgroups_without_h", s4.subgroups_without_h}});
    found.emplace_back("order4_quotient_condition", order4_quotient_condition(tau));
  } else {
    throw InputError("search needs a map of order 2 or 4, got order " + std::to_string(e_ord));
  }

  bool any = false;
  bool ok = true;
  Json results = Json::array();
  const SchemePartition s = target_scheme(ctx, form, tau);
  for (auto& [method, pair] : found) {
    Json r{{"method", method}, {"found", pair.has_value()}};
    if (pair) {
      any = true;
      r["K_gens"] = gens_json(ctx, pair->K);
      r["h"] = format_element(ctx, pair->h);
      if (pair->H) r["H_gens"] = gens_json(ctx, *pair->H);
      const GktReport gkt = check_gkt_conditions(ctx, form, pair->K, tau, pair->h);
      r["conditions"] = to_json(gkt, ctx);
      if (gkt.ok()) {
        const RegularGroup g = RegularGroup::build(ctx, form, pair->K, tau, pair->h);
        Analysis a = analyze(g, s.classes, s.labels, opt.pullback, opt.threads);
        r["analysis"] = std::move(a.json);
        ok = ok && a.ok;
      } else {
        ok = false;
      }
    }
    results.push_back(std::move(r));
  }
  j["verdicts"] = Json{{"found", any}, {"valid", ok}};
  j["result"] = Json{{"order", e_ord}, {"searches", std::move(searches)}, {"constructions", std::move(results)}};
  out.exit_code = any && ok ? kExitOk : kExitFailure;
  return out;
}

}  // namespace pdslab
