#include "ceqss/verify.hpp"

#include <nlohmann/json.hpp>

#include "ceqss/ecss.hpp"
#include "ceqss/qsim.hpp"

namespace ceqss {

using nlohmann::json;

namespace {

json bound_to_json(const BoundCheck& b) {
  return json{{"value", b.value},
              {"bound_num", b.bound_num},
              {"bound_den", b.bound_den},
              {"satisfied", b.satisfied},
              {"tight", b.tight}};
}

json bounds_to_json(const BoundsReport& rep) {
  return json{{"storage", bound_to_json(rep.storage)},
              {"cc_t", bound_to_json(rep.cc_t)},
              {"cc_d", bound_to_json(rep.cc_d)},
              {"ce_holds", rep.ce_holds}};
}

const char* class_name(SetClass c) {
  switch (c) {
    case SetClass::authorized:
      return "authorized";
    case SetClass::unauthorized:
      return "unauthorized";
    default:
      return "intermediate";
  }
}

// rank-side classification of one party subset on the flattened code
SetClass rank_classify(const FlattenedScheme& flat, const Scheme& s,
                       const std::vector<size_t>& parties) {
  IndexSet coords, comp_coords;
  std::vector<bool> chosen(s.n + 1, false);
  for (size_t p : parties) chosen[p] = true;
  for (size_t p = 1; p <= s.n; ++p) {
    IndexSet pc = s.party_coords(p);
    auto& dst = chosen[p] ? coords : comp_coords;
    dst.insert(dst.end(), pc.begin(), pc.end());
  }
  if (is_authorized(flat.css, coords)) return SetClass::authorized;
  if (is_authorized(flat.css, comp_coords)) return SetClass::unauthorized;
  return SetClass::intermediate;
}

std::vector<size_t> mask_to_parties(uint32_t mask, size_t n) {
  std::vector<size_t> out;
  for (size_t p = 1; p <= n; ++p) {
    if (mask & (uint32_t(1) << (p - 1))) out.push_back(p);
  }
  return out;
}

}  // namespace

std::string access_report_json(const Scheme& s, size_t enum_budget, size_t max_parties) {
  if (s.n > max_parties || s.n >= 31)
    throw ResourceError("subset_budget", "too many parties for exhaustive access check");
  FlattenedScheme flat = flatten_css(s, enum_budget);

  json out;
  out["n"] = s.n;
  json auth = json::array(), unauth = json::array(), inter = json::array();
  size_t largest_not_auth = 0, smallest_not_unauth = s.n;
  bool thresholds_ok = true;
  json counterexample;
  const uint32_t full = (uint32_t(1) << s.n) - 1;
  for (uint32_t mask = 0; mask <= full; ++mask) {
    auto parties = mask_to_parties(mask, s.n);
    SetClass cls = rank_classify(flat, s, parties);
    size_t size = parties.size();
    if (cls == SetClass::authorized) {
      auth.push_back(parties);
    } else {
      largest_not_auth = std::max(largest_not_auth, size);
      if (cls == SetClass::unauthorized) {
        unauth.push_back(parties);
      } else {
        inter.push_back(parties);
      }
    }
    if (cls != SetClass::unauthorized) smallest_not_unauth = std::min(smallest_not_unauth, size);

    bool bad = (size >= s.t && cls != SetClass::authorized) ||
               (size <= s.z && cls != SetClass::unauthorized);
    if (bad && thresholds_ok) {
      thresholds_ok = false;
      counterexample = {{"check", "access"}, {"parties", parties}, {"class", class_name(cls)}};
    }
  }
  out["authorized"] = auth;
  out["unauthorized"] = unauth;
  out["intermediate"] = inter;
  out["t_min"] = largest_not_auth + 1;
  out["z_max"] = smallest_not_unauth == 0 ? 0 : smallest_not_unauth - 1;
  out["thresholds_hold"] = thresholds_ok;
  if (!thresholds_ok) out["counterexample"] = counterexample;
  return out.dump(2) + "\n";
}

std::string tau_report_json(const Scheme& s, size_t enum_budget, bool* all_match) {
  LinearCode f0 = sum_code(s.codes.a1, s.codes.b2);
  ExtendedCssSpec spec = ecss_new(f0, s.codes.b2, s.codes.e.gen(), enum_budget);

  json rows = json::array();
  bool ok = true;
  for (size_t u = 0; u <= spec.e; ++u) {
    ExtensionSplit split = ExtensionSplit::prefix(spec, u);
    TauResult formula = tau(spec, split, enum_budget);
    size_t oracle = tau_oracle(spec, split);
    bool match = !formula.clamped && formula.value == oracle;
    ok = ok && match;
    rows.push_back({{"u", u},
                    {"tau_formula", formula.value},
                    {"tau_oracle", oracle},
                    {"match", match}});
  }
  TauResult t_full = tau_full(spec, enum_budget);
  TauResult t_none = tau_none(spec, enum_budget);
  bool covers = t_full.value <= s.t && t_none.value <= s.d;
  ok = ok && covers;

  json out;
  out["e"] = spec.e;
  out["rows"] = rows;
  out["tau_full"] = t_full.value;
  out["tau_none"] = t_none.value;
  out["tau_full_le_t"] = t_full.value <= s.t;
  out["tau_none_le_d"] = t_none.value <= s.d;
  if (all_match) *all_match = ok;
  return out.dump(2) + "\n";
}

std::string simulation_report_json(const Scheme& s, size_t enum_budget,
                                   size_t state_guard, bool* all_match) {
  FlattenedScheme flat = flatten_css(s, enum_budget);
  CosetEncoder encoder{flat.secret_directions, flat.randomness_directions};
  DenseState state = entangle_reference(encoder, s.m, state_guard);

  json rows = json::array();
  bool ok = true;
  double max_residual = 0.0;
  json counterexample;
  const uint32_t full = (uint32_t(1) << s.n) - 1;
  for (uint32_t mask = 0; mask <= full; ++mask) {
    auto parties = mask_to_parties(mask, s.n);
    IndexSet coords;
    for (size_t p : parties) {
      IndexSet pc = s.party_coords(p);
      coords.insert(coords.end(), pc.begin(), pc.end());
    }
    SetClass by_rank = rank_classify(flat, s, parties);
    EntropyClassification by_entropy = classify_by_entropy_detailed(state, coords, s.m);
    bool match = by_rank == by_entropy.cls;
    if (!match && ok) {
      counterexample = {{"check", "simulate"}, {"parties", parties}};
    }
    ok = ok && match;
    max_residual = std::max(max_residual,
                            std::min(by_entropy.residual_authorized,
                                     by_entropy.residual_unauthorized));
    rows.push_back({{"parties", parties},
                    {"rank", class_name(by_rank)},
                    {"entropy", class_name(by_entropy.cls)},
                    {"s_shares", by_entropy.s_shares},
                    {"s_joint", by_entropy.s_joint}});
  }

  json out;
  out["qudits"] = s.m + s.total_coords();
  out["s_reference"] = double(s.m);
  out["subsets"] = rows;
  out["agree"] = ok;
  out["max_residual"] = max_residual;
  if (!ok) out["counterexample"] = counterexample;
  if (all_match) *all_match = ok;
  return out.dump(2) + "\n";
}

std::string bounds_report_json(const Scheme& s) {
  return bounds_to_json(bounds_report(s)).dump(2) + "\n";
}

namespace {

json conditions_to_json(const ConditionReport& rep, size_t t, size_t d, size_t z) {
  json conditions;
  conditions["m1"] = rep.m1;
  conditions["m2"] = rep.m2;
  conditions["m3"] = rep.m3;
  if (rep.weights_computed) {
    conditions["eq15a"] = {{"pass", rep.eq15a}, {"t", t}, {"floor", rep.t_floor}};
    conditions["eq15b"] = {{"pass", rep.eq15b}, {"d", d}, {"floor", rep.d_floor}};
    conditions["eq15c"] = {{"pass", rep.eq15c}, {"z", z}, {"cap", rep.z_cap}};
    conditions["eq15d"] = rep.eq15d;
    conditions["weights"] = {{"a2b1_over_b1", rep.w_a2b1_over_b1},
                             {"a1b2_over_b2", rep.w_a1b2_over_b2},
                             {"dual_b1_over_dual_b0", rep.w_dual_b1_over_dual_b0},
                             {"b0_over_b1", rep.w_b0_over_b1},
                             {"dual_b2_over_dual_a1b2", rep.w_dual_b2_over_dual_a1b2}};
  }
  return conditions;
}

}  // namespace

VerifyOutcome run_verify(const SchemeDescriptor& desc, const std::string& descriptor_bytes,
                         const VerifyFlags& flags) {
  json report;
  report["descriptor_hash"] = descriptor_hash(descriptor_bytes);

  BuildOptions opts{flags.enum_budget};
  bool pass = true;

  // grs descriptors validate inside optimal_grs (bad thresholds or field
  // are invalid input, not a verification failure); explicit ones are
  // analyzed condition by condition so a failing Eq. 15 is reported
  std::optional<Scheme> scheme;
  if (desc.construction == "grs") {
    scheme = optimal_grs(desc.q, desc.t, desc.d, desc.z, desc.points, opts);
  } else {
    FieldSpec field(desc.q);
    const auto& m = *desc.matrices;
    SchemeCodes codes{
        LinearCode::from_generator(m.at("b0")), LinearCode::from_generator(m.at("b1")),
        LinearCode::from_generator(m.at("b2")), LinearCode::from_generator(m.at("a1")),
        LinearCode::from_generator(m.at("a2")), LinearCode::from_generator(m.at("e"))};
    ConditionReport rep = analyze_conditions(field, codes, desc.t, desc.d, desc.z, opts);
    report["conditions"] = conditions_to_json(rep, desc.t, desc.d, desc.z);
    if (!rep.all_pass()) {
      report["failed_condition"] = rep.first_failure();
      report["pass"] = false;
      return VerifyOutcome{false, report.dump(2) + "\n"};
    }
    scheme = build(field, codes, desc.t, desc.d, desc.z, opts);
  }

  report["conditions"] = conditions_to_json(scheme->conditions, scheme->t, scheme->d,
                                            scheme->z);
  report["costs"] = {{"m", scheme->m}, {"w", scheme->w},
                     {"cc_t", scheme->cc_t}, {"cc_d", scheme->cc_d}};

  BoundsReport bounds = bounds_report(*scheme);
  report["bounds"] = bounds_to_json(bounds);
  pass = pass && bounds.storage.satisfied && bounds.cc_t.satisfied &&
         bounds.cc_d.satisfied && bounds.ce_holds;

  if (flags.access) {
    std::string access = access_report_json(*scheme, flags.enum_budget,
                                            flags.max_access_parties);
    json aj = json::parse(access);
    report["access"] = aj;
    pass = pass && aj.at("thresholds_hold").get<bool>();
  }
  if (flags.tau) {
    bool tau_ok = false;
    report["tau"] = json::parse(tau_report_json(*scheme, flags.enum_budget, &tau_ok));
    pass = pass && tau_ok;
  }
  if (flags.simulate) {
    bool sim_ok = false;
    report["simulation"] = json::parse(
        simulation_report_json(*scheme, flags.enum_budget, flags.state_guard, &sim_ok));
    pass = pass && sim_ok;
  }

  report["pass"] = pass;
  return VerifyOutcome{pass, report.dump(2) + "\n"};
}

}  // namespace ceqss
