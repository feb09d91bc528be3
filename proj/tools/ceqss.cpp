// ceqss: build, verify and demo communication-efficient quantum secret
// sharing schemes from concatenated extended CSS codes.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "ceqss/demo.hpp"
#include "ceqss/verify.hpp"

namespace {

using namespace ceqss;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("descriptor", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

size_t state_guard_from_env() {
  const char* env = std::getenv("CEQSS_MAX_DIM");
  if (!env || !*env) return size_t(1) << 24;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0)
    throw DomainError("descriptor", "CEQSS_MAX_DIM must be a positive integer");
  return size_t(v);
}

int cmd_build(const std::string& path, size_t enum_budget) {
  SchemeDescriptor desc = parse_descriptor(read_file(path));
  Scheme scheme = scheme_from_descriptor(desc, BuildOptions{enum_budget});
  std::cout << emit_scheme(scheme);
  return 0;
}

int cmd_verify(const std::string& path, const VerifyFlags& flags) {
  std::string bytes = read_file(path);
  SchemeDescriptor desc = parse_descriptor(bytes);
  VerifyOutcome outcome = run_verify(desc, bytes, flags);
  std::cout << outcome.report_json;
  return outcome.pass ? 0 : 3;
}

int cmd_access(const std::string& path, size_t enum_budget) {
  SchemeDescriptor desc = parse_descriptor(read_file(path));
  Scheme scheme = scheme_from_descriptor(desc, BuildOptions{enum_budget});
  std::cout << access_report_json(scheme, enum_budget);
  return 0;
}

int cmd_tau(const std::string& path, size_t enum_budget) {
  SchemeDescriptor desc = parse_descriptor(read_file(path));
  Scheme scheme = scheme_from_descriptor(desc, BuildOptions{enum_budget});
  bool ok = false;
  std::cout << tau_report_json(scheme, enum_budget, &ok);
  return ok ? 0 : 3;
}

int cmd_simulate(const std::string& path, size_t enum_budget) {
  SchemeDescriptor desc = parse_descriptor(read_file(path));
  Scheme scheme = scheme_from_descriptor(desc, BuildOptions{enum_budget});
  bool ok = false;
  std::cout << simulation_report_json(scheme, enum_budget, state_guard_from_env(), &ok);
  return ok ? 0 : 3;
}

int cmd_bounds(const std::string& path, size_t enum_budget) {
  SchemeDescriptor desc = parse_descriptor(read_file(path));
  Scheme scheme = scheme_from_descriptor(desc, BuildOptions{enum_budget});
  std::cout << bounds_report_json(scheme);
  return 0;
}

void print_share_table(std::ostream& os, const StaircaseShares& sh) {
  os << "  party | layer 1 | layer 2\n";
  for (size_t p = 1; p <= 3; ++p) {
    os << "      " << p << " |       " << sh.layer1[p - 1] << " |       "
       << sh.layer2[p - 1] << "\n";
  }
}

int cmd_demo(bool as_json, uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&]() { return uint32_t(rng() % 5); };

  bool all_ok = true;
  std::ostringstream text;
  std::ostringstream json_rows;
  text << "staircase CE-SS over F_5: n = 3 parties, t = 2, d = 3\n";
  text << "layer 1: s+r1+r2, s+2r1+4r2, s+3r1+4r2\n";
  text << "layer 2: r2+r3, r2+2r3, r2+3r3\n";

  json_rows << "{\n  \"tuples\": [";
  for (int round = 0; round < 5; ++round) {
    uint32_t s = draw(), r1 = draw(), r2 = draw(), r3 = draw();
    StaircaseShares sh = demo_encode(s, r1, r2, r3);

    text << "\ntuple " << round + 1 << ": (s, r1, r2, r3) = (" << s << ", " << r1
         << ", " << r2 << ", " << r3 << ")\n";
    print_share_table(text, sh);

    TwoPartySteps steps;
    uint32_t rec2 = demo_recover_two(sh, 1, 2, &steps);
    text << "recovery from parties {1,2}, downloading 4 symbols:\n";
    text << "  start       layer1 = [" << steps.layer1_start[0] << " "
         << steps.layer1_start[1] << "]  layer2 = [" << steps.layer2_start[0] << " "
         << steps.layer2_start[1] << "]\n";
    text << "  decode L2   r2 = " << steps.after_layer2[0]
         << ", r3 = " << steps.after_layer2[1] << "\n";
    text << "  cancel r2   layer1 = [" << steps.after_cancel[0] << " "
         << steps.after_cancel[1] << "]\n";
    text << "  solve       s = " << steps.solved[0] << ", r1 = " << steps.solved[1]
         << "\n";
    uint32_t rec3 = demo_recover_three(sh.layer1);
    text << "recovery from layer 1 of all parties, downloading 3 symbols: s = "
         << rec3 << "\n";
    all_ok = all_ok && rec2 == s && rec3 == s;

    json_rows << (round ? ",\n    " : "\n    ") << "{\"s\": " << s << ", \"r1\": " << r1
              << ", \"r2\": " << r2 << ", \"r3\": " << r3 << ", \"layer1\": ["
              << sh.layer1[0] << ", " << sh.layer1[1] << ", " << sh.layer1[2]
              << "], \"layer2\": [" << sh.layer2[0] << ", " << sh.layer2[1] << ", "
              << sh.layer2[2] << "], \"recovered_two\": " << rec2
              << ", \"recovered_three\": " << rec3 << "}";
  }

  // exhaustive checks behind the fixture
  size_t failures = 0;
  for (uint32_t s = 0; s < 5; ++s)
    for (uint32_t r1 = 0; r1 < 5; ++r1)
      for (uint32_t r2 = 0; r2 < 5; ++r2)
        for (uint32_t r3 = 0; r3 < 5; ++r3) {
          StaircaseShares sh = demo_encode(s, r1, r2, r3);
          for (auto [a, b] : {std::pair<uint32_t, uint32_t>{1, 2}, {1, 3}, {2, 3}}) {
            if (demo_recover_two(sh, a, b) != s) ++failures;
          }
          if (demo_recover_three(sh.layer1) != s) ++failures;
        }
  bool secrecy = demo_secrecy_check();
  all_ok = all_ok && failures == 0 && secrecy;

  text << "\nexhaustive recovery over 5^4 tuples (3 pairs + layer-1): "
       << (failures == 0 ? "PASS" : "FAIL") << "\n";
  text << "single-party secrecy (uniform, s-independent): "
       << (secrecy ? "PASS" : "FAIL") << "\n";
  text << "communication cost: CC(2) = 4 symbols, CC(3) = 3 symbols\n";

  json_rows << "\n  ],\n  \"exhaustive_recovery\": " << (failures == 0 ? "true" : "false")
            << ",\n  \"secrecy\": " << (secrecy ? "true" : "false")
            << ",\n  \"cc_2\": 4,\n  \"cc_3\": 3\n}\n";

  std::cout << (as_json ? json_rows.str() : text.str());
  return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"communication-efficient quantum secret sharing schemes"};
  app.require_subcommand(1);

  std::string path;
  size_t enum_budget = kDefaultEnumBudget;
  bool flag_access = false, flag_simulate = false, flag_tau = false;
  bool demo_json = false;
  uint64_t demo_seed = 20240101;

  auto add_common = [&](CLI::App* sub, bool needs_path = true) {
    if (needs_path)
      sub->add_option("descriptor", path, "scheme descriptor JSON file")->required();
    sub->add_option("--enum-budget", enum_budget,
                    "cap on q^k codeword enumerations (default 2^24)");
  };

  CLI::App* build = app.add_subcommand("build", "derive the full scheme as JSON");
  add_common(build);
  CLI::App* verify = app.add_subcommand("verify", "check conditions, costs and bounds");
  add_common(verify);
  verify->add_flag("--access", flag_access, "exhaustive grouped access classification");
  verify->add_flag("--simulate", flag_simulate, "rank vs entropy cross-validation");
  verify->add_flag("--tau", flag_tau, "extension-access thresholds vs oracle");
  CLI::App* access = app.add_subcommand("access", "full subset classification");
  add_common(access);
  CLI::App* tau = app.add_subcommand("tau", "thresholds with prior extension access");
  add_common(tau);
  CLI::App* simulate = app.add_subcommand("simulate", "entropy-condition classification");
  add_common(simulate);
  CLI::App* bounds = app.add_subcommand("bounds", "storage and communication bounds");
  add_common(bounds);
  CLI::App* demo = app.add_subcommand("demo", "3-party staircase walkthrough over F_5");
  demo->add_flag("--json", demo_json, "machine-readable output");
  demo->add_option("--seed", demo_seed, "tuple sampling seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(path, enum_budget);
    if (verify->parsed()) {
      VerifyFlags flags;
      flags.access = flag_access;
      flags.simulate = flag_simulate;
      flags.tau = flag_tau;
      flags.enum_budget = enum_budget;
      flags.state_guard = state_guard_from_env();
      return cmd_verify(path, flags);
    }
    if (access->parsed()) return cmd_access(path, enum_budget);
    if (tau->parsed()) return cmd_tau(path, enum_budget);
    if (simulate->parsed()) return cmd_simulate(path, enum_budget);
    if (bounds->parsed()) return cmd_bounds(path, enum_budget);
    if (demo->parsed()) return cmd_demo(demo_json, demo_seed);
  } catch (const ResourceError& e) {
    std::cout << "{\"error\": {\"code\": \"" << e.code() << "\", \"message\": \""
              << e.what() << "\"}}\n";
    return 4;
  } catch (const IntegrityError& e) {
    std::cout << "{\"error\": {\"code\": \"" << e.code() << "\", \"message\": \""
              << e.what() << "\"}}\n";
    return 3;
  } catch (const InternalError& e) {
    std::cout << "{\"error\": {\"code\": \"" << e.code() << "\", \"message\": \""
              << e.what() << "\"}}\n";
    return 3;
  } catch (const Error& e) {
    std::cout << "{\"error\": {\"code\": \"" << e.code() << "\", \"message\": \""
              << e.what() << "\"}}\n";
    return 2;
  }
  return 1;
}
