#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pdslab/report.hpp"

namespace {

int default_threads() {
  if (const char* env = std::getenv("PDSLAB_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace pdslab;

  CLI::App app{"Partial difference sets, amorphic Cayley schemes and their regular groups"};
  app.require_subcommand(1);
  std::string out_path;
  int threads = default_threads();
  app.add_option("--out", out_path, "Write the JSON report here instead of stdout");
  app.add_option("--threads", threads, "Worker threads (fallback: PDSLAB_THREADS)")->check(CLI::PositiveNumber);

  VerifyPdsOptions pds;
  auto* c_pds = app.add_subcommand("verify-pds", "Verify a level set of Q_a as a partial difference set");
  c_pds->add_option("--n", pds.n, "Number of blocks")->required();
  c_pds->add_option("--e", pds.e, "Twist vector over F2")->required();
  c_pds->add_option("--a", pds.a, "Form coefficients over F4 (0,1,w,W)")->required();
  c_pds->add_option("--level", pds.level, "Level value: 0, 1, w or W")->required();

  SchemeOptions sch;
  auto* c_sch = app.add_subcommand("scheme", "Check the S^(4) or S^(3) scheme and, optionally, amorphy");
  c_sch->add_option("--n", sch.n, "Number of blocks")->required();
  c_sch->add_option("--e", sch.e, "Twist vector over F2")->required();
  c_sch->add_option("--a", sch.a, "Form coefficients over F4")->required();
  c_sch->add_option("--variant", sch.variant, "3 or 4")->check(CLI::IsMember({3, 4}));
  c_sch->add_flag("--amorphic", sch.amorphic, "Enumerate every fusion");

  RegularOptions reg;
  std::string family, custom, search, pullback = "auto";
  FamilySpec fam;
  int n_check = -1;
  auto* c_reg = app.add_subcommand("regular", "Build a regular group G_{K,tau,h} and compare its invariants");
  c_reg->add_option("--family", family, "A, B, C or D");
  c_reg->add_option("--n", n_check, "Number of blocks (checked against --e)");
  c_reg->add_option("--e", fam.e, "Twist vector over F2");
  c_reg->add_option("--a", fam.a, "Form coefficients");
  c_reg->add_option("--v", fam.v, "tau_v vector (family A)");
  c_reg->add_option("--b", fam.b, "Hyperplane vector (families A, B, C)");
  c_reg->add_option("--epsilon", fam.epsilon, "Twist of the rotated blocks (family D)");
  c_reg->add_option("--alpha", fam.alpha, "Form coefficient of the rotated blocks (family D)");
  c_reg->add_option("--tail-n", fam.tail_n, "Blocks after the rotated four (family D)");
  c_reg->add_option("--custom", custom, "JSON: {\"e\",\"a\",\"tau\",\"K_gens\",\"h\"} or @file");
  c_reg->add_option("--search", search, "JSON map descriptor to search K and h for, or @file");
  c_reg->add_option("--pullback", pullback, "auto, none or all");

  auto started = std::chrono::steady_clock::now();
  RunResult result;
  std::string command = "pdslab";
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  auto read_arg = [](const std::string& s) {
    if (s.empty() || s[0] != '@') return s;
    std::ifstream in(s.substr(1));
    if (!in) throw InputError("cannot read " + s.substr(1));
    return std::string(std::istreambuf_iterator<char>(in), {});
  };

  try {
    if (*c_pds) {
      command = "verify-pds";
      pds.threads = threads;
      result = cmd_verify_pds(pds);
    } else if (*c_sch) {
      command = "scheme";
      result = cmd_scheme(sch);
    } else {
      command = "regular";
      reg.threads = threads;
      reg.pullback = parse_pullback(pullback);
      if (!family.empty()) {
        fam.family = parse_family(family);
        if (n_check >= 0 && fam.family != Family::D && static_cast<std::size_t>(n_check) != fam.e.size())
          throw InputError("--n does not match the length of --e");
        reg.family = fam;
      }
      if (!custom.empty()) reg.custom = read_arg(custom);
      if (!search.empty()) {
        reg.search = read_arg(search);
        reg.e = fam.e;
        reg.a = fam.a;
      }
      result = cmd_regular(reg);
    }
  } catch (const InputError& ex) {
    result = error_result(command, ex.what(), kExitInput);
  } catch (const nlohmann::json::exception& ex) {
    result = error_result(command, ex.what(), kExitInput);
  } catch (const ContractError& ex) {
    result = error_result(command, ex.what(), kExitFailure);
  }

  result.report["exit_code"] = result.exit_code;
  result.report["timing_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  const std::string text = result.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return kExitInput;
    }
    out << text;
  }
  return result.exit_code;
}
