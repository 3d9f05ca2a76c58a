// Command-line front end. Talks to the library exclusively through the
// radonfilt C API, the same surface other language bindings would use.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "radonfilt/radonfilt.h"

namespace {

struct CommonOpts {
  std::string family = "subset";
  int n = 0;
  int s = -1;
  long q = 0;
  std::string format = "json";
  std::string out;
  std::string check;
  int jobs = 1;
  long max_level_points = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool s_required) {
  cmd->add_option("--family", o.family, "lattice family")
      ->check(CLI::IsMember({"subset", "subspace"}))
      ->required();
  cmd->add_option("--n", o.n, "ambient size / dimension")->required();
  auto* sopt = cmd->add_option("--s", o.s, "level");
  if (s_required) sopt->required();
  cmd->add_option("--q", o.q, "field order (subspace family)");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out, "write the report to PATH instead of stdout");
  cmd->add_option("--check", o.check, "check selection (verify/count) or 'oracle' (spherical)");
  cmd->add_option("--jobs", o.jobs, "parallel check execution degree");
  cmd->add_option("--max-level-points", o.max_level_points, "enumeration ceiling override");
}

int run(const std::string& command, const CommonOpts& o) {
  rf_task* t = rf_task_new(command.c_str());
  if (t == nullptr) {
    std::cerr << "error: cannot create task\n";
    return 1;
  }
  auto set = [&](const char* k, const std::string& v) { return rf_task_set(t, k, v.c_str()); };
  int rc = RF_OK;
  rc |= set("family", o.family);
  rc |= set("n", std::to_string(o.n));
  if (o.s >= 0) rc |= set("s", std::to_string(o.s));
  if (o.q > 0) rc |= set("q", std::to_string(o.q));
  rc |= set("format", o.format);
  if (!o.check.empty()) rc |= set("check", o.check);
  rc |= set("jobs", std::to_string(o.jobs));
  if (o.max_level_points > 0) rc |= set("max-level-points", std::to_string(o.max_level_points));
  if (rc != RF_OK) {
    std::cerr << "error: invalid parameters\n";
    rf_task_free(t);
    return 1;
  }

  int code = rf_task_run(t);
  const char* err = rf_task_error(t);
  if (err[0] != '\0') std::cerr << "error: " << err << "\n";
  const std::string output = rf_task_output(t);
  rf_task_free(t);

  if (!output.empty()) {
    if (o.out.empty()) {
      std::cout << output << "\n";
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot write " << o.out << "\n";
        return 1;
      }
      f << output;  // identical configs must produce byte-identical files
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Radon filtrations on subset and subspace lattices"};
  app.require_subcommand(1);

  CommonOpts od, os, ov, oc;
  auto* decompose = app.add_subcommand("decompose", "irreducible decomposition of one level");
  add_common(decompose, od, /*s_required=*/true);
  auto* spherical = app.add_subcommand("spherical", "closed-form spherical function table");
  add_common(spherical, os, /*s_required=*/true);
  auto* verify = app.add_subcommand("verify", "run the identity/oracle suites");
  add_common(verify, ov, /*s_required=*/false);
  auto* count = app.add_subcommand("count", "closed-form vs enumerated configuration counts");
  add_common(count, oc, /*s_required=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;  // usage problems exit 1 by contract
  }

  if (decompose->parsed()) return run("decompose", od);
  if (spherical->parsed()) return run("spherical", os);
  if (verify->parsed()) return run("verify", ov);
  return run("count", oc);
}
