// sicsep: build general SIC-POVMs and run the separability criteria on
// density-matrix files. All payloads go to stdout as a single JSON
// document (or CSV for scans); diagnostics go to stderr. Exit code 0
// means the command ran; detection results live in the payload. Exit
// code 2 signals usage or validation errors.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sicsep/criteria.hpp"
#include "sicsep/oracles.hpp"
#include "sicsep/scan.hpp"
#include "sicsep/sicpovm.hpp"
#include "sicsep/states.hpp"

namespace {

using nlohmann::json;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SICSEP_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

json verdict_to_json(const sicsep::CriterionVerdict& v) {
  json rows = json::array();
  for (const auto& row : v.assignment.rows) rows.push_back(row);
  json out = {
      {"theorem", sicsep::theorem_name(v.theorem)},
      {"j", v.j_value},
      {"j_mode", v.j_mode == sicsep::JMode::Exact ? "exact" : "heuristic"},
      {"bound", v.bound},
      {"detected", v.detected},
      {"assignment", rows},
  };
  if (v.inconclusive) out["inconclusive"] = true;
  return out;
}

int cmd_povm_build(int dim, std::optional<double> t, std::optional<double> a,
                   bool use_max_t, const std::string& out_path) {
  int flags = (t ? 1 : 0) + (a ? 1 : 0) + (use_max_t ? 1 : 0);
  if (flags != 1) {
    std::cerr << "povm-build: give exactly one of --t, --a, --max-t\n";
    return 2;
  }
  sicsep::GeneralSicPovm povm =
      t ? sicsep::build_from_t(dim, *t)
        : (a ? sicsep::build_from_a(dim, *a)
             : sicsep::build_from_t(dim, sicsep::max_t(dim)));
  if (!out_path.empty()) sicsep::save_povm(povm, out_path);
  auto residuals = sicsep::compute_residuals(povm);
  std::cout << json{{"dim", povm.dim},
                    {"t", povm.t},
                    {"a", povm.a},
                    {"min_eigenvalue", residuals.min_eigenvalue}}
                   .dump()
            << "\n";
  return 0;
}

int cmd_povm_validate(const std::string& path) {
  sicsep::GeneralSicPovm povm = sicsep::load_povm(path);
  auto r = sicsep::compute_residuals(povm);
  std::cout << json{{"dim", povm.dim},
                    {"a", povm.a},
                    {"identity_sum_residual", r.identity_sum},
                    {"self_overlap_residual", r.self_overlap},
                    {"cross_overlap_residual", r.cross_overlap},
                    {"min_eigenvalue", r.min_eigenvalue}}
                   .dump()
            << "\n";
  if (r.identity_sum > 1e-10) {
    std::cerr << "violated: identity-sum residual " << r.identity_sum << "\n";
    return 2;
  }
  if (r.self_overlap > 1e-9) {
    std::cerr << "violated: self-overlap residual " << r.self_overlap << "\n";
    return 2;
  }
  if (r.cross_overlap > 1e-9) {
    std::cerr << "violated: cross-overlap residual " << r.cross_overlap << "\n";
    return 2;
  }
  if (r.min_eigenvalue < -1e-10) {
    std::cerr << "violated: positivity, min eigenvalue " << r.min_eigenvalue
              << "\n";
    return 2;
  }
  return 0;
}

std::vector<sicsep::GeneralSicPovm> gather_povms(
    const std::vector<std::string>& povm_paths, bool auto_build,
    bool conjugate_b, const std::vector<int>& dims) {
  std::vector<sicsep::GeneralSicPovm> povms;
  if (auto_build) {
    for (int d : dims) povms.push_back(sicsep::build_from_t(d, sicsep::max_t(d)));
  } else {
    if (povm_paths.empty())
      throw sicsep::Error("no POVMs: give --povm files or --auto");
    for (const auto& p : povm_paths) povms.push_back(sicsep::load_povm(p));
    if (povms.size() == 1 && dims.size() == 2 && !conjugate_b)
      throw sicsep::Error("two-party state needs two POVMs (or --conjugate-b)");
  }
  if (conjugate_b) {
    if (dims.size() != 2 || dims[0] != dims[1])
      throw sicsep::Error("--conjugate-b requires two parties of equal dim");
    povms.resize(1);
    povms.push_back(sicsep::conjugate(povms[0]));
  }
  return povms;
}

int cmd_detect(const std::string& state_path, int theorem_id,
               const std::vector<std::string>& povm_paths, bool auto_build,
               bool conjugate_b, const std::string& mode_name,
               std::uint64_t seed, const std::string& partition_text) {
  sicsep::DensityMatrix rho = sicsep::load_state(state_path);
  sicsep::JMode mode = mode_name == "heuristic" ? sicsep::JMode::Heuristic
                                                : sicsep::JMode::Exact;
  sicsep::CriterionVerdict verdict;

  if (!partition_text.empty()) {
    if (theorem_id != 3 && theorem_id != 4)
      throw sicsep::Error("--partition requires --theorem 3 or 4");
    auto partition = sicsep::PartitionSpec::parse(partition_text, rho.parties());
    auto povms = gather_povms(povm_paths, auto_build, false,
                              partition.block_dims(rho.dims));
    verdict = sicsep::detect_k_nonseparable(
        rho, partition, povms,
        theorem_id == 3 ? sicsep::Theorem::T3 : sicsep::Theorem::T4, mode,
        seed);
  } else if (theorem_id == 1 || theorem_id == 2) {
    if (rho.parties() != 2)
      throw sicsep::Error("theorems 1 and 2 need a two-party state");
    auto povms = gather_povms(povm_paths, auto_build, conjugate_b, rho.dims);
    verdict = sicsep::detect_bipartite(
        rho, povms[0], povms[1],
        theorem_id == 1 ? sicsep::Theorem::T1 : sicsep::Theorem::T2);
  } else {
    auto povms = gather_povms(povm_paths, auto_build, conjugate_b, rho.dims);
    verdict = sicsep::detect_multipartite(
        rho, povms, theorem_id == 3 ? sicsep::Theorem::T3 : sicsep::Theorem::T4,
        mode, seed);
  }
  std::cout << verdict_to_json(verdict).dump() << "\n";
  return 0;
}

int cmd_scan_isotropic(int dim, double p_start, double p_end, int steps,
                       std::optional<double> a) {
  auto rows = sicsep::scan_isotropic(dim, p_start, p_end, steps, a);
  sicsep::write_scan_csv(std::cout, rows);
  return 0;
}

int cmd_oracle(bool ppt, bool brute_j, const std::string& state_path, int cut,
               const std::vector<std::string>& povm_paths, bool auto_build) {
  if (ppt == brute_j) {
    std::cerr << "oracle: give exactly one of --ppt, --brute-j\n";
    return 2;
  }
  sicsep::DensityMatrix rho = sicsep::load_state(state_path);
  if (ppt) {
    auto report = sicsep::ppt_check(rho, cut);
    std::cout << json{{"cut", report.cut},
                      {"min_eigenvalue", report.min_eigenvalue},
                      {"npt", report.npt}}
                     .dump()
              << "\n";
  } else {
    auto povms = gather_povms(povm_paths, auto_build, false, rho.dims);
    double j = sicsep::brute_force_j(rho, povms);
    std::cout << json{{"j", j}}.dump() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"general SIC-POVM separability criteria"};
  app.require_subcommand(1);

  // povm-build
  auto* build = app.add_subcommand("povm-build", "construct a general SIC-POVM");
  int build_dim = 0;
  std::optional<double> build_t, build_a;
  bool build_max_t = false;
  std::string build_out;
  build->add_option("--dim", build_dim, "local dimension")->required();
  build->add_option("--t", build_t, "construction parameter t");
  build->add_option("--a", build_a, "purity parameter a");
  build->add_flag("--max-t", build_max_t, "largest feasible t");
  build->add_option("--out", build_out, "output POVM file");

  // povm-validate
  auto* validate = app.add_subcommand("povm-validate",
                                      "check the defining conditions of a POVM file");
  std::string validate_path;
  validate->add_option("path", validate_path, "POVM file")->required();

  // detect
  auto* detect = app.add_subcommand("detect", "run a separability criterion");
  std::string detect_state, detect_mode = "exact", detect_partition;
  int detect_theorem = 0;
  std::vector<std::string> detect_povms;
  bool detect_auto = false, detect_conj = false;
  std::uint64_t detect_seed = default_seed();
  detect->add_option("--state", detect_state, "state file")->required();
  detect->add_option("--theorem", detect_theorem, "1, 2, 3 or 4")
      ->required()
      ->check(CLI::Range(1, 4));
  detect->add_option("--povm", detect_povms, "POVM file, one per party/block");
  detect->add_flag("--auto", detect_auto, "build max-t POVMs per subsystem");
  detect->add_flag("--conjugate-b", detect_conj,
                   "second POVM is the conjugate of the first");
  detect->add_option("--mode", detect_mode, "exact or heuristic")
      ->check(CLI::IsMember({"exact", "heuristic"}));
  detect->add_option("--seed", detect_seed, "heuristic seed");
  detect->add_option("--partition", detect_partition,
                     "k-nonseparability partition, e.g. \"1;3,2\"");

  // scan-isotropic
  auto* scan = app.add_subcommand("scan-isotropic",
                                  "criteria on the isotropic family over a noise grid");
  int scan_dim = 0, scan_steps = 0;
  double scan_p0 = 0.0, scan_p1 = 0.0;
  std::optional<double> scan_a;
  scan->add_option("--dim", scan_dim, "local dimension")->required();
  scan->add_option("--p-start", scan_p0, "grid start")->required();
  scan->add_option("--p-end", scan_p1, "grid end")->required();
  scan->add_option("--steps", scan_steps, "grid points")->required();
  scan->add_option("--a", scan_a, "POVM purity parameter (default max-t)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "independent cross-checks");
  bool oracle_ppt = false, oracle_brute = false, oracle_auto = false;
  std::string oracle_state;
  int oracle_cut = 0;
  std::vector<std::string> oracle_povms;
  oracle->add_flag("--ppt", oracle_ppt, "partial-transpose check");
  oracle->add_flag("--brute-j", oracle_brute, "exhaustive J maximization");
  oracle->add_option("--state", oracle_state, "state file")->required();
  oracle->add_option("--cut", oracle_cut, "party index for --ppt");
  oracle->add_option("--povm", oracle_povms, "POVM files for --brute-j");
  oracle->add_flag("--auto", oracle_auto, "build max-t POVMs per subsystem");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed())
      return cmd_povm_build(build_dim, build_t, build_a, build_max_t, build_out);
    if (validate->parsed()) return cmd_povm_validate(validate_path);
    if (detect->parsed())
      return cmd_detect(detect_state, detect_theorem, detect_povms, detect_auto,
                        detect_conj, detect_mode, detect_seed, detect_partition);
    if (scan->parsed())
      return cmd_scan_isotropic(scan_dim, scan_p0, scan_p1, scan_steps, scan_a);
    if (oracle->parsed())
      return cmd_oracle(oracle_ppt, oracle_brute, oracle_state, oracle_cut,
                        oracle_povms, oracle_auto);
  } catch (const sicsep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
