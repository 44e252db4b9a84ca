// toric-index: good-cone checking, edge frames, equivariant index
// multiplicities and brute-force verification for moment cones given as JSON.

#include "toric/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

int main(int argc, char** argv) {
  CLI::App app{"equivariant index computations on moment cones"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false;
  long long box_lo = -5, box_hi = 5;
  unsigned eps_seed = 0;
  unsigned seed_count = 3;
  std::string method = "both";
  std::string twist_path;
  bool corrupt_sign = false;
  bool with_timing = false;

  auto* check = app.add_subcommand("check", "run the good-cone checker on a cone spec");
  check->add_option("path", path, "cone spec JSON file")->required();

  auto* edges_cmd = app.add_subcommand("edges", "print the edge frames of a cone");
  edges_cmd->add_option("path", path, "cone spec JSON file")->required();
  edges_cmd->add_flag("--json", as_json, "emit JSON instead of a table");

  auto* index_cmd = app.add_subcommand("index", "index multiplicities over a lattice box");
  index_cmd->add_option("path", path, "cone spec JSON file")->required();
  index_cmd->add_option("--box", [&box_lo, &box_hi](const std::vector<std::string>& vals) {
               box_lo = std::stoll(vals.at(0));
               box_hi = std::stoll(vals.at(1));
               return true;
             }, "inclusive bounds a b, applied to every coordinate")
      ->expected(2);
  index_cmd->add_option("--eps-seed", eps_seed, "seed for the polarizing vector");
  index_cmd->add_option("--method", method, "both | localized | lattice");
  index_cmd->add_option("--twist", twist_path, "per-edge twist weights JSON file");

  auto* verify = app.add_subcommand("verify", "exhaustive localized-vs-lattice verification");
  verify->add_option("path", path, "cone spec JSON file")->required();
  verify->add_option("--box", [&box_lo, &box_hi](const std::vector<std::string>& vals) {
            box_lo = std::stoll(vals.at(0));
            box_hi = std::stoll(vals.at(1));
            return true;
          }, "inclusive bounds a b, applied to every coordinate")
      ->expected(2);
  verify->add_option("--seeds", seed_count, "number of polarizing seeds");
  verify->add_flag("--corrupt-sign", corrupt_sign,
                   "negative control: flip one expansion sign before verifying");
  verify->add_flag("--timing", with_timing, "include elapsed_seconds in the report");

  std::string family;
  int dim = 3;
  std::string polytope = "square";
  int n_param = 2;
  long long k_param = 1, m_param = 0;
  auto* example = app.add_subcommand("example", "emit a cone spec from a built-in family");
  example->add_option("family", family, "orthant | delzant | N")->required();
  example->add_option("--dim", dim, "ambient dimension (orthant)");
  example->add_option("--polytope", polytope, "square | simplex (delzant)");
  example->add_option("--n", n_param, "N family parameter n >= 2");
  example->add_option("--k", k_param, "N family parameter k >= 1");
  example->add_option("--m", m_param, "N family parameter 0 <= m < k*n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : toric::cli::kExitInputError;
  }

  if (check->parsed()) return toric::cli::cmd_check(path, std::cout, std::cerr);
  if (edges_cmd->parsed()) return toric::cli::cmd_edges(path, as_json, std::cout, std::cerr);
  if (index_cmd->parsed()) {
    std::optional<std::string> twist;
    if (!twist_path.empty()) twist = twist_path;
    return toric::cli::cmd_index(path, box_lo, box_hi, eps_seed, method, twist, std::cout,
                                 std::cerr);
  }
  if (verify->parsed())
    return toric::cli::cmd_verify(path, box_lo, box_hi, seed_count, corrupt_sign, with_timing,
                                  std::cout, std::cerr);
  if (example->parsed())
    return toric::cli::cmd_example(family, dim, polytope, n_param, k_param, m_param, std::cout,
                                   std::cerr);
  return toric::cli::kExitInputError;
}
