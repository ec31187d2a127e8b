// Command-line surface: norm estimation, proposition property suites, von
// Neumann inequality trials, and the analytic-vs-group norm comparison. All
// commands emit a JSON report on stdout (or --out FILE); reports are
// byte-identical across runs with identical flags and seeds.
//
// Exit codes: 0 all assertions pass, 1 assertion failure, 2 usage or syntax
// error, 3 resource cap exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "fgn/parser.hpp"
#include "fgn/report.hpp"
#include "fgn/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAssertionFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

void emit(const fgn::Report& rep, const std::string& out_path) {
  std::string text = rep.dump();
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << text;
}

fgn::Complex parse_json_complex(const fgn::Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::runtime_error("matrix entries must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

// File schema: {"mode": "group"|"monoid", "k": K, "level": N,
//               "terms": {"<word>": [[[re,im],...] per row]}}
fgn::Poly load_matrix_poly(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  fgn::Json j = fgn::Json::parse(in);
  std::string mode_str = j.at("mode").get<std::string>();
  if (mode_str != "group" && mode_str != "monoid")
    throw std::runtime_error("mode must be 'group' or 'monoid'");
  fgn::Mode mode = mode_str == "group" ? fgn::Mode::group : fgn::Mode::monoid;
  int k = j.at("k").get<int>();
  int level = j.at("level").get<int>();
  fgn::AlphabetSpec spec{mode, k, 0, 0};
  fgn::Poly p = fgn::zero_poly(spec, level);
  for (const auto& [word_str, rows] : j.at("terms").items()) {
    fgn::Poly wp = fgn::parse_poly(word_str, mode, k);
    if (wp.terms.size() != 1 || std::abs(wp.terms.begin()->second(0, 0) - 1.0) != 0.0)
      throw std::runtime_error("term key '" + word_str + "' must be a plain word");
    if (!rows.is_array() || static_cast<int>(rows.size()) != level)
      throw std::runtime_error("coefficient of '" + word_str + "' must have " +
                               std::to_string(level) + " rows");
    fgn::CMatrix a(level, level);
    for (int r = 0; r < level; ++r) {
      if (static_cast<int>(rows[r].size()) != level)
        throw std::runtime_error("coefficient rows must have length " +
                                 std::to_string(level));
      for (int c = 0; c < level; ++c) a(r, c) = parse_json_complex(rows[r][c]);
    }
    fgn::add_term(p, wp.terms.begin()->first, a);
  }
  return p;
}

int run(int argc, char** argv) {
  CLI::App app{"operator-norm computations in free group and Fock-space algebras"};
  app.require_subcommand(1);

  // norm
  auto* norm_cmd = app.add_subcommand("norm", "estimate the operator norm of a polynomial");
  std::string norm_mode = "group", norm_expr, norm_matrix_file, norm_out;
  int norm_k = 2, norm_radius = 4, norm_level = 1;
  std::uint64_t norm_seed = 1;
  norm_cmd->add_option("--mode", norm_mode, "group or monoid")
      ->check(CLI::IsMember({"group", "monoid"}));
  norm_cmd->add_option("--k", norm_k, "alphabet size")->check(CLI::PositiveNumber);
  norm_cmd->add_option("--radius", norm_radius, "truncation radius L")
      ->check(CLI::NonNegativeNumber);
  norm_cmd->add_option("--level", norm_level, "matrix level n")->check(CLI::PositiveNumber);
  auto* expr_opt = norm_cmd->add_option("--expr", norm_expr, "polynomial expression");
  auto* matrix_opt = norm_cmd->add_option(
      "--matrix-coeffs", norm_matrix_file,
      "JSON file of word -> row-major complex matrix (replaces --expr)");
  expr_opt->excludes(matrix_opt);
  matrix_opt->excludes(expr_opt);
  norm_cmd->add_option("--seed", norm_seed, "power-iteration start seed");
  norm_cmd->add_option("--out", norm_out, "write the report to a file");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a proposition property suite");
  std::string suite, verify_out;
  std::uint64_t verify_seed = 1;
  int verify_instances = 0, verify_radius = 0, verify_level = 0;
  verify_cmd->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"lemma7", "lemma15", "prop1", "prop4", "prop8", "prop9",
                             "prop12", "prop13", "prop14", "prop16", "prop17",
                             "hp-split"}));
  verify_cmd->add_option("--seed", verify_seed, "base seed");
  verify_cmd->add_option("--instances", verify_instances, "instance count (0 = default)");
  verify_cmd->add_option("--radius", verify_radius, "truncation radius (0 = default)");
  verify_cmd->add_option("--level", verify_level, "max matrix level (0 = default)");
  verify_cmd->add_option("--out", verify_out, "write the report to a file");

  // vn
  auto* vn_cmd = app.add_subcommand("vn", "von Neumann inequality trials");
  std::string vn_expr, vn_out;
  int vn_k = 2, vn_dim = 4, vn_trials = 100, vn_radius = 4;
  std::uint64_t vn_seed = 1;
  bool vn_boundary = false;
  vn_cmd->add_option("--expr", vn_expr, "monoid polynomial expression")->required();
  vn_cmd->add_option("--k", vn_k, "number of generators")->check(CLI::PositiveNumber);
  vn_cmd->add_option("--dim", vn_dim, "matrix dimension d")->check(CLI::PositiveNumber);
  vn_cmd->add_option("--trials", vn_trials, "number of sampled tuples")
      ->check(CLI::NonNegativeNumber);
  vn_cmd->add_option("--seed", vn_seed, "base seed");
  vn_cmd->add_flag("--boundary", vn_boundary, "scale certificates to exactly one");
  vn_cmd->add_option("--radius", vn_radius, "radius for the diagnostic norm estimate");
  vn_cmd->add_option("--out", vn_out, "write the report to a file");

  // compare-remark
  auto* cmp_cmd = app.add_subcommand(
      "compare-remark", "compare the Fock-space norm against the group norm");
  std::string cmp_expr, cmp_out;
  int cmp_radius = 8, cmp_k = 2;
  std::uint64_t cmp_seed = 1;
  cmp_cmd->add_option("--expr", cmp_expr, "positive-word group polynomial")->required();
  cmp_cmd->add_option("--k", cmp_k, "alphabet size")->check(CLI::PositiveNumber);
  cmp_cmd->add_option("--radius", cmp_radius, "max truncation radius")
      ->check(CLI::NonNegativeNumber);
  cmp_cmd->add_option("--seed", cmp_seed, "power-iteration start seed");
  cmp_cmd->add_option("--out", cmp_out, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (norm_cmd->parsed()) {
    fgn::Mode mode = norm_mode == "group" ? fgn::Mode::group : fgn::Mode::monoid;
    fgn::Poly p;
    if (!norm_matrix_file.empty()) {
      p = load_matrix_poly(norm_matrix_file);
    } else if (!norm_expr.empty()) {
      p = fgn::parse_poly(norm_expr, mode, norm_k);
      if (norm_level > 1) {
        fgn::Poly amp = fgn::zero_poly(p.alphabet, norm_level);
        for (const auto& [w, a] : p.terms) fgn::add_term(amp, w, a(0, 0));
        p = amp;
      }
    } else {
      std::cerr << "norm: provide --expr or --matrix-coeffs\n";
      return kExitUsage;
    }
    fgn::PowerOptions opts;
    opts.seed = norm_seed;
    fgn::NormEstimate est = fgn::norm_lower_matrix(p, norm_radius, opts);
    fgn::Report rep;
    rep.command = "norm";
    rep.inputs = fgn::Json{{"mode", norm_mode}, {"k", p.alphabet.plain},
                           {"radius", norm_radius}, {"level", p.level},
                           {"expr", norm_expr}, {"matrix_coeffs", norm_matrix_file},
                           {"seed", norm_seed}};
    rep.outputs = fgn::Json{{"estimate", fgn::estimate_json(est, true)},
                            {"triangle_bound", est.triangle}};
    emit(rep, norm_out);
    return kExitPass;
  }

  if (verify_cmd->parsed()) {
    fgn::Report rep = fgn::verify::run_suite(suite, verify_seed, verify_instances,
                                             verify_radius, verify_level);
    emit(rep, verify_out);
    return rep.pass() ? kExitPass : kExitAssertionFailure;
  }

  if (vn_cmd->parsed()) {
    fgn::Poly p = fgn::parse_poly(vn_expr, fgn::Mode::monoid, vn_k);
    fgn::Report rep = fgn::verify::vn_report(
        p, vn_expr, vn_k, vn_dim, vn_trials, vn_seed,
        vn_boundary ? fgn::SampleMode::boundary : fgn::SampleMode::strict, vn_radius);
    emit(rep, vn_out);
    return rep.pass() ? kExitPass : kExitAssertionFailure;
  }

  if (cmp_cmd->parsed()) {
    fgn::Poly p = fgn::parse_poly(cmp_expr, fgn::Mode::group, cmp_k);
    fgn::Report rep = fgn::verify::compare_remark_report(p, cmp_expr, cmp_radius, cmp_seed);
    emit(rep, cmp_out);
    return rep.pass() ? kExitPass : kExitAssertionFailure;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fgn::BallCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const fgn::ParseError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
