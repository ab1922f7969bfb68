#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "bqa/endo.hpp"
#include "bqa/errors.hpp"
#include "bqa/homological.hpp"
#include "bqa/io.hpp"
#include "bqa/nakayama.hpp"
#include "bqa/repr.hpp"
#include "bqa/verify.hpp"

using namespace bqa;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t k = 0; k < vs.size(); ++k) s += (k ? ", " : "") + std::to_string(vs[k] + 1);
  return s + "}";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void print_check(const MonomialAlgebra& a) {
  std::cout << format_algebra(a) << "dimension: " << a.dimension() << '\n'
            << "shape: " << to_string(shape_classify(a.quiver())) << '\n'
            << "canonical form: " << canonical_form(a) << '\n';
}

void print_coresolution(const MonomialAlgebra& a, std::size_t terms) {
  const Coresolution c = injective_coresolution(a, terms);
  for (std::size_t k = 0; k < c.terms.size(); ++k) {
    std::cout << "I_" << k << " =";
    bool any = false;
    for (Vertex v = 0; v < c.multiplicity[k].size(); ++v) {
      if (c.multiplicity[k][v] == 0) continue;
      std::cout << (any ? " +" : "") << " I" << v + 1;
      if (c.multiplicity[k][v] > 1) std::cout << "^" << c.multiplicity[k][v];
      any = true;
    }
    if (!any) std::cout << " 0";
    const bool projective = homological_status(a, c.terms[k]).is_projective;
    std::cout << "  dims " << dims_string(c.terms[k].dims) << (projective ? "  projective" : "") << '\n';
    std::cout << "  cokernel dims " << dims_string(c.cokernels[k].dims) << '\n';
  }
  std::cout << (c.terminated ? "terminated" : "truncated at " + std::to_string(c.truncated_at)) << '\n';
}

void print_kupisch(const MonomialAlgebra& a) {
  if (auto ks = algebra_to_kupisch(a))
    std::cout << "nakayama: true\nkupisch: " << to_string(canonical_rotation(*ks)) << '\n';
  else
    std::cout << "nakayama: false\n";
}

void print_endo(const std::string& kupisch, const std::string& summands) {
  const auto b = kupisch_to_algebra(parse_kupisch(kupisch));
  const auto m = parse_summands(b, summands);
  const BasicAlgebra c = endomorphism_algebra(b, m);
  const Quiver g = gabriel_quiver(c);
  std::cout << "dimension: " << c.dimension() << '\n' << "gabriel quiver arrows:";
  for (const auto& ar : g.arrows()) std::cout << ' ' << ar.source + 1 << "->" << ar.target + 1;
  std::cout << '\n' << "nakayama: " << yes_no(is_nakayama_algebra(c)) << '\n'
            << "qf2: " << yes_no(is_qf2_algebra(c)) << '\n';
  if (auto ks = kupisch_of_endo(c)) {
    std::cout << "kupisch: " << to_string(*ks) << '\n'
              << "domdim: " << dominant_dimension(kupisch_to_algebra(*ks)).str() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound quiver algebra workbench: dominant dimension, Nakayama and QF-2 structure"};
  app.require_subcommand(1);

  std::string file;
  std::size_t cutoff = kDefaultDomDimCutoff;
  std::size_t terms = 3;
  std::string side = "both";
  std::string kupisch, summands;

  auto* check = app.add_subcommand("check", "Parse an algebra file and print its basic data");
  check->add_option("file", file, "algebra file")->required();
  auto* domdim = app.add_subcommand("domdim", "Dominant dimension");
  domdim->add_option("file", file, "algebra file")->required();
  domdim->add_option("--cutoff", cutoff, "coresolution length cutoff")->check(CLI::PositiveNumber);
  auto* coresolve = app.add_subcommand("coresolve", "Minimal injective coresolution of the regular module");
  coresolve->add_option("file", file, "algebra file")->required();
  coresolve->add_option("--terms", terms, "number of terms")->check(CLI::PositiveNumber);
  auto* nakayama = app.add_subcommand("nakayama", "Nakayama test and Kupisch series");
  nakayama->add_option("file", file, "algebra file")->required();
  auto* qf2 = app.add_subcommand("qf2", "QF-2 test");
  qf2->add_option("file", file, "algebra file")->required();
  qf2->add_option("--side", side, "right, left or both")->check(CLI::IsMember({"right", "left", "both"}));
  auto* base = app.add_subcommand("base", "Minimal faithful projective-injective module and base algebra");
  base->add_option("file", file, "algebra file")->required();
  auto* dc = app.add_subcommand("dc", "Double centraliser check");
  dc->add_option("file", file, "algebra file")->required();
  auto* endo = app.add_subcommand("endo", "Endomorphism algebra of a module over a Nakayama algebra");
  endo->add_option("--kupisch", kupisch, "e.g. linear:2,2,1 or cyclic:3,2")->required();
  endo->add_option("--summands", summands, "e.g. \"P1 P2 I3/s top=2,len=1\"")->required();

  VerifyOptions vo;
  vo.workers = std::max(1u, std::thread::hardware_concurrency());
  std::string suite_name, report_path, csv_path;
  bool timing = false;
  double budget = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive check over a bounded corpus");
  verify_cmd->add_option("suite", suite_name, "main-theorem, cross-checks, qf2-chain, yamagata or morita")
      ->required()
      ->check(CLI::IsMember({"main-theorem", "cross-checks", "qf2-chain", "yamagata", "morita"}));
  verify_cmd->add_option("--max-vertices", vo.bounds.max_vertices)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-arrows", vo.bounds.max_arrows);
  verify_cmd->add_option("--max-rel-len", vo.bounds.max_relation_length)->check(CLI::Range(2, 64));
  verify_cmd->add_option("--max-n", vo.max_n)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-c", vo.max_c)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--workers", vo.workers)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--budget", budget, "stop after this many seconds (report is marked incomplete)");
  verify_cmd->add_option("--cutoff", vo.domdim_cutoff)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--report", report_path, "write the JSON report here");
  verify_cmd->add_option("--csv", csv_path, "write a CSV summary here");
  verify_cmd->add_flag("--timing", timing, "include wall time in the report");
  verify_cmd->add_flag("--seedless", "accepted for compatibility; runs never use randomness");
  bool json = false;
  auto* paper = app.add_subcommand("paper-example", "Reproduce the five-vertex example");
  paper->add_flag("--json", json, "print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) {
      print_check(read_algebra_file(file));
    } else if (*domdim) {
      std::cout << dominant_dimension(read_algebra_file(file), cutoff).str() << '\n';
    } else if (*coresolve) {
      print_coresolution(read_algebra_file(file), terms);
    } else if (*nakayama) {
      print_kupisch(read_algebra_file(file));
    } else if (*qf2) {
      const auto a = read_algebra_file(file);
      const Sides s = side == "right" ? Sides::Right : side == "left" ? Sides::Left : Sides::Both;
      std::cout << yes_no(is_qf2(a, s)) << '\n';
    } else if (*base) {
      const auto a = read_algebra_file(file);
      const auto right = minimal_faithful_proj_inj(a, Side::Right);
      const auto left = minimal_faithful_proj_inj(a, Side::Left);
      if (!right || !left) throw DomDimZero("no faithful projective-injective module");
      const BasicAlgebra f = base_algebra(a);
      std::cout << "faithful projective-injective (right): " << vertex_list(*right) << '\n'
                << "faithful projective-injective (left): " << vertex_list(*left) << '\n'
                << "base algebra: " << describe_components(f) << " (dimension " << f.dimension() << ")\n"
                << "nakayama: " << yes_no(is_nakayama_algebra(f)) << '\n';
    } else if (*dc) {
      const auto r = double_centralizer_check(read_algebra_file(file));
      std::cout << "holds: " << yes_no(r.holds) << '\n';
      if (r.dim_algebra) std::cout << "dim A: " << *r.dim_algebra << '\n';
      if (r.dim_endomorphisms) std::cout << "dim End(Af): " << *r.dim_endomorphisms << '\n';
    } else if (*endo) {
      print_endo(kupisch, summands);
    } else if (*verify_cmd) {
      if (budget > 0) vo.budget_seconds = budget;
      const auto report = verify(*parse_suite(suite_name), vo);
      const std::string text = report.to_json(timing);
      if (report_path.empty())
        std::cout << text;
      else
        write_file_atomically(report_path, text);
      if (!csv_path.empty()) write_file_atomically(csv_path, report.to_csv());
      std::cerr << suite_name << ": " << (report.passed() ? "pass" : "FAIL") << " ("
                << report.counterexamples.size() << " counterexamples"
                << (report.complete ? "" : ", incomplete") << ")\n";
      return report.passed() ? 0 : kExitCounterexample;
    } else if (*paper) {
      const auto s = paper_example();
      std::cout << (json ? s.to_json() : s.to_text());
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
