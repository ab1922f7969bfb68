// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.
//
// BQA_ACCEPTANCE_BUDGET overrides the per-sweep wall-clock budget (seconds)
// for the corpus criteria; the default is the 10 minute runtime target.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "bqa/endo.hpp"
#include "bqa/enumerate.hpp"
#include "bqa/homological.hpp"
#include "bqa/nakayama.hpp"
#include "bqa/verify.hpp"

using namespace bqa;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fixed(double x) {
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << x;
  return s.str();
}

std::size_t count_or_zero(const VerificationReport& r, const std::string& key) {
  auto it = r.counts.find(key);
  return it == r.counts.end() ? 0 : it->second;
}

std::string sweep_summary(const VerificationReport& r) {
  return "bounds (" + std::to_string(r.bounds.at("max_vertices")) + "," + std::to_string(r.bounds.at("max_arrows")) +
         "," + std::to_string(r.bounds.at("max_relation_length")) + "), " +
         std::to_string(count_or_zero(r, "algebras")) + " algebras checked, " +
         (r.complete ? "complete" : "INCOMPLETE (budget exhausted)") + ", " + fixed(r.wall_seconds) + " s";
}

std::size_t failures_of(const VerificationReport& r, std::initializer_list<const char*> checks) {
  std::size_t n = 0;
  for (const char* c : checks) n += r.failures(c);
  n += r.failures("exception");
  return n;
}

}  // namespace

int main() {
  double budget = 600;
  if (const char* env = std::getenv("BQA_ACCEPTANCE_BUDGET")) budget = std::stod(env);
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());

  {
    const auto t = Clock::now();
    const auto s = paper_example();
    const double dt = seconds_since(t);
    const bool ok = s.domdim == DomDim::finite(1) && !s.nakayama && !s.qf2_right && !s.double_centralizer && dt < 1.0;
    report(1, ok,
           "domdim=" + s.domdim.str() + " nakayama=" + (s.nakayama ? "true" : "false") +
               " qf2_right=" + (s.qf2_right ? "true" : "false") +
               " double_centraliser=" + (s.double_centralizer ? "true" : "false") + " runtime=" + fixed(dt) +
               " s (limit 1 s)");
  }

  VerifyOptions corpus;
  corpus.bounds = {4, 5, 3};
  corpus.workers = workers;
  corpus.budget_seconds = budget;

  const auto main_thm = verify(Suite::MainTheorem, corpus);
  {
    const std::size_t bad = failures_of(main_thm, {"domdim>=2 <=> nakayama shape and domdim>=2"});
    report(2, main_thm.passed(),
           std::to_string(bad) + " counterexamples; " + sweep_summary(main_thm) + "; budget " + fixed(budget) + " s");
  }

  const auto cross = verify(Suite::CrossChecks, corpus);
  {
    const std::size_t a = cross.failures("domdim>=1 <=> minimal faithful projective-injective exists");
    const std::size_t b = cross.failures("domdim>=2 <=> double centraliser");
    const std::size_t c = cross.failures("domdim(A) = domdim(A^op)");
    const std::size_t e = cross.failures("exception");
    report(3, cross.complete && a + b + c + e == 0,
           "(a) " + std::to_string(a) + ", (b) " + std::to_string(b) + ", (c) " + std::to_string(c) +
               " counterexamples; " + sweep_summary(cross));
  }

  const auto qf2 = verify(Suite::Qf2Chain, corpus);
  {
    const std::size_t a = qf2.failures("domdim>=2 => QF-2");
    const std::size_t b = qf2.failures("QF-2 => nakayama shape");
    const std::size_t c = qf2.failures("socle criterion (right) matches socle dimension") +
                          qf2.failures("socle criterion (left) matches socle dimension");
    report(4, qf2.passed(),
           "(a) " + std::to_string(a) + ", (b) " + std::to_string(b) + ", (c) " + std::to_string(c) +
               " counterexamples; " + sweep_summary(qf2));
  }

  {
    const std::size_t bad = failures_of(cross, {"base algebra is Nakayama"});
    report(5, cross.complete && bad == 0,
           std::to_string(bad) + " counterexamples among " + std::to_string(count_or_zero(cross, "checked:base algebra is Nakayama")) +
               " algebras with domdim>=1; " + sweep_summary(cross));
  }

  VerifyOptions naka;
  naka.max_n = 3;
  naka.max_c = 4;
  const auto yam = verify(Suite::Yamagata, naka);
  {
    const std::size_t bic = yam.failures("End(M) Nakayama <=> summands allowed");
    const std::size_t q = yam.failures("End(M) is QF-2");
    const std::size_t other = yam.counterexamples.size() - bic - q - yam.failures("Kupisch sets agree");
    report(6, yam.complete && bic + q + other == 0 && yam.wall_seconds <= 300,
           std::to_string(count_or_zero(yam, "generator_cogenerators")) + " generator-cogenerators over " +
               std::to_string(count_or_zero(yam, "kupisch_series")) + " series (n<=3, c<=4); biconditional " +
               std::to_string(bic) + ", QF-2 " + std::to_string(q) + ", other " + std::to_string(other) +
               " counterexamples; " + fixed(yam.wall_seconds) + " s (limit 300 s)");
  }
  {
    const auto& diff = yam.sets.at("symmetric_difference");
    report(7, yam.complete && diff.empty(),
           std::to_string(yam.sets.at("kupisch_from_endomorphism_rings").size()) +
               " series from End_B(M) vs " + std::to_string(yam.sets.at("kupisch_with_domdim_ge2").size()) +
               " enumerated with domdim>=2 (window n<=3, c<=4); symmetric difference " + std::to_string(diff.size()));
  }

  {
    const auto b = kupisch_to_algebra(parse_kupisch("cyclic:2"));
    const Uniserial p = projective_uniserial(b, 0);
    const auto c = endomorphism_algebra(b, std::vector<Uniserial>{p, {0, p.length - 1}});
    const auto k = kupisch_of_endo(c);
    const KupischSeries expected{KupischShape::Cyclic, {3, 2}};
    const DomDim d = k ? dominant_dimension(kupisch_to_algebra(*k)) : DomDim{};
    const bool ok = k && same_up_to_rotation(*k, expected) && d == DomDim::finite(2);
    report(8, ok, "kupisch=" + (k ? to_string(*k) : std::string("none")) + " domdim=" + d.str());
  }

  {
    const auto m = verify(Suite::Morita, naka);
    report(9, m.passed(),
           std::to_string(count_or_zero(m, "modules")) + " modules over " +
               std::to_string(count_or_zero(m, "selfinjective_series")) + " selfinjective series; " +
               std::to_string(m.counterexamples.size()) + " counterexamples");
  }

  {
    bool roundtrip = true, selfinj = true;
    const auto all = enumerate_kupisch(3, 4);
    for (const auto& ks : all) {
      const auto a = kupisch_to_algebra(ks);
      const auto back = algebra_to_kupisch(a);
      roundtrip = roundtrip && back && same_up_to_rotation(*back, ks);
      selfinj = selfinj && is_selfinjective_kupisch(ks) == is_selfinjective(a);
    }
    std::string listed;
    for (const auto& ks : enumerate_kupisch(2, 3)) listed += (listed.empty() ? "" : " ") + to_string(ks);
    const bool seven = listed == "linear:1 linear:2,1 cyclic:2 cyclic:3 cyclic:2,2 cyclic:3,2 cyclic:3,3";
    const std::size_t tiny = enumerate_monomial_algebras({1, 1, 3}).size();
    report(10, roundtrip && selfinj && seven && tiny == 3,
           std::string("roundtrip ") + (roundtrip ? "ok" : "broken") + " and selfinjectivity " +
               (selfinj ? "agrees" : "disagrees") + " on " + std::to_string(all.size()) +
               " series; enumerate_kupisch(2,3) = [" + listed + "]; corpus (1,1,3) has " + std::to_string(tiny) +
               " algebras");
  }

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
