#include "bqa/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "bqa/endo.hpp"
#include "bqa/errors.hpp"
#include "bqa/io.hpp"
#include "bqa/nakayama.hpp"
#include "bqa/repr.hpp"

namespace bqa {

namespace {

using Clock = std::chrono::steady_clock;

struct Tally {
  std::map<std::string, std::size_t> counts;
  std::vector<Counterexample> counterexamples;
  bool complete = true;

  void count(const std::string& key, std::size_t by = 1) { counts[key] += by; }
  void merge(Tally&& other) {
    for (const auto& [k, v] : other.counts) counts[k] += v;
    std::move(other.counterexamples.begin(), other.counterexamples.end(), std::back_inserter(counterexamples));
    complete = complete && other.complete;
  }
};

struct Interrupted {};

class Deadline {
 public:
  explicit Deadline(std::optional<double> seconds) {
    if (seconds) end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*seconds));
  }
  [[nodiscard]] bool expired() const { return end_ && Clock::now() >= *end_; }

 private:
  std::optional<Clock::time_point> end_;
};

// A single named implication or equivalence evaluated on one object.
void expect(Tally& t, const std::string& check, bool ok, const std::function<std::string()>& label,
            const std::string& detail) {
  t.count("checked:" + check);
  if (!ok) t.counterexamples.push_back({check, label(), detail});
}

std::size_t total(const std::vector<std::size_t>& dims) {
  std::size_t s = 0;
  for (auto d : dims) s += d;
  return s;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string shape_bucket(ShapeKind k) {
  switch (k) {
    case ShapeKind::Linear: return "shape:linear";
    case ShapeKind::Cyclic: return "shape:cyclic";
    case ShapeKind::NotNakayamaShape: break;
  }
  return "shape:other";
}

using AlgebraCheck = std::function<void(const MonomialAlgebra&, Tally&)>;

// Runs `check` on every corpus algebra. Work is partitioned by quiver; slots
// are merged in quiver order, so the result does not depend on scheduling.
Tally run_corpus(const VerifyOptions& o, const AlgebraCheck& check) {
  o.bounds.validate();
  const auto quivers = enumerate_quivers(o.bounds.max_vertices, o.bounds.max_arrows);
  std::vector<Tally> slots(quivers.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  const Deadline deadline(o.budget_seconds);

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next++;
      if (i >= quivers.size()) return;
      Tally& t = slots[i];
      if (stop) {
        t.complete = false;
        continue;
      }
      try {
        enumerate_relation_sets(quivers[i], o.bounds.max_relation_length, [&](std::vector<Path> rels) {
          if (stop || deadline.expired()) {
            stop = true;
            throw Interrupted{};
          }
          const auto a = MonomialAlgebra::build(quivers[i], std::move(rels));
          t.count("algebras");
          try {
            check(a, t);
          } catch (const std::exception& e) {
            t.counterexamples.push_back({"exception", canonical_form(a), e.what()});
          }
        });
      } catch (const Interrupted&) {
        t.complete = false;
      }
    }
  };
  const unsigned n = std::max(1u, o.workers);
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  Tally total;
  for (auto& s : slots) total.merge(std::move(s));
  total.count("quivers", quivers.size());
  return total;
}

void check_main_theorem(const VerifyOptions& o, const MonomialAlgebra& a, Tally& t) {
  const DomDim d = dominant_dimension(a, o.domdim_cutoff);
  const ShapeKind shape = shape_classify(a.quiver()).kind;
  const bool nakayama_shape = shape != ShapeKind::NotNakayamaShape;
  t.count(shape_bucket(shape));
  t.count("domdim:" + d.str());
  if (d.reaches(2)) t.count("domdim_ge2");
  const auto label = [&] { return canonical_form(a); };
  expect(t, "domdim>=2 <=> nakayama shape and domdim>=2", d.reaches(2) == (nakayama_shape && d.reaches(2)), label,
         "domdim=" + d.str() + " shape=" + to_string(shape_classify(a.quiver())));
}

void check_cross(const VerifyOptions& o, const MonomialAlgebra& a, Tally& t) {
  const DomDim d = dominant_dimension(a, o.domdim_cutoff);
  const auto label = [&] { return canonical_form(a); };
  t.count("domdim:" + d.str());

  const auto right = minimal_faithful_proj_inj(a, Side::Right);
  const auto left = minimal_faithful_proj_inj(a, Side::Left);
  expect(t, "domdim>=1 <=> minimal faithful projective-injective exists", d.reaches(1) == right.has_value(), label,
         "domdim=" + d.str() + " faithful=" + yes_no(right.has_value()));

  const auto dc = double_centralizer_check(a);
  expect(t, "domdim>=2 <=> double centraliser", d.reaches(2) == dc.holds, label,
         "domdim=" + d.str() + " double_centraliser=" + yes_no(dc.holds));

  const DomDim dop = dominant_dimension(a.opposite(), o.domdim_cutoff);
  const bool same = d == dop || (d.kind != DomDim::Kind::Finite && dop.kind != DomDim::Kind::Finite);
  expect(t, "domdim(A) = domdim(A^op)", same, label, "domdim=" + d.str() + " domdim_op=" + dop.str());

  if (d.reaches(1)) {
    expect(t, "faithful projective-injective exists on both sides", left.has_value(), label,
           "left faithful module missing");
    if (left && right) {
      const auto f = base_algebra(a);
      const bool nak = is_nakayama_algebra(f);
      if (nak) t.count("base_nakayama");
      expect(t, "base algebra is Nakayama", nak, label, "base dimension " + std::to_string(f.dimension()));
      const auto e = idempotent_subalgebra(a, *right);
      expect(t, "dim eAe = dim fAf", e.dimension() == f.dimension(), label,
             "dim eAe=" + std::to_string(e.dimension()) + " dim fAf=" + std::to_string(f.dimension()));
    }
  }
}

void check_qf2_chain(const VerifyOptions& o, const MonomialAlgebra& a, Tally& t) {
  const DomDim d = dominant_dimension(a, o.domdim_cutoff);
  const bool qf2 = is_qf2(a, Sides::Both);
  const ShapeKind shape = shape_classify(a.quiver()).kind;
  const auto label = [&] { return canonical_form(a); };
  if (qf2) t.count("qf2");
  expect(t, "domdim>=2 => QF-2", !d.reaches(2) || qf2, label, "domdim=" + d.str());
  expect(t, "QF-2 => nakayama shape", !qf2 || shape != ShapeKind::NotNakayamaShape, label,
         "shape=" + to_string(shape_classify(a.quiver())));

  const MonomialAlgebra op = a.opposite();
  for (Vertex v = 0; v < a.vertex_count(); ++v) {
    const auto p = standard_module(a, ModuleKind::Projective, v);
    const std::size_t soc = total(socle_dims(a, p));
    expect(t, "socle criterion (right) matches socle dimension", socle_criterion(a, v, Side::Right) == (soc == 1),
           label, "vertex " + std::to_string(v + 1) + " socle dimension " + std::to_string(soc));
    const auto pl = standard_module(op, ModuleKind::Projective, v);
    const std::size_t socl = total(socle_dims(op, pl));
    expect(t, "socle criterion (left) matches socle dimension", socle_criterion(a, v, Side::Left) == (socl == 1),
           label, "vertex " + std::to_string(v + 1) + " socle dimension " + std::to_string(socl));
  }
}

std::string summands_label(const KupischSeries& ks, const std::vector<Uniserial>& m) {
  std::string s = to_string(ks) + " M=";
  for (std::size_t k = 0; k < m.size(); ++k) s += (k ? "+" : "") + std::string("[") + to_string(m[k]) + "]";
  return s;
}

std::vector<std::size_t> positions(const std::vector<Uniserial>& universe, const std::vector<Uniserial>& m) {
  std::vector<std::size_t> out;
  for (const auto& u : m)
    out.push_back(static_cast<std::size_t>(std::find(universe.begin(), universe.end(), u) - universe.begin()));
  return out;
}

VerificationReport run_yamagata(const VerifyOptions& o) {
  if (o.max_n < 1 || o.max_c < 1) throw std::invalid_argument("max_n and max_c must be at least 1");
  const Deadline deadline(o.budget_seconds);
  Tally t;
  std::set<KupischSeries> from_endo;
  std::set<KupischSeries> enumerated;
  const auto series = enumerate_kupisch(o.max_n, o.max_c);
  for (const auto& ks : series) {
    if (deadline.expired()) {
      t.complete = false;
      break;
    }
    const auto b = kupisch_to_algebra(ks);
    t.count("kupisch_series");
    if (dominant_dimension(b, o.domdim_cutoff).reaches(2)) enumerated.insert(canonical_rotation(ks));

    const auto universe = all_uniserials(b);
    const auto allowed = allowed_summands(b);
    const BasicAlgebra full = endomorphism_algebra(b, universe);
    for (const auto& m : gen_cogen_candidates(b, true)) {
      const auto label = [&] { return summands_label(ks, m); };
      const BasicAlgebra c = full.corner(positions(universe, m));
      const bool all_allowed = std::all_of(m.begin(), m.end(), [&](const Uniserial& u) {
        return std::binary_search(allowed.begin(), allowed.end(), u);
      });
      const bool nak = is_nakayama_algebra(c);
      t.count("generator_cogenerators");
      if (all_allowed) t.count("allowed");
      if (nak) t.count("nakayama_endomorphism_rings");
      expect(t, "End(M) Nakayama <=> summands allowed", nak == all_allowed, label,
             "nakayama=" + yes_no(nak) + " allowed=" + yes_no(all_allowed));
      expect(t, "End(M) is QF-2", is_qf2_algebra(c, Sides::Both), label, "");
      if (!nak) continue;
      const auto k = kupisch_of_endo(c);
      expect(t, "End(M) has a Kupisch series", k.has_value(), label, "");
      if (!k) continue;
      const DomDim d = dominant_dimension(kupisch_to_algebra(*k), o.domdim_cutoff);
      expect(t, "Nakayama End(M) has domdim>=2", d.reaches(2), label, to_string(*k) + " domdim=" + d.str());
      if (k->size() <= o.max_n &&
          std::all_of(k->lengths.begin(), k->lengths.end(), [&](std::size_t c_i) { return c_i <= o.max_c; }))
        from_endo.insert(*k);
    }
  }

  VerificationReport r;
  r.counts = std::move(t.counts);
  r.counterexamples = std::move(t.counterexamples);
  r.complete = t.complete;
  for (const auto& k : from_endo) r.sets["kupisch_from_endomorphism_rings"].push_back(to_string(k));
  for (const auto& k : enumerated) r.sets["kupisch_with_domdim_ge2"].push_back(to_string(k));
  std::vector<KupischSeries> diff;
  std::set_symmetric_difference(from_endo.begin(), from_endo.end(), enumerated.begin(), enumerated.end(),
                                std::back_inserter(diff));
  auto& names = r.sets["symmetric_difference"];
  for (const auto& k : diff) {
    names.push_back(to_string(k));
    r.counterexamples.push_back({"Kupisch sets agree", to_string(k),
                                 from_endo.count(k) ? "only from endomorphism rings" : "only among domdim>=2"});
  }
  r.counts["checked:Kupisch sets agree"] = 1;
  return r;
}

VerificationReport run_morita(const VerifyOptions& o) {
  if (o.max_n < 1 || o.max_c < 1) throw std::invalid_argument("max_n and max_c must be at least 1");
  Tally t;
  for (const auto& ks : enumerate_kupisch(o.max_n, o.max_c)) {
    if (!is_selfinjective_kupisch(ks)) continue;
    t.count("selfinjective_series");
    const auto b = kupisch_to_algebra(ks);
    std::vector<Uniserial> base;
    std::vector<Uniserial> extra;
    for (Vertex v = 0; v < b.vertex_count(); ++v) {
      const Uniserial p = projective_uniserial(b, v);
      base.push_back(p);
      if (p.length > 1) extra.push_back({p.top, p.length - 1});
    }
    std::sort(extra.begin(), extra.end());
    extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
    for (std::size_t mask = 0; mask < (std::size_t{1} << extra.size()); ++mask) {
      std::vector<Uniserial> m = base;
      for (std::size_t k = 0; k < extra.size(); ++k)
        if (mask >> k & 1) m.push_back(extra[k]);
      std::sort(m.begin(), m.end());
      const auto label = [&] { return summands_label(ks, m); };
      t.count("modules");
      const BasicAlgebra c = endomorphism_algebra(b, m);
      const bool nak = is_nakayama_algebra(c);
      expect(t, "End(M) is Nakayama", nak, label, "");
      if (!nak) continue;
      const auto k = kupisch_of_endo(c);
      expect(t, "End(M) has a Kupisch series", k.has_value(), label, "");
      if (!k) continue;
      const auto a = kupisch_to_algebra(*k);
      const DomDim d = dominant_dimension(a, o.domdim_cutoff);
      expect(t, "domdim End(M) >= 2", d.reaches(2), label, to_string(*k) + " domdim=" + d.str());
      if (!d.reaches(1)) continue;
      expect(t, "base algebra is selfinjective", is_selfinjective(base_algebra(a)), label, to_string(*k));
    }
  }
  VerificationReport r;
  r.counts = std::move(t.counts);
  r.counterexamples = std::move(t.counterexamples);
  r.complete = t.complete;
  return r;
}

}  // namespace

std::optional<Suite> parse_suite(const std::string& name) {
  for (Suite s : {Suite::MainTheorem, Suite::CrossChecks, Suite::Qf2Chain, Suite::Yamagata, Suite::Morita})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::MainTheorem: return "main-theorem";
    case Suite::CrossChecks: return "cross-checks";
    case Suite::Qf2Chain: return "qf2-chain";
    case Suite::Yamagata: return "yamagata";
    case Suite::Morita: break;
  }
  return "morita";
}

std::size_t VerificationReport::failures(const std::string& check) const {
  return static_cast<std::size_t>(std::count_if(counterexamples.begin(), counterexamples.end(),
                                                [&](const Counterexample& c) { return c.check == check; }));
}

std::string VerificationReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["bounds"] = bounds;
  j["counts"] = counts;
  j["complete"] = complete;
  j["passed"] = passed();
  j["tool_version"] = kToolVersion;
  j["sets"] = sets;
  auto& cex = j["counterexamples"] = nlohmann::json::array();
  for (const auto& c : counterexamples) cex.push_back({{"check", c.check}, {"algebra", c.algebra}, {"detail", c.detail}});
  if (with_timing) j["wall_seconds"] = wall_seconds;
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "check,checked,counterexamples\n";
  for (const auto& [key, n] : counts) {
    if (key.rfind("checked:", 0) != 0) continue;
    const std::string check = key.substr(8);
    out << '"' << check << "\"," << n << ',' << failures(check) << '\n';
  }
  return out.str();
}

VerificationReport verify(Suite suite, const VerifyOptions& options) {
  const auto start = Clock::now();
  VerificationReport r;
  if (suite == Suite::Yamagata) {
    r = run_yamagata(options);
  } else if (suite == Suite::Morita) {
    r = run_morita(options);
  } else {
    AlgebraCheck check;
    if (suite == Suite::MainTheorem)
      check = [&](const MonomialAlgebra& a, Tally& t) { check_main_theorem(options, a, t); };
    else if (suite == Suite::CrossChecks)
      check = [&](const MonomialAlgebra& a, Tally& t) { check_cross(options, a, t); };
    else
      check = [&](const MonomialAlgebra& a, Tally& t) { check_qf2_chain(options, a, t); };
    Tally t = run_corpus(options, check);
    r.counts = std::move(t.counts);
    r.counterexamples = std::move(t.counterexamples);
    r.complete = t.complete;
  }
  r.suite = to_string(suite);
  if (suite == Suite::Yamagata || suite == Suite::Morita) {
    r.bounds = {{"max_c", options.max_c}, {"max_n", options.max_n}};
  } else {
    r.bounds = {{"max_arrows", options.bounds.max_arrows},
                {"max_relation_length", options.bounds.max_relation_length},
                {"max_vertices", options.bounds.max_vertices}};
  }
  r.bounds["domdim_cutoff"] = options.domdim_cutoff;
  std::sort(r.counterexamples.begin(), r.counterexamples.end());
  r.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

void write_file_atomically(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + tmp + "'");
    f << content;
    if (!f.flush()) throw std::runtime_error("cannot write '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path);
}

namespace {

std::string vertex_set(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t k = 0; k < vs.size(); ++k) s += (k ? ", " : "") + std::to_string(vs[k] + 1);
  return s + "}";
}

}  // namespace

PaperExampleSummary paper_example() {
  const MonomialAlgebra a = paper_example_algebra();
  PaperExampleSummary s;
  s.domdim = dominant_dimension(a);
  s.nakayama = shape_classify(a.quiver()).kind != ShapeKind::NotNakayamaShape;
  s.qf2_right = is_qf2(a, Sides::Right);
  s.qf2_both = is_qf2(a, Sides::Both);
  s.faithful_right = minimal_faithful_proj_inj(a, Side::Right).value_or(std::vector<Vertex>{});
  s.faithful_left = minimal_faithful_proj_inj(a, Side::Left).value_or(std::vector<Vertex>{});
  if (s.domdim.reaches(1)) {
    const BasicAlgebra f = base_algebra(a);
    s.base_dimension = f.dimension();
    s.base_description = describe_components(f);
  }
  s.double_centralizer = double_centralizer_check(a).holds;
  return s;
}

std::string PaperExampleSummary::to_text() const {
  std::ostringstream out;
  out << "domdim: " << domdim.str() << '\n'
      << "nakayama: " << yes_no(nakayama) << '\n'
      << "qf2 (right): " << yes_no(qf2_right) << '\n'
      << "qf2 (both): " << yes_no(qf2_both) << '\n'
      << "minimal faithful projective-injective (right): " << vertex_set(faithful_right) << '\n'
      << "minimal faithful projective-injective (left): " << vertex_set(faithful_left) << '\n'
      << "base algebra: " << base_description << " (dimension " << base_dimension << ")\n"
      << "double centraliser: " << yes_no(double_centralizer) << '\n';
  return out.str();
}

std::string PaperExampleSummary::to_json() const {
  auto one_based = [](const std::vector<Vertex>& vs) {
    std::vector<std::size_t> out;
    for (auto v : vs) out.push_back(v + 1);
    return out;
  };
  nlohmann::json j;
  j["domdim"] = domdim.str();
  j["nakayama"] = nakayama;
  j["qf2_right"] = qf2_right;
  j["qf2_both"] = qf2_both;
  j["faithful_right"] = one_based(faithful_right);
  j["faithful_left"] = one_based(faithful_left);
  j["base_dimension"] = base_dimension;
  j["base_algebra"] = base_description;
  j["double_centraliser"] = double_centralizer;
  return j.dump(2) + "\n";
}

}  // namespace bqa
