#include "bqa/nakayama.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bqa/errors.hpp"

namespace bqa {

bool is_valid(const KupischSeries& ks) {
  const auto& c = ks.lengths;
  const std::size_t n = c.size();
  if (n == 0) return false;
  if (ks.shape == KupischShape::Linear) {
    if (c[n - 1] != 1) return false;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (c[i] < 2 || c[i] > c[i + 1] + 1) return false;
    return true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i] < 2) return false;
    if (c[(i + 1) % n] + 1 < c[i]) return false;
  }
  return true;
}

KupischSeries canonical_rotation(const KupischSeries& ks) {
  if (ks.shape == KupischShape::Linear) return ks;
  KupischSeries best = ks;
  KupischSeries cur = ks;
  for (std::size_t r = 1; r < ks.size(); ++r) {
    std::rotate(cur.lengths.begin(), cur.lengths.begin() + 1, cur.lengths.end());
    if (cur.lengths > best.lengths) best = cur;
  }
  return best;
}

bool same_up_to_rotation(const KupischSeries& a, const KupischSeries& b) {
  return canonical_rotation(a) == canonical_rotation(b);
}

KupischSeries parse_kupisch(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw SyntaxError("kupisch series needs 'linear:' or 'cyclic:' prefix");
  std::string head = text.substr(0, colon);
  head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
  KupischSeries ks;
  if (head == "linear")
    ks.shape = KupischShape::Linear;
  else if (head == "cyclic")
    ks.shape = KupischShape::Cyclic;
  else
    throw SyntaxError("unknown kupisch shape '" + head + "'");
  std::stringstream ss(text.substr(colon + 1));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
      throw SyntaxError("bad kupisch length '" + tok + "'");
    const auto v = std::stoul(tok);
    if (v == 0) throw SyntaxError("kupisch lengths must be positive");
    ks.lengths.push_back(v);
  }
  if (ks.lengths.empty()) throw SyntaxError("empty kupisch series");
  if (!is_valid(ks)) throw InvalidKupisch(to_string(ks) + " violates the admissibility conditions");
  return ks;
}

std::string to_string(const KupischSeries& ks) {
  std::string s = ks.shape == KupischShape::Linear ? "linear:" : "cyclic:";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ks.lengths[i]);
  }
  return s;
}

MonomialAlgebra kupisch_to_algebra(const KupischSeries& ks) {
  if (!is_valid(ks)) throw InvalidKupisch(to_string(ks) + " violates the admissibility conditions");
  const std::size_t n = ks.size();
  const bool cyclic = ks.shape == KupischShape::Cyclic;
  Quiver q(n);
  const std::size_t arrows = cyclic ? n : n - 1;
  for (std::size_t i = 0; i < arrows; ++i) q.add_arrow("a" + std::to_string(i + 1), i, (i + 1) % n);

  std::vector<Path> rels;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t len = ks.lengths[i];
    // The only path of length c_i from i must vanish; on a line it may not exist.
    if (!cyclic && i + len > n - 1) continue;
    Path p{i, (i + len) % n, {}};
    for (std::size_t k = 0; k < len; ++k) p.arrows.push_back((i + k) % n);
    rels.push_back(std::move(p));
  }
  return MonomialAlgebra::build(std::move(q), std::move(rels));
}

std::optional<KupischSeries> algebra_to_kupisch(const MonomialAlgebra& a) {
  const Quiver& q = a.quiver();
  const Shape shape = shape_classify(q);
  if (shape.kind == ShapeKind::NotNakayamaShape) return std::nullopt;
  KupischSeries ks;
  ks.shape = shape.kind == ShapeKind::Linear ? KupischShape::Linear : KupischShape::Cyclic;
  Vertex v = 0;
  if (shape.kind == ShapeKind::Linear)
    while (!q.arrows_to(v).empty()) v = q.arrow(q.arrows_to(v).front()).source;
  for (std::size_t k = 0; k < q.vertex_count(); ++k) {
    ks.lengths.push_back(a.paths_from(v).size());
    if (!q.arrows_from(v).empty()) v = q.arrow(q.arrows_from(v).front()).target;
  }
  return canonical_rotation(ks);
}

bool is_selfinjective_kupisch(const KupischSeries& ks) {
  if (ks.shape == KupischShape::Linear) return ks.size() == 1;
  return std::all_of(ks.lengths.begin(), ks.lengths.end(), [&](auto c) { return c == ks.lengths.front(); });
}

std::vector<KupischSeries> enumerate_kupisch(std::size_t max_n, std::size_t max_c) {
  std::vector<KupischSeries> out;
  if (max_n == 0 || max_c == 0) return out;
  for (KupischShape shape : {KupischShape::Linear, KupischShape::Cyclic}) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      // Odometer over c_i in [1, max_c], lexicographic order.
      std::vector<std::size_t> c(n, 1);
      while (true) {
        KupischSeries ks{shape, c};
        if (is_valid(ks) && (shape == KupischShape::Linear || canonical_rotation(ks) == ks)) out.push_back(ks);
        std::size_t pos = n;
        while (pos > 0 && c[pos - 1] == max_c) c[--pos] = 1;
        if (pos == 0) break;
        ++c[pos - 1];
      }
    }
  }
  return out;
}

std::string to_string(const Uniserial& u) {
  return "top=" + std::to_string(u.top + 1) + ",len=" + std::to_string(u.length);
}

void require_nakayama(const MonomialAlgebra& b) {
  if (shape_classify(b.quiver()).kind == ShapeKind::NotNakayamaShape)
    throw NotNakayama("quiver is neither an oriented line nor an oriented cycle");
}

Representation uniserial_module(const MonomialAlgebra& b, const Uniserial& u) {
  const auto& from = b.paths_from(u.top);
  if (u.length == 0 || u.length > from.size())
    throw std::invalid_argument("no uniserial module " + to_string(u));
  const Quiver& q = b.quiver();
  // Over a Nakayama algebra e_top B has exactly one path of each length below
  // c_top; keep those of length < u.length.
  std::vector<std::vector<PathIndex>> basis(q.vertex_count());
  for (PathIndex p : from)
    if (b.path(p).length() < u.length) basis[b.path(p).target].push_back(p);
  Representation m;
  for (const auto& v : basis) m.dims.push_back(v.size());
  for (ArrowIndex arr = 0; arr < q.arrow_count(); ++arr) {
    const auto& x = q.arrow(arr);
    QMatrix mat(m.dims[x.source], m.dims[x.target]);
    for (std::size_t i = 0; i < basis[x.source].size(); ++i) {
      const auto e = b.extend(basis[x.source][i], arr);
      if (!e || b.path(*e).length() >= u.length) continue;
      const auto& tgt = basis[x.target];
      mat(i, static_cast<std::size_t>(std::find(tgt.begin(), tgt.end(), *e) - tgt.begin())) = 1;
    }
    m.maps.push_back(std::move(mat));
  }
  return m;
}

Uniserial projective_uniserial(const MonomialAlgebra& b, Vertex v) { return {v, b.paths_from(v).size()}; }

Uniserial injective_uniserial(const MonomialAlgebra& b, Vertex v) {
  const auto& to = b.paths_to(v);
  PathIndex longest = to.front();
  for (PathIndex p : to)
    if (b.path(p).length() > b.path(longest).length()) longest = p;
  return {b.path(longest).source, to.size()};
}

std::vector<Uniserial> all_uniserials(const MonomialAlgebra& b) {
  require_nakayama(b);
  std::vector<Uniserial> out;
  for (Vertex v = 0; v < b.vertex_count(); ++v)
    for (std::size_t len = 1; len <= b.paths_from(v).size(); ++len) out.push_back({v, len});
  return out;
}

std::vector<Uniserial> mandatory_summands(const MonomialAlgebra& b) {
  require_nakayama(b);
  std::set<Uniserial> s;
  for (Vertex v = 0; v < b.vertex_count(); ++v) {
    s.insert(projective_uniserial(b, v));
    s.insert(injective_uniserial(b, v));
  }
  return {s.begin(), s.end()};
}

std::vector<Uniserial> allowed_summands(const MonomialAlgebra& b) {
  require_nakayama(b);
  std::set<Uniserial> s;
  for (Vertex v = 0; v < b.vertex_count(); ++v) {
    s.insert(projective_uniserial(b, v));
    const Uniserial inj = injective_uniserial(b, v);
    s.insert(inj);
    // I/soc(I) drops the bottom composition factor, keeping the top.
    if (inj.length > 1) s.insert({inj.top, inj.length - 1});
  }
  return {s.begin(), s.end()};
}

std::vector<std::vector<Uniserial>> gen_cogen_candidates(const MonomialAlgebra& b, bool full_universe) {
  const auto universe = full_universe ? all_uniserials(b) : allowed_summands(b);
  const auto mandatory = mandatory_summands(b);
  std::vector<Uniserial> optional;
  for (const auto& u : universe)
    if (!std::binary_search(mandatory.begin(), mandatory.end(), u)) optional.push_back(u);
  if (optional.size() >= 8 * sizeof(std::size_t) - 1)
    throw std::length_error("too many optional summands to enumerate");

  std::vector<std::vector<Uniserial>> out;
  const std::size_t subsets = std::size_t{1} << optional.size();
  out.reserve(subsets);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<Uniserial> m = mandatory;
    for (std::size_t k = 0; k < optional.size(); ++k)
      if (mask >> k & 1) m.push_back(optional[k]);
    std::sort(m.begin(), m.end());
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace bqa
