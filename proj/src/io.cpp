#include "bqa/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "bqa/errors.hpp"

namespace bqa {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (seps.find(c) != std::string::npos) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::optional<std::size_t> parse_natural(std::string_view s) {
  std::size_t v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end || s.empty()) return std::nullopt;
  return v;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw SyntaxError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

MonomialAlgebra parse_algebra(const std::string& text) {
  std::optional<std::size_t> vertices;
  std::vector<std::tuple<std::string, std::size_t, std::size_t, std::size_t>> arrows;  // id, s, t, line
  std::vector<std::pair<std::vector<std::string>, std::size_t>> relations;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail(lineno, "expected 'key: value'");
    const std::string key = trim(std::string_view(line).substr(0, colon));
    const std::string value = trim(std::string_view(line).substr(colon + 1));

    if (key == "vertices") {
      if (vertices) fail(lineno, "duplicate 'vertices'");
      auto n = parse_natural(value);
      if (!n) fail(lineno, "vertex count must be a natural number");
      vertices = *n;
    } else if (key == "arrows") {
      for (const auto& item : split(value, ";")) {
        auto tok = split(item, " \t");
        if (tok.empty()) continue;
        if (tok.size() != 3) fail(lineno, "arrow needs 'id source target', got '" + trim(item) + "'");
        auto s = parse_natural(tok[1]);
        auto t = parse_natural(tok[2]);
        if (!s || !t || *s == 0 || *t == 0) fail(lineno, "arrow endpoints are 1-based vertex numbers");
        arrows.emplace_back(tok[0], *s - 1, *t - 1, lineno);
      }
    } else if (key == "relations") {
      for (const auto& item : split(value, ";")) {
        auto tok = split(item, " \t");
        if (!tok.empty()) relations.emplace_back(std::move(tok), lineno);
      }
    } else {
      fail(lineno, "unknown key '" + key + "'");
    }
  }
  if (!vertices) fail(lineno, "missing 'vertices'");

  Quiver q(*vertices);
  for (const auto& [id, s, t, line] : arrows) {
    if (s >= *vertices || t >= *vertices) fail(line, "arrow '" + id + "' has an endpoint out of range");
    if (q.find_arrow(id)) fail(line, "duplicate arrow id '" + id + "'");
    q.add_arrow(id, s, t);
  }
  std::vector<Path> rels;
  for (const auto& [ids, line] : relations) {
    std::vector<ArrowIndex> word;
    for (const auto& id : ids) {
      auto a = q.find_arrow(id);
      if (!a) fail(line, "unknown arrow '" + id + "'");
      word.push_back(*a);
    }
    auto p = Path::from_arrows(q, word);
    if (!p) throw BadRelation("line " + std::to_string(line) + ": relation is not a path");
    rels.push_back(std::move(*p));
  }
  return MonomialAlgebra::build(std::move(q), std::move(rels));
}

MonomialAlgebra read_algebra_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_algebra(ss.str());
}

std::string format_algebra(const MonomialAlgebra& a) {
  const Quiver& q = a.quiver();
  std::string s = "vertices: " + std::to_string(q.vertex_count()) + "\narrows:";
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& ar = q.arrow(k);
    s += (k ? "; " : " ") + ar.id + " " + std::to_string(ar.source + 1) + " " + std::to_string(ar.target + 1);
  }
  s += "\nrelations:";
  for (std::size_t k = 0; k < a.relations().size(); ++k) s += (k ? "; " : " ") + to_string(q, a.relations()[k]);
  return s + "\n";
}

std::vector<Uniserial> parse_summands(const MonomialAlgebra& b, const std::string& text) {
  require_nakayama(b);
  const std::size_t n = b.vertex_count();
  auto vertex = [&](std::string_view s, const std::string& tok) {
    auto v = parse_natural(s);
    if (!v || *v == 0 || *v > n) throw SyntaxError("bad vertex in summand '" + tok + "'");
    return *v - 1;
  };
  std::vector<Uniserial> out;
  for (const auto& tok : split(text, " \t;+")) {
    if (tok.rfind("top=", 0) == 0) {
      const auto comma = tok.find(",len=");
      if (comma == std::string::npos) throw SyntaxError("expected 'top=<v>,len=<l>' in '" + tok + "'");
      const Vertex v = vertex(std::string_view(tok).substr(4, comma - 4), tok);
      auto len = parse_natural(std::string_view(tok).substr(comma + 5));
      const std::size_t max = projective_uniserial(b, v).length;
      if (!len || *len == 0 || *len > max)
        throw SyntaxError("length in '" + tok + "' must lie in 1.." + std::to_string(max));
      out.push_back({v, *len});
    } else if (tok.size() >= 2 && tok[0] == 'P') {
      out.push_back(projective_uniserial(b, vertex(std::string_view(tok).substr(1), tok)));
    } else if (tok.size() >= 2 && tok[0] == 'I') {
      const bool mod_soc = tok.size() > 3 && tok.substr(tok.size() - 2) == "/s";
      const auto digits = std::string_view(tok).substr(1, tok.size() - 1 - (mod_soc ? 2 : 0));
      Uniserial u = injective_uniserial(b, vertex(digits, tok));
      if (mod_soc) {
        if (u.length == 1) throw SyntaxError("'" + tok + "' is the zero module");
        --u.length;
      }
      out.push_back(u);
    } else {
      throw SyntaxError("unrecognised summand '" + tok + "'");
    }
  }
  if (out.empty()) throw SyntaxError("empty summand list");
  return out;
}

const std::string& paper_example_text() {
  static const std::string text =
      "vertices: 5\n"
      "arrows: a1 1 2; a2 3 2; a3 2 4; a4 2 5\n"
      "relations: a1 a3; a2 a4\n";
  return text;
}

MonomialAlgebra paper_example_algebra() { return parse_algebra(paper_example_text()); }

}  // namespace bqa
