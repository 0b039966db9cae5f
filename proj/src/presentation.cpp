#include "racg/presentation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace racg {

PresentationGraph::PresentationGraph(
    std::vector<std::string> generators,
    const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(generators)), adj_(names_.size(), 0) {
  if (names_.empty()) throw std::invalid_argument("empty generator list");
  if (names_.size() > kMaxGenerators)
    throw std::invalid_argument("too many generators (max 64)");
  for (const auto& [u, v] : edges) {
    Gen a = index_of(u), b = index_of(v);
    if (a < 0) throw std::invalid_argument("unknown vertex in edge: " + u);
    if (b < 0) throw std::invalid_argument("unknown vertex in edge: " + v);
    if (a == b) throw std::invalid_argument("self-loop edge: " + u);
    adj_[a] |= gen_bit(b);
    adj_[b] |= gen_bit(a);
  }
}

Gen PresentationGraph::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

bool PresentationGraph::is_clique(GenSet c) const {
  for (Gen a : set_to_vec(c)) {
    GenSet rest = c & ~gen_bit(a);
    if ((adj_[a] & rest) != rest) return false;
  }
  return true;
}

GenSet PresentationGraph::link(GenSet a) const {
  if ((a & ~all()) != 0)
    throw std::invalid_argument("link argument not a subset of S");
  GenSet r = all();
  for (Gen g : set_to_vec(a)) r &= adj_[g];
  return r & ~a;  // empty a: intersection over nothing = S, and ~0 keeps it
}

std::vector<Gen> set_to_vec(GenSet s) {
  std::vector<Gen> v;
  for (Gen g = 0; s; ++g, s >>= 1)
    if (s & 1) v.push_back(g);
  return v;
}

std::string set_to_string(const PresentationGraph& g, GenSet s) {
  std::string out = "{";
  bool first = true;
  for (Gen x : set_to_vec(s)) {
    if (!first) out += ",";
    out += g.name(x);
    first = false;
  }
  return out + "}";
}

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'')
      return false;
  return true;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

PresentationGraph parse_native(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<std::string> gens;
  std::vector<std::pair<std::string, std::string>> edges;
  bool saw_vertices = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] == "vertices") {
      if (saw_vertices) throw ParseError(lineno, "duplicate vertices line");
      saw_vertices = true;
      for (size_t i = 1; i < toks.size(); ++i) {
        if (!valid_name(toks[i]))
          throw ParseError(lineno, "malformed vertex name '" + toks[i] + "'");
        if (std::find(gens.begin(), gens.end(), toks[i]) != gens.end())
          throw ParseError(lineno, "duplicate vertex '" + toks[i] + "'");
        gens.push_back(toks[i]);
      }
      if (gens.empty()) throw ParseError(lineno, "empty generator list");
    } else if (toks[0] == "edges") {
      if (!saw_vertices) throw ParseError(lineno, "edges before vertices");
      for (size_t i = 1; i < toks.size(); ++i) {
        auto dash = toks[i].find('-');
        if (dash == std::string::npos)
          throw ParseError(lineno, "malformed edge token '" + toks[i] + "'");
        std::string u = toks[i].substr(0, dash), v = toks[i].substr(dash + 1);
        if (!valid_name(u) || !valid_name(v))
          throw ParseError(lineno, "malformed edge token '" + toks[i] + "'");
        if (u == v) throw ParseError(lineno, "self-loop edge '" + toks[i] + "'");
        if (std::find(gens.begin(), gens.end(), u) == gens.end())
          throw ParseError(lineno, "unknown vertex '" + u + "' in edge");
        if (std::find(gens.begin(), gens.end(), v) == gens.end())
          throw ParseError(lineno, "unknown vertex '" + v + "' in edge");
        edges.emplace_back(u, v);
      }
    } else {
      throw ParseError(lineno, "malformed token '" + toks[0] + "'");
    }
  }
  if (!saw_vertices) throw ParseError(lineno, "missing vertices line");
  return PresentationGraph(gens, edges);
}

// Minimal undirected DOT subset: graph { a; a -- b; ... }
PresentationGraph parse_dot(const std::string& text) {
  auto open = text.find('{');
  auto close = text.rfind('}');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError(1, "malformed dot graph braces");
  std::string body = text.substr(open + 1, close - open - 1);
  std::vector<std::string> gens;
  std::vector<std::pair<std::string, std::string>> edges;
  std::istringstream in(body);
  std::string stmt;
  auto declare = [&](const std::string& n) {
    if (std::find(gens.begin(), gens.end(), n) == gens.end()) gens.push_back(n);
  };
  while (std::getline(in, stmt, ';')) {
    // strip whitespace
    std::string s;
    for (char c : stmt)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) continue;
    auto sep = s.find("--");
    if (sep == std::string::npos) {
      if (!valid_name(s)) throw ParseError(1, "malformed dot statement '" + s + "'");
      declare(s);
    } else {
      std::string u = s.substr(0, sep), v = s.substr(sep + 2);
      if (!valid_name(u) || !valid_name(v))
        throw ParseError(1, "malformed dot edge '" + s + "'");
      if (u == v) throw ParseError(1, "self-loop edge '" + s + "'");
      declare(u);
      declare(v);
      edges.emplace_back(u, v);
    }
  }
  if (gens.empty()) throw ParseError(1, "empty generator list");
  return PresentationGraph(gens, edges);
}

}  // namespace

PresentationGraph parse_presentation(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') {
      if (c == '#') break;
      continue;
    }
    if (c == 'g' && text.find("graph", text.find('g')) != std::string::npos &&
        text.find('{') != std::string::npos)
      return parse_dot(text);
    break;
  }
  return parse_native(text);
}

PresentationGraph load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string export_dot(const PresentationGraph& g) {
  std::string out = "graph {\n";
  for (int i = 0; i < g.size(); ++i) out += "  " + g.name(i) + ";\n";
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (g.commutes(i, j)) out += "  " + g.name(i) + " -- " + g.name(j) + ";\n";
  return out + "}\n";
}

std::string to_string(EndsClass e) {
  switch (e) {
    case EndsClass::finite: return "finite";
    case EndsClass::two_ended: return "two_ended";
    case EndsClass::infinite_ended: return "infinite_ended";
    case EndsClass::one_ended: return "one_ended";
  }
  return "?";
}

std::optional<SeparatorWitness> is_separating(const PresentationGraph& g, GenSet c) {
  if ((c & ~g.all()) != 0) throw std::invalid_argument("cut not a subset of S");
  GenSet rest = g.all() & ~c;
  if (rest == 0) return std::nullopt;
  std::vector<GenSet> comps;
  GenSet seen = 0;
  for (Gen start : set_to_vec(rest)) {
    if (gen_in(seen, start)) continue;
    GenSet comp = gen_bit(start);
    GenSet frontier = comp;
    while (frontier) {
      GenSet next = 0;
      for (Gen v : set_to_vec(frontier)) next |= g.neighbors(v) & rest & ~comp;
      comp |= next;
      frontier = next;
    }
    comps.push_back(comp);
    seen |= comp;
  }
  if (comps.size() < 2) return std::nullopt;
  return SeparatorWitness{c, std::move(comps)};
}

std::optional<SeparatorWitness> find_clique_separator(const PresentationGraph& g) {
  const int n = g.size();
  // by clique size, then lexicographic (smaller bitmask value = earlier
  // generators = lexicographically first under declaration order)
  for (int k = 0; k <= n; ++k) {
    std::optional<SeparatorWitness> best;
    for (GenSet c = 0; c <= g.all(); ++c) {
      if (std::popcount(c) != k) continue;
      if (!g.is_clique(c)) continue;
      if (auto w = is_separating(g, c)) {
        if (!best || c < best->cut) best = w;
      }
      if (c == g.all()) break;  // avoid wrap when all() is max
    }
    if (best) return best;
  }
  return std::nullopt;
}

EndsClass ends_class(const PresentationGraph& g) {
  if (g.is_clique(g.all())) return EndsClass::finite;
  // two-ended: S = {s,t} u K, m(s,t)=inf, K a clique adjacent to both
  for (int s = 0; s < g.size(); ++s) {
    for (int t = s + 1; t < g.size(); ++t) {
      if (g.commutes(s, t)) continue;
      GenSet k = g.all() & ~gen_bit(s) & ~gen_bit(t);
      if (!g.is_clique(k)) continue;
      if ((g.neighbors(s) & k) == k && (g.neighbors(t) & k) == k)
        return EndsClass::two_ended;
    }
  }
  if (find_clique_separator(g)) return EndsClass::infinite_ended;
  return EndsClass::one_ended;
}

namespace {

// Recursive lexicographic-first search for k disjoint Z2*Z2 pairs with full
// adjacency between distinct pairs.
bool z2z2_search(const PresentationGraph& g, int k, GenSet used,
                 std::vector<std::pair<Gen, Gen>>& acc) {
  if (static_cast<int>(acc.size()) == k) return true;
  for (int u = 0; u < g.size(); ++u) {
    if (gen_in(used, u)) continue;
    for (int v = u + 1; v < g.size(); ++v) {
      if (gen_in(used, v)) continue;
      if (g.commutes(u, v)) continue;
      bool ok = true;
      for (auto& [a, b] : acc)
        if (!g.commutes(u, a) || !g.commutes(u, b) || !g.commutes(v, a) ||
            !g.commutes(v, b)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      acc.emplace_back(u, v);
      if (z2z2_search(g, k, used | gen_bit(u) | gen_bit(v), acc)) return true;
      acc.pop_back();
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::pair<Gen, Gen>>> find_visual_z2z2_power(
    const PresentationGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::vector<std::pair<Gen, Gen>> acc;
  if (z2z2_search(g, k, 0, acc)) return acc;
  return std::nullopt;
}

std::optional<std::pair<Gen, Gen>> find_dihedral_factor(const PresentationGraph& g) {
  for (int s = 0; s < g.size(); ++s)
    for (int t = s + 1; t < g.size(); ++t) {
      if (g.commutes(s, t)) continue;
      GenSet rest = g.all() & ~gen_bit(s) & ~gen_bit(t);
      if ((g.neighbors(s) & rest) == rest && (g.neighbors(t) & rest) == rest)
        return std::make_pair(s, t);
    }
  return std::nullopt;
}

namespace {

std::optional<VfsWitness> vfs_check(const PresentationGraph& g, GenSet c, GenSet d) {
  if ((d & ~c) != 0) return std::nullopt;
  GenSet k = c & ~d;
  if (!g.is_clique(k)) return std::nullopt;  // <C-D> finite
  for (Gen x : set_to_vec(k))
    if ((g.neighbors(x) & d) != d) return std::nullopt;  // commutes with <D>
  if (!is_separating(g, c)) return std::nullopt;
  // s,t in S-D, m(s,t)=inf, {s,t} commutes with D
  for (int s = 0; s < g.size(); ++s) {
    if (gen_in(d, s)) continue;
    if ((g.neighbors(s) & d) != d) continue;
    for (int t = s + 1; t < g.size(); ++t) {
      if (gen_in(d, t)) continue;
      if (g.commutes(s, t)) continue;
      if ((g.neighbors(t) & d) != d) continue;
      VfsWitness w;
      w.c = c;
      w.d = d;
      w.s = s;
      w.t = t;
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<VfsWitness> find_virtual_factor_separator(const PresentationGraph& g) {
  const int n = g.size();
  if (n <= 16) {
    // exhaustive over (C, D subset C), lexicographically first
    std::optional<VfsWitness> best;
    for (GenSet c = 0; c <= g.all(); ++c) {
      for (GenSet d = c;; d = (d - 1) & c) {
        if (auto w = vfs_check(g, c, d)) {
          if (!best || std::make_tuple(w->c, w->d, w->s, w->t) <
                           std::make_tuple(best->c, best->d, best->s, best->t))
            best = w;
        }
        if (d == 0) break;
      }
      if (c == g.all()) break;
    }
    return best;
  }
  // pruned search: pairs (s,t), D subset lk(s)&lk(t), cliques K in lk(D)-D-{s,t}
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.commutes(s, t)) continue;
      GenSet dcand = g.neighbors(s) & g.neighbors(t);
      auto dv = set_to_vec(dcand);
      for (GenSet dsub = 0;; dsub = (dsub + 1)) {
        GenSet d = 0;
        for (size_t i = 0; i < dv.size(); ++i)
          if ((dsub >> i) & 1) d |= gen_bit(dv[i]);
        GenSet kcand = g.link(d) & ~d & ~gen_bit(s) & ~gen_bit(t);
        auto kv = set_to_vec(kcand);
        for (GenSet ksub = 0;; ++ksub) {
          GenSet k = 0;
          for (size_t i = 0; i < kv.size(); ++i)
            if ((ksub >> i) & 1) k |= gen_bit(kv[i]);
          if (g.is_clique(k)) {
            if (auto w = vfs_check(g, d | k, d)) {
              w->exhaustive = false;
              return w;
            }
          }
          if (ksub + 1 >= (GenSet{1} << kv.size())) break;
        }
        if (dsub + 1 >= (GenSet{1} << dv.size())) break;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Gen, Gen>> find_mr_nonlocal_witness(const PresentationGraph& g) {
  for (int v = 0; v < g.size(); ++v)
    for (int w = v + 1; w < g.size(); ++w) {
      if (g.commutes(v, w)) continue;
      GenSet cut = g.neighbors(v) & g.neighbors(w);
      if (auto sep = is_separating(g, cut)) {
        // at least one separated vertex other than v and w
        GenSet others = g.all() & ~cut & ~gen_bit(v) & ~gen_bit(w);
        if (others != 0) return std::make_pair(v, w);
      }
    }
  return std::nullopt;
}

}  // namespace racg
