#include "racg/filter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "vendor/json.hpp"

namespace racg {

namespace {
constexpr int kInf = 1 << 29;
}

GammaPath avoid_path(const PresentationGraph& g, Gen s, Gen t, GenSet avoid) {
  if (s < 0 || s >= g.size() || t < 0 || t >= g.size())
    throw std::invalid_argument("avoid_path: endpoint is not a generator");

  if (s == t) {
    for (Gen a = 0; a < g.size(); ++a)
      if (g.commutes(s, a) && a != s && !gen_in(avoid, a))
        return GammaPath{{s, a, s}};
    throw std::runtime_error("avoid_path: no unblocked neighbor (hypotheses violated)");
  }

  // Interior vertices must lie outside avoid and differ from both endpoints.
  auto allowed = [&](Gen v) {
    return !gen_in(avoid, v) && v != s && v != t;
  };
  std::vector<int> dist(g.size(), kInf);  // distance to t through allowed interiors
  std::vector<Gen> queue;
  for (Gen v = 0; v < g.size(); ++v)
    if (allowed(v) && g.commutes(v, t)) {
      dist[v] = 1;
      queue.push_back(v);
    }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Gen v = queue[qi];
    for (Gen u = 0; u < g.size(); ++u)
      if (allowed(u) && g.commutes(u, v) && dist[u] == kInf) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  int best = kInf;
  for (Gen v = 0; v < g.size(); ++v)
    if (g.commutes(s, v) && dist[v] < best) best = dist[v];
  if (best == kInf) {
    if (g.commutes(s, t)) return GammaPath{{s, t, s, t}};
    throw std::runtime_error("avoid_path: avoid set separates (hypotheses violated)");
  }
  // Greedy lexicographic descent: s, then interiors of distance best..1, then t.
  GammaPath path{{s}};
  Gen cur = s;
  for (int rem = best; rem >= 1; --rem)
    for (Gen v = 0; v < g.size(); ++v)
      if (allowed(v) && dist[v] == rem && g.commutes(cur, v)) {
        path.vertices.push_back(v);
        cur = v;
        break;
      }
  path.vertices.push_back(t);
  return path;
}

Fan build_fan(const PresentationGraph& g, const Word& base_geodesic, Gen a,
              Gen b, GenSet avoid) {
  Word wa = base_geodesic, wb = base_geodesic;
  wa.push_back(a);
  wb.push_back(b);
  if (!is_geodesic(g, wa) || !is_geodesic(g, wb))
    throw std::invalid_argument("build_fan: boundary label does not extend geodesically");
  GroupElement base = normal_form(g, base_geodesic);
  GenSet back = back_set(g, base);

  GammaPath p = avoid_path(g, a, b, avoid | back);
  Fan fan;
  fan.base = base;
  fan.left_label = a;
  fan.right_label = b;
  fan.interior_labels.assign(p.vertices.begin() + 1, p.vertices.end() - 1);
  for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    Gen u = p.vertices[i], v = p.vertices[i + 1];
    if (!g.commutes(u, v))
      throw std::logic_error("build_fan: consecutive fan labels do not commute");
    Word check = base_geodesic;
    check.push_back(u);
    check.push_back(v);
    if (!is_geodesic(g, check))
      throw std::logic_error("build_fan: fan loop extension is not geodesic");
    fan.loops.emplace_back(u, v);
  }
  return fan;
}

const char* edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::left_fan: return "left_fan";
    case EdgeKind::right_fan: return "right_fan";
    case EdgeKind::interior: return "interior";
    case EdgeKind::spine_left: return "spine_left";
    case EdgeKind::spine_right: return "spine_right";
  }
  return "?";
}

namespace {

EdgeKind edge_kind_from(const std::string& s) {
  for (EdgeKind k : {EdgeKind::left_fan, EdgeKind::right_fan, EdgeKind::interior,
                     EdgeKind::spine_left, EdgeKind::spine_right})
    if (s == edge_kind_name(k)) return k;
  throw std::invalid_argument("unknown edge kind: " + s);
}

// Can `word` be rearranged (by commutations) to begin with `prefix`?
bool begins_with_rearranged(const PresentationGraph& g, Word word,
                            const Word& prefix) {
  for (Gen s : prefix) {
    bool found = false;
    for (size_t i = 0; i < word.size(); ++i) {
      if (word[i] == s) {
        bool movable = true;
        for (size_t j = 0; j < i; ++j)
          movable = movable && g.commutes(word[j], s);
        if (movable) {
          word.erase(word.begin() + i);
          found = true;
        }
        break;
      }
      if (!g.commutes(word[i], s)) break;
    }
    if (!found) return false;
  }
  return true;
}

struct FilterBuilder {
  const PresentationGraph& g;
  Filter f;
  ThresholdConfig cfg;
  bool directed;
  std::vector<Word> tree_word;                      // per node, from identity
  std::vector<std::optional<DirectionSet>> dir;     // per node

  FilterBuilder(const PresentationGraph& graph, ThresholdConfig c, bool dirStrat)
      : g(graph), cfg(c), directed(dirStrat) {
    f.graph = graph;
  }

  int add_node(int level, const GroupElement& e) {
    int id = static_cast<int>(f.nodes.size());
    f.nodes.push_back({id, level, e});
    tree_word.emplace_back();
    dir.emplace_back();
    return id;
  }

  void add_edge(int from, int to, Gen label, EdgeKind kind, bool tree) {
    f.edges.push_back({from, to, label, kind, tree});
    if (tree) {
      tree_word[to] = tree_word[from];
      tree_word[to].push_back(label);
      if (directed) assign_direction(from, to, label);
    }
  }

  void assign_direction(int parent, int child, Gen label) {
    if (dir[parent]) {
      try {
        dir[child] = propagate_direction(g, *dir[parent], label, tree_word[parent]);
        return;
      } catch (const AmbiguousAssociation&) {
        throw;  // surfaced, never silently resolved
      } catch (const std::exception&) {
        // fall through to a fresh computation
      }
    }
    try {
      dir[child] = reduce_directions(g, f.nodes[child].element, GroupElement(), cfg);
    } catch (const AmbiguousAssociation&) {
      throw;
    } catch (const std::exception&) {
      dir[child].reset();
    }
  }

  // The tracked direction whose letter-link fans at `node` must avoid.
  std::optional<Word> select_direction(int node) {
    if (!dir[node]) return std::nullopt;
    const DirectionSet& ds = *dir[node];
    if (ds.dirs.size() == 1 || ds.dirs[0] == ds.dirs[1]) return ds.dirs[0];
    // Proxy wideness: the down edge path of the diamond between the tree
    // path and the canonical geodesic, split at the shared-prefix level.
    const Word& tw = tree_word[node];
    Word cw = f.nodes[node].element.word();
    if (tw == cw) return ds.dirs[0];
    size_t m = f.shared.size();
    auto split = [&](const Word& w) {
      return std::make_pair(Word(w.begin(), w.begin() + m),
                            Word(w.begin() + m, w.end()));
    };
    Word tau;
    try {
      tau = diamond(g, split(tw), split(cw)).tau1;
    } catch (const std::exception&) {
      return ds.dirs[0];
    }
    if (static_cast<int>(tau.size()) < cfg.wide16) return ds.dirs[0];
    bool w1 = begins_with_rearranged(g, tau, ds.dirs[0]);
    bool w2 = begins_with_rearranged(g, tau, ds.dirs[1]);
    if (w2 && !w1) return ds.dirs[1];
    return ds.dirs[0];
  }

  Gen extend_spine(Word& spine, size_t level, const GroupElement& at) {
    if (level < spine.size()) return spine[level];
    GenSet back = back_set(g, at);
    // Prefer a letter not commuting with the previous spine letter so the
    // new spine wall stays pinned above this vertex; fall back to any
    // geodesic extension.
    Gen prev = spine.empty() ? -1 : spine.back();
    for (int want_rigid = 1; want_rigid >= 0; --want_rigid)
      for (Gen s = 0; s < g.size(); ++s) {
        if (gen_in(back, s)) continue;
        if (want_rigid && prev >= 0 && (s == prev || g.commutes(s, prev))) continue;
        spine.push_back(s);
        return s;
      }
    throw std::runtime_error("build_filter: spine cannot be extended");
  }

  Gen edge_label(int from, int to) const {
    for (const auto& e : f.edges)
      if (e.from == from && e.to == to) return e.label;
    throw std::logic_error("build_filter: missing boundary edge");
  }

  void build(const Word& shared, Word spineL, Word spineR, int depth) {
    f.shared = shared;
    f.depth = depth;
    GroupElement root_el = normal_form(g, shared);
    if (root_el.length() != static_cast<int>(shared.size()))
      throw std::invalid_argument("build_filter: shared prefix is not geodesic");
    f.root = add_node(0, root_el);
    tree_word[f.root] = shared;
    if (directed) {
      try {
        dir[f.root] = reduce_directions(g, root_el, GroupElement(), cfg);
      } catch (const AmbiguousAssociation&) {
        throw;
      } catch (const std::exception&) {
        dir[f.root].reset();
      }
    }

    std::vector<int> frontier{f.root};
    std::vector<int> caps;  // caps[i] sits between frontier[i] and frontier[i+1]

    for (int level = 0; level < depth; ++level) {
      std::vector<int> next_frontier, next_caps;
      int carry_right = -1;  // right boundary child of the previous fan
      for (size_t i = 0; i < frontier.size(); ++i) {
        int base = frontier[i];
        const GroupElement el = f.nodes[base].element;  // copy: add_node reallocates
        GenSet back = back_set(g, el);

        Gen a, b;
        int left_child, right_child = -1;
        if (i == 0) {
          a = extend_spine(spineL, static_cast<size_t>(level), el);
          left_child = add_node(level + 1, append(g, el, a));
          add_edge(base, left_child, a, EdgeKind::spine_left, true);
        } else {
          left_child = caps[i - 1];
          a = edge_label(base, left_child);
        }
        bool right_is_spine = (i + 1 == frontier.size());
        if (right_is_spine) {
          b = extend_spine(spineR, static_cast<size_t>(level), el);
        } else {
          right_child = caps[i];
          b = edge_label(base, right_child);
        }

        GenSet avoid = back;
        if (directed) {
          if (auto A = select_direction(base)) {
            GenSet la = lett(*A);
            if (!g.is_clique(la)) avoid |= g.link(la);
          }
        }
        GammaPath path = avoid_path(g, a, b, avoid);
        const auto& pv = path.vertices;

        // Children in left-to-right order; boundary children may pre-exist.
        std::vector<int> children(pv.size(), -1);
        children.front() = left_child;
        for (size_t j = 1; j + 1 < pv.size(); ++j) {
          children[j] = add_node(level + 1, append(g, el, pv[j]));
          add_edge(base, children[j], pv[j], EdgeKind::interior, true);
        }
        if (right_is_spine) {
          right_child = add_node(level + 1, append(g, el, b));
          add_edge(base, right_child, b, EdgeKind::spine_right, true);
        }
        children.back() = right_child;

        // Fan loops: cap above each consecutive child pair. Fan level is
        // level+1 (fans based at level-n vertices are (n+1)-level fans);
        // odd fan levels mark the upper-left loop edge non-tree, even the
        // upper-right.
        bool left_nontree = ((level + 1) % 2 == 1);
        for (size_t j = 0; j + 1 < pv.size(); ++j) {
          GroupElement cap_el = append(g, append(g, el, pv[j]), pv[j + 1]);
          int cap = add_node(level + 2, cap_el);
          if (left_nontree) {
            add_edge(children[j], cap, pv[j + 1], EdgeKind::right_fan, true);
            add_edge(children[j + 1], cap, pv[j], EdgeKind::left_fan, false);
          } else {
            add_edge(children[j + 1], cap, pv[j], EdgeKind::left_fan, true);
            add_edge(children[j], cap, pv[j + 1], EdgeKind::right_fan, false);
          }
          next_caps.push_back(cap);
        }

        if (i == 0) next_frontier.push_back(children.front());
        for (size_t j = 1; j + 1 < pv.size(); ++j)
          next_frontier.push_back(children[j]);
        next_frontier.push_back(children.back());
        carry_right = children.back();
      }
      (void)carry_right;
      frontier = std::move(next_frontier);
      caps = std::move(next_caps);
    }
    f.spine_left = std::move(spineL);
    f.spine_right = std::move(spineR);
  }
};

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Filter build_filter(const PresentationGraph& g, const Word& spine_left,
                    const Word& spine_right, const Word& shared, int depth,
                    FilterStrategy strategy, std::optional<ThresholdConfig> cfg) {
  if (depth < 1) throw std::invalid_argument("build_filter: depth must be >= 1");
  if (spine_left.empty() || spine_right.empty() ||
      spine_left[0] == spine_right[0])
    throw std::invalid_argument(
        "build_filter: spines must diverge immediately after the shared prefix");
  for (const Word* sp : {&spine_left, &spine_right}) {
    Word w = shared;
    w.insert(w.end(), sp->begin(), sp->end());
    if (!is_geodesic(g, w))
      throw std::invalid_argument("build_filter: spine is not geodesic");
  }
  ThresholdConfig c = cfg ? *cfg : ThresholdConfig::defaults(g.size());
  FilterBuilder b(g, c, strategy == FilterStrategy::directed);
  b.f.strategy = strategy;
  b.build(shared, spine_left, spine_right, depth);
  return std::move(b.f);
}

std::vector<std::vector<int>> filter_walls(const Filter& f) {
  const PresentationGraph& g = f.graph;
  int ne = static_cast<int>(f.edges.size());
  Dsu edge_dsu(ne);
  for (Gen s = 0; s < g.size(); ++s) {
    Dsu nodes(static_cast<int>(f.nodes.size()));
    for (const auto& e : f.edges)
      if (e.label != s && g.commutes(e.label, s)) nodes.unite(e.from, e.to);
    std::map<int, int> rep;  // node component -> first s-edge seen
    for (int i = 0; i < ne; ++i) {
      if (f.edges[i].label != s) continue;
      for (int v : {f.edges[i].from, f.edges[i].to}) {
        int c = nodes.find(v);
        auto [it, fresh] = rep.emplace(c, i);
        if (!fresh) edge_dsu.unite(i, it->second);
      }
    }
  }
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < ne; ++i) classes[edge_dsu.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  out.reserve(classes.size());
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

namespace {

bool is_left_kind(EdgeKind k) {
  return k == EdgeKind::left_fan || k == EdgeKind::spine_left;
}
bool is_right_kind(EdgeKind k) {
  return k == EdgeKind::right_fan || k == EdgeKind::spine_right;
}

std::string node_desc(const Filter& f, int v) {
  std::ostringstream os;
  os << "node " << v << " (level " << f.nodes[v].level << ", "
     << word_to_string(f.graph, f.nodes[v].element.word()) << ")";
  return os.str();
}

// Walks tree paths upward from `start`, skipping `banned_edge`, and checks
// that the first remaining-spine wall class met on any path is `allowed`
// (the wall of the next spine edge) and that no such class is met twice.
bool spine_wall_scan(const Filter& f, const std::vector<std::vector<int>>& above,
                     const std::vector<int>& edge_class,
                     const std::set<int>& spine_classes, int start,
                     int banned_edge, int allowed, std::string& detail) {
  struct Item {
    int node;
    std::vector<int> met;  // remaining-spine classes, in path order
  };
  std::vector<Item> stack{{start, {}}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    for (int ei : above[it.node]) {
      if (ei == banned_edge || !f.edges[ei].tree) continue;
      std::vector<int> met = it.met;
      int c = edge_class[ei];
      if (spine_classes.count(c)) {
        if (std::find(met.begin(), met.end(), c) != met.end()) {
          detail = "path from " + node_desc(f, start) + " through edge " +
                   std::to_string(ei) + " meets a spine wall twice";
          return false;
        }
        met.push_back(c);
        if (met.front() != allowed) {
          detail = "path from " + node_desc(f, start) + " through edge " +
                   std::to_string(ei) +
                   " meets a later spine wall before the next one";
          return false;
        }
      }
      stack.push_back({f.edges[ei].to, std::move(met)});
    }
  }
  return true;
}

}  // namespace

FilterReport check_filter_properties(const Filter& f) {
  FilterReport rep;
  const int n = static_cast<int>(f.nodes.size());
  std::vector<std::vector<int>> above(n), below(n);
  for (int i = 0; i < static_cast<int>(f.edges.size()); ++i) {
    above[f.edges[i].from].push_back(i);
    below[f.edges[i].to].push_back(i);
  }
  auto fail = [&](int prop, const std::string& why) {
    if (rep.properties[prop - 1].ok) rep.properties[prop - 1] = {false, why};
  };

  for (int v = 0; v < n; ++v) {
    bool processed = f.nodes[v].level < f.depth;
    if (processed) {
      int lefts = 0, rights = 0, interiors = 0;
      for (int ei : above[v]) {
        EdgeKind k = f.edges[ei].kind;
        lefts += is_left_kind(k);
        rights += is_right_kind(k);
        interiors += k == EdgeKind::interior;
      }
      if (lefts != 1 || rights != 1 || interiors < 1)
        fail(1, node_desc(f, v) + " lacks a unique complete fan above it");
      bool has_tree_interior = false;
      for (int ei : above[v])
        has_tree_interior |= f.edges[ei].kind == EdgeKind::interior && f.edges[ei].tree;
      if (!has_tree_interior) fail(5, node_desc(f, v) + " is a dead end in the tree");
    }
    if (v != f.root) {
      if (below[v].size() == 1) {
        EdgeKind k = f.edges[below[v][0]].kind;
        if (k != EdgeKind::spine_left && k != EdgeKind::spine_right &&
            k != EdgeKind::interior)
          fail(2, node_desc(f, v) + " has a single lower edge of kind " +
                      edge_kind_name(k));
      } else if (below[v].size() == 2) {
        EdgeKind k0 = f.edges[below[v][0]].kind, k1 = f.edges[below[v][1]].kind;
        bool ok = (k0 == EdgeKind::right_fan && k1 == EdgeKind::left_fan) ||
                  (k0 == EdgeKind::left_fan && k1 == EdgeKind::right_fan);
        const auto& e0 = f.edges[below[v][0]];
        const auto& e1 = f.edges[below[v][1]];
        ok = ok && e0.label != e1.label &&
             f.graph.commutes(e0.label, e1.label) &&
             append(f.graph, f.nodes[e0.from].element, e0.label) ==
                 f.nodes[v].element &&
             append(f.graph, f.nodes[e1.from].element, e1.label) ==
                 f.nodes[v].element;
        if (!ok) fail(3, node_desc(f, v) + " lower edges do not form a fan loop");
      } else {
        fail(1, node_desc(f, v) + " has " + std::to_string(below[v].size()) +
                    " lower edges");
      }
    }
  }

  // Property 4: removing non-tree edges leaves a spanning tree containing
  // the spines and all interior edges.
  {
    int tree_edges = 0;
    Dsu dsu(n);
    for (const auto& e : f.edges) {
      if (e.kind == EdgeKind::interior || e.kind == EdgeKind::spine_left ||
          e.kind == EdgeKind::spine_right) {
        if (!e.tree)
          fail(4, std::string("required ") + edge_kind_name(e.kind) +
                      " edge is marked non-tree");
      }
      if (!e.tree) continue;
      ++tree_edges;
      if (dsu.find(e.from) == dsu.find(e.to))
        fail(4, "tree edges contain a cycle through " + node_desc(f, e.to));
      dsu.unite(e.from, e.to);
    }
    if (tree_edges != n - 1) fail(4, "tree edge count is not nodes-1");
    for (int v = 0; v < n; ++v)
      if (dsu.find(v) != dsu.find(f.root)) {
        fail(4, node_desc(f, v) + " is disconnected from the root in the tree");
        break;
      }
  }

  // Property 6: consecutive off-spine tree edges never repeat a fan side.
  for (int v = 0; v < n; ++v)
    for (int bi : below[v]) {
      if (!f.edges[bi].tree) continue;
      EdgeKind bk = f.edges[bi].kind;
      if (bk != EdgeKind::left_fan && bk != EdgeKind::right_fan) continue;
      for (int ai : above[v])
        if (f.edges[ai].tree && f.edges[ai].kind == bk)
          fail(6, "consecutive " + std::string(edge_kind_name(bk)) +
                      " tree edges at " + node_desc(f, v));
    }

  // Property 7: on any tree path leaving the spine, the first remaining
  // spine wall met is the wall of the next spine edge, and none is met twice.
  {
    auto classes = filter_walls(f);
    std::vector<int> edge_class(f.edges.size(), -1);
    for (int c = 0; c < static_cast<int>(classes.size()); ++c)
      for (int ei : classes[c]) edge_class[ei] = c;
    for (EdgeKind side : {EdgeKind::spine_left, EdgeKind::spine_right}) {
      std::vector<int> spine_edges;  // ordered by level
      int cur = f.root;
      while (true) {
        int next_edge = -1;
        for (int ei : above[cur])
          if (f.edges[ei].kind == side) next_edge = ei;
        if (next_edge < 0) break;
        spine_edges.push_back(next_edge);
        cur = f.edges[next_edge].to;
      }
      for (size_t i = 0; i < spine_edges.size(); ++i) {
        std::set<int> remaining;
        for (size_t j = i; j < spine_edges.size(); ++j)
          remaining.insert(edge_class[spine_edges[j]]);
        std::string why;
        if (!spine_wall_scan(f, above, edge_class, remaining,
                             f.edges[spine_edges[i]].from, spine_edges[i],
                             edge_class[spine_edges[i]], why))
          fail(7, why);
      }
    }
  }
  return rep;
}

std::string export_filter(const Filter& f, const std::string& format) {
  const PresentationGraph& g = f.graph;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["root"] = f.root;
    j["depth"] = f.depth;
    j["strategy"] = f.strategy == FilterStrategy::basic ? "basic" : "directed";
    j["shared"] = word_to_string(g, f.shared);
    j["spine_left"] = word_to_string(g, f.spine_left);
    j["spine_right"] = word_to_string(g, f.spine_right);
    j["nodes"] = nlohmann::ordered_json::array();
    for (const auto& nd : f.nodes)
      j["nodes"].push_back({{"id", nd.id},
                            {"level", nd.level},
                            {"element", word_to_string(g, nd.element.word())}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : f.edges)
      j["edges"].push_back({{"from", e.from},
                            {"to", e.to},
                            {"label", g.name(e.label)},
                            {"kind", edge_kind_name(e.kind)},
                            {"tree", e.tree}});
    return j.dump(2) + "\n";
  }
  if (format == "dot") {
    std::vector<int> level_index(f.nodes.size(), 0);
    std::map<int, int> level_count;
    for (const auto& nd : f.nodes) level_index[nd.id] = level_count[nd.level]++;
    auto name = [&](int id) {
      return "n" + std::to_string(f.nodes[id].level) + "_" +
             std::to_string(level_index[id]);
    };
    std::ostringstream os;
    os << "graph filter {\n";
    for (const auto& nd : f.nodes)
      os << "  " << name(nd.id) << " [label=\""
         << word_to_string(g, nd.element.word()) << "\"];\n";
    for (const auto& e : f.edges) {
      os << "  " << name(e.from) << " -- " << name(e.to) << " [label=\""
         << g.name(e.label) << "\"";
      if (!e.tree) os << ", style=dashed";
      os << "];\n";
    }
    os << "}\n";
    return os.str();
  }
  throw std::invalid_argument("export_filter: unknown format " + format);
}

Filter import_filter(const PresentationGraph& g, const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  Filter f;
  f.graph = g;
  f.root = j.at("root").get<int>();
  f.depth = j.at("depth").get<int>();
  f.strategy = j.at("strategy").get<std::string>() == "directed"
                   ? FilterStrategy::directed
                   : FilterStrategy::basic;
  f.shared = parse_word(g, j.at("shared").get<std::string>());
  f.spine_left = parse_word(g, j.at("spine_left").get<std::string>());
  f.spine_right = parse_word(g, j.at("spine_right").get<std::string>());
  for (const auto& nd : j.at("nodes"))
    f.nodes.push_back(
        {nd.at("id").get<int>(), nd.at("level").get<int>(),
         normal_form(g, parse_word(g, nd.at("element").get<std::string>()))});
  for (const auto& e : j.at("edges"))
    f.edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(),
                       g.index_of(e.at("label").get<std::string>()),
                       edge_kind_from(e.at("kind").get<std::string>()),
                       e.at("tree").get<bool>()});
  return f;
}

}  // namespace racg
