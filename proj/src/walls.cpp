#include "racg/walls.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace racg {

namespace {

int element_distance(const PresentationGraph& g, const GroupElement& a,
                     const GroupElement& b) {
  return multiply(g, inverse(g, a), b).length();
}

// Positions j <= max(targets) that must precede some target under the
// dependence order (chains of non-commuting labels), targets included.
std::vector<int> closure_positions(const PresentationGraph& g, const Word& gamma,
                                   const std::vector<int>& targets) {
  std::vector<char> needed(gamma.size(), 0);
  for (int t : targets) {
    if (t < 0 || t >= static_cast<int>(gamma.size()))
      throw std::out_of_range("shortest_hitting_walls: edge index out of range");
    needed[t] = 1;
  }
  for (int i = static_cast<int>(gamma.size()) - 1; i >= 0; --i) {
    if (!needed[i]) continue;
    for (int j = 0; j < i; ++j)
      if (!needed[j] && (gamma[j] == gamma[i] || !g.commutes(gamma[j], gamma[i])))
        needed[j] = 1;
  }
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(gamma.size()); ++i)
    if (needed[i]) out.push_back(i);
  return out;
}

Word word_at_positions(const Word& gamma, const std::vector<int>& positions) {
  Word out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(gamma[p]);
  return out;
}

}  // namespace

Wall wall_of(const PresentationGraph& g, const EdgeRef& e) {
  if (e.label < 0 || e.label >= g.size())
    throw std::invalid_argument("wall_of: label is not a generator");
  Word w = e.base.word();
  w.push_back(e.label);
  const Word& b = e.base.word();
  for (auto it = b.rbegin(); it != b.rend(); ++it) w.push_back(*it);
  return Wall{normal_form(g, w)};
}

bool same_wall(const PresentationGraph& g, const EdgeRef& e1, const EdgeRef& e2) {
  return wall_of(g, e1) == wall_of(g, e2);
}

std::vector<Wall> walls_of_path(const PresentationGraph& g,
                                const GroupElement& base, const Word& word) {
  std::vector<Wall> out;
  out.reserve(word.size());
  GroupElement v = base;
  for (Gen s : word) {
    out.push_back(wall_of(g, EdgeRef{v, s}));
    v = append(g, v, s);
  }
  return out;
}

EdgeRef canonical_edge(const PresentationGraph& g, const Wall& w) {
  const Word& v = w.reflection.word();
  GroupElement prefix;
  for (Gen s : v) {
    EdgeRef e{prefix, s};
    if (wall_of(g, e) == w) return e;
    prefix = append(g, prefix, s);
  }
  throw std::invalid_argument("canonical_edge: element is not a reflection");
}

Gen wall_label(const PresentationGraph& g, const Wall& w) {
  return canonical_edge(g, w).label;
}

bool walls_cross(const PresentationGraph& g, const Wall& w1, const Wall& w2,
                 int radius) {
  if (w1 == w2) throw std::invalid_argument("walls_cross: walls are equal");
  std::unordered_set<GroupElement, ElementHash> seen;
  std::vector<GroupElement> frontier;
  for (const Wall& w : {w1, w2}) {
    GroupElement b = canonical_edge(g, w).base;
    if (seen.insert(b).second) frontier.push_back(b);
  }
  std::vector<GroupElement> vertices = frontier;
  for (int step = 0; step < radius && !frontier.empty(); ++step) {
    std::vector<GroupElement> next;
    for (const GroupElement& v : frontier)
      for (Gen s = 0; s < g.size(); ++s) {
        GroupElement u = append(g, v, s);
        if (seen.insert(u).second) {
          next.push_back(u);
          vertices.push_back(u);
        }
      }
    frontier = std::move(next);
  }
  for (const GroupElement& v : vertices)
    for (Gen s = 0; s < g.size(); ++s)
      for (Gen t = s + 1; t < g.size(); ++t) {
        if (!g.commutes(s, t)) continue;
        Wall ws = wall_of(g, EdgeRef{v, s});
        Wall wt = wall_of(g, EdgeRef{v, t});
        if ((ws == w1 && wt == w2) || (ws == w2 && wt == w1)) return true;
      }
  return false;
}

Word shortest_hitting_walls(const PresentationGraph& g, const Word& gamma,
                            const std::vector<int>& targets) {
  if (!is_geodesic(g, gamma))
    throw std::invalid_argument("shortest_hitting_walls: word is not geodesic");
  return word_at_positions(gamma, closure_positions(g, gamma, targets));
}

namespace {

struct LabeledEdge {
  Gen letter;
  Wall wall;
};

std::vector<LabeledEdge> annotate(const PresentationGraph& g,
                                  const GroupElement& base, const Word& w) {
  std::vector<Wall> walls = walls_of_path(g, base, w);
  std::vector<LabeledEdge> out(w.size());
  for (size_t i = 0; i < w.size(); ++i) out[i] = {w[i], walls[i]};
  return out;
}

// Commutation-moves the edges whose walls lie in `shared` to the front,
// preserving their relative order. Throws if a required swap is blocked.
std::pair<Word, Word> pull_front(const PresentationGraph& g,
                                 std::vector<LabeledEdge> edges,
                                 const std::set<Wall>& shared) {
  size_t done = 0;
  while (true) {
    size_t idx = done;
    while (idx < edges.size() && !shared.count(edges[idx].wall)) ++idx;
    if (idx == edges.size()) break;
    for (size_t k = idx; k > done; --k) {
      if (!g.commutes(edges[k - 1].letter, edges[k].letter))
        throw std::runtime_error("diamond: shared wall blocked from the prefix");
      std::swap(edges[k - 1], edges[k]);
    }
    ++done;
  }
  Word head, tail;
  for (size_t i = 0; i < edges.size(); ++i)
    (i < done ? head : tail).push_back(edges[i].letter);
  return {head, tail};
}

std::pair<Word, Word> pull_back(const PresentationGraph& g,
                                std::vector<LabeledEdge> edges,
                                const std::set<Wall>& shared) {
  size_t cut = edges.size();
  while (true) {
    size_t idx = cut;
    while (idx > 0 && !shared.count(edges[idx - 1].wall)) --idx;
    if (idx == 0) break;
    for (size_t k = idx - 1; k + 1 < cut; ++k) {
      if (!g.commutes(edges[k].letter, edges[k + 1].letter))
        throw std::runtime_error("diamond: shared wall blocked from the suffix");
      std::swap(edges[k], edges[k + 1]);
    }
    --cut;
  }
  Word head, tail;
  for (size_t i = 0; i < edges.size(); ++i)
    (i < cut ? head : tail).push_back(edges[i].letter);
  return {head, tail};
}

GroupElement push_word(const PresentationGraph& g, const GroupElement& base,
                       const Word& w) {
  GroupElement v = base;
  for (Gen s : w) v = append(g, v, s);
  return v;
}

std::set<Wall> wall_set(const std::vector<Wall>& walls) {
  return std::set<Wall>(walls.begin(), walls.end());
}

std::set<Wall> intersect(const std::set<Wall>& a, const std::set<Wall>& b) {
  std::set<Wall> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
  return out;
}

}  // namespace

Diamond diamond(const PresentationGraph& g, const std::pair<Word, Word>& p1,
                const std::pair<Word, Word>& p2, const GroupElement& base) {
  const Word &a1 = p1.first, &a2 = p1.second;
  const Word &b1 = p2.first, &b2 = p2.second;
  if (a1.size() != b1.size())
    throw std::invalid_argument("diamond: lower halves have different lengths");
  Word full1 = a1, full2 = b1;
  full1.insert(full1.end(), a2.begin(), a2.end());
  full2.insert(full2.end(), b2.begin(), b2.end());
  if (!is_geodesic(g, full1) || !is_geodesic(g, full2))
    throw std::invalid_argument("diamond: input is not geodesic");
  if (push_word(g, base, full1) != push_word(g, base, full2))
    throw std::invalid_argument("diamond: endpoints differ");

  auto edgesA1 = annotate(g, base, a1);
  auto edgesB1 = annotate(g, base, b1);
  std::set<Wall> lowA, lowB;
  for (const auto& e : edgesA1) lowA.insert(e.wall);
  for (const auto& e : edgesB1) lowB.insert(e.wall);
  std::set<Wall> sharedLow = intersect(lowA, lowB);

  auto [g1a, t1raw] = pull_front(g, edgesA1, sharedLow);
  auto [g1b, d1raw] = pull_front(g, edgesB1, sharedLow);
  GroupElement y = push_word(g, base, a1);
  GroupElement yb = push_word(g, base, b1);
  if (normal_form(g, g1a) != normal_form(g, g1b))
    throw std::runtime_error("diamond: shared prefixes disagree");

  auto edgesA2 = annotate(g, y, a2);
  auto edgesB2 = annotate(g, yb, b2);
  std::set<Wall> upA, upB;
  for (const auto& e : edgesA2) upA.insert(e.wall);
  for (const auto& e : edgesB2) upB.insert(e.wall);
  std::set<Wall> sharedUp = intersect(upA, upB);

  auto [d2raw, g2a] = pull_back(g, edgesA2, sharedUp);
  auto [t2raw, g2b] = pull_back(g, edgesB2, sharedUp);
  if (normal_form(g, g2a) != normal_form(g, g2b))
    throw std::runtime_error("diamond: shared suffixes disagree");

  Diamond d;
  d.gamma1 = normal_form(g, g1a).word();
  d.gamma2 = normal_form(g, g2a).word();
  GroupElement tau = normal_form(g, t1raw);
  GroupElement delta = normal_form(g, d1raw);
  if (normal_form(g, t2raw) != tau || normal_form(g, d2raw) != delta)
    throw std::runtime_error("diamond: opposite sides have different labelings");
  d.tau1 = tau.word();
  d.tau2 = tau.word();
  d.delta1 = delta.word();
  d.delta2 = delta.word();
  d.anchor = y;

  GenSet lt = lett(d.tau1), ld = lett(d.delta1);
  if (lt & ld)
    throw std::runtime_error("diamond: tau and delta letters are not disjoint");
  for (Gen s = 0; s < g.size(); ++s)
    for (Gen t = 0; t < g.size(); ++t)
      if (gen_in(lt, s) && gen_in(ld, t) && !g.commutes(s, t))
        throw std::runtime_error("diamond: tau and delta letters do not commute");
  Word cross(d.tau1.rbegin(), d.tau1.rend());
  cross.insert(cross.end(), d.delta1.begin(), d.delta1.end());
  if (!is_geodesic(g, cross))
    throw std::runtime_error("diamond: (tau1^-1, delta1) is not geodesic");
  return d;
}

Word BackCombing::concatenation() const {
  Word out;
  for (const Word& seg : segments) out.insert(out.end(), seg.begin(), seg.end());
  return out;
}

BackCombing back_combing(const PresentationGraph& g, const GroupElement& from,
                         const GroupElement& to) {
  BackCombing bc;
  GroupElement u = multiply(g, inverse(g, to), from);  // to^-1 * from
  while (!u.is_identity()) {
    GenSet b = back_set(g, u);
    Word seg = set_to_vec(b);
    for (Gen s : seg) {
      GroupElement next = append(g, u, s);
      if (next.length() >= u.length())
        throw std::logic_error("back_combing: back set letter failed to shorten");
      u = next;
    }
    bc.segments.push_back(std::move(seg));
  }
  return bc;
}

namespace {

// One tracked direction during the five-step reduction: the defining edge
// position on the combing geodesic and its dependence closure.
struct TrackedDir {
  int pos;
  std::vector<int> cls;
};

bool in_closure(const TrackedDir& d, int pos) {
  return std::binary_search(d.cls.begin(), d.cls.end(), pos);
}

}  // namespace

DirectionSet reduce_directions(const PresentationGraph& g, const GroupElement& x,
                               const GroupElement& star, const ThresholdConfig& cfg) {
  if (auto z = find_visual_z2z2_power(g, 3))
    throw HypothesisViolation("presentation contains a visual (Z2*Z2)^3");
  if (element_distance(g, x, star) <= cfg.far)
    throw std::invalid_argument("reduce_directions: base is too close to the target");

  BackCombing comb = back_combing(g, x, star);
  const auto& segs = comb.segments;
  if (static_cast<int>(segs.size()) <= cfg.r0)
    throw std::invalid_argument("reduce_directions: combing shorter than R0+1 segments");
  Word gamma = comb.concatenation();
  std::vector<int> seg_start(segs.size() + 1, 0);
  for (size_t i = 0; i < segs.size(); ++i)
    seg_start[i + 1] = seg_start[i] + static_cast<int>(segs[i].size());

  auto track = [&](int pos) {
    return TrackedDir{pos, closure_positions(g, gamma, {pos})};
  };

  // Initial directions: one per edge of segment R0+1 (alpha_{R0+1}).
  std::vector<TrackedDir> dirs;
  for (int p = seg_start[cfg.r0]; p < seg_start[cfg.r0 + 1]; ++p)
    dirs.push_back(track(p));

  int r = cfg.r0;
  while (r >= 1 && dirs.size() > 1) {
    int lo = seg_start[r - 1], hi = seg_start[r];  // edges of alpha_R
    int best_i = -1, best_j = -1, best_a = -1;
    for (size_t i = 0; i < dirs.size() && best_i < 0; ++i)
      for (size_t j = i + 1; j < dirs.size() && best_i < 0; ++j)
        for (int a = lo; a < hi; ++a)
          if (in_closure(dirs[i], a) && in_closure(dirs[j], a)) {
            best_i = static_cast<int>(i);
            best_j = static_cast<int>(j);
            best_a = a;
            break;
          }
    if (best_i < 0) break;
    dirs[best_i] = track(best_a);
    dirs.erase(dirs.begin() + best_j);
    for (size_t l = 0; l < dirs.size(); ++l) {
      if (static_cast<int>(l) == best_i) continue;
      int b = -1;
      for (int a = lo; a < hi; ++a)
        if (in_closure(dirs[l], a)) {
          b = a;
          break;
        }
      if (b < 0)
        throw std::logic_error("reduce_directions: direction misses a combing segment");
      dirs[l] = track(b);
    }
    // Equal defining positions mean equal final walls; keep the first.
    std::vector<TrackedDir> dedup;
    for (const auto& d : dirs) {
      bool dup = false;
      for (const auto& kept : dedup) dup = dup || kept.pos == d.pos;
      if (!dup) dedup.push_back(d);
    }
    dirs = std::move(dedup);
    --r;
  }
  if (dirs.size() > 2)
    throw std::logic_error("reduce_directions: more than two directions survived");

  DirectionSet out;
  out.base = x;
  out.star = star;
  out.cfg = cfg;
  for (const auto& d : dirs)
    out.dirs.push_back(word_at_positions(gamma, d.cls));

  // Merge rule: two survivors sharing two walls with non-commuting labels
  // collapse to a single direction through a shared second-segment wall.
  if (out.dirs.size() == 2) {
    auto w1 = wall_set(walls_of_path(g, x, out.dirs[0]));
    auto w2 = wall_set(walls_of_path(g, x, out.dirs[1]));
    std::set<Wall> shared = intersect(w1, w2);
    bool unrelated = false;
    for (auto it = shared.begin(); it != shared.end() && !unrelated; ++it)
      for (auto jt = std::next(it); jt != shared.end() && !unrelated; ++jt)
        unrelated = !g.commutes(wall_label(g, *it), wall_label(g, *jt));
    if (unrelated) {
      GroupElement end1 = push_word(g, x, out.dirs[0]);
      BackCombing comb2 = back_combing(g, x, end1);
      if (comb2.segments.size() < 2)
        throw std::logic_error("reduce_directions: merge combing too short");
      Word gamma2 = comb2.concatenation();
      std::vector<Wall> walls2 = walls_of_path(g, x, gamma2);
      int lo2 = static_cast<int>(comb2.segments[0].size());
      int hi2 = lo2 + static_cast<int>(comb2.segments[1].size());
      int apos = -1;
      for (int p = lo2; p < hi2 && apos < 0; ++p)
        if (shared.count(walls2[p])) apos = p;
      if (apos < 0)
        throw std::logic_error("reduce_directions: no shared wall in second segment");
      Word merged = shortest_hitting_walls(g, gamma2, {apos});
      out.dirs = {merged};
    }
  }
  return out;
}

DirectionSet propagate_direction(const PresentationGraph& g, const DirectionSet& ds,
                                 Gen ell, const Word& context) {
  if (!is_geodesic(g, context) || push_word(g, ds.star, context) != ds.base)
    throw std::invalid_argument("propagate_direction: context does not reach the base");
  Word extended = context;
  extended.push_back(ell);
  if (!is_geodesic(g, extended))
    throw std::invalid_argument("propagate_direction: (context, ell) is not geodesic");
  GroupElement v = append(g, ds.base, ell);

  DirectionSet out;
  out.base = v;
  out.star = ds.star;
  out.cfg = ds.cfg;

  bool single = ds.dirs.size() == 1 ||
                (ds.dirs.size() == 2 && ds.dirs[0] == ds.dirs[1]);
  if (ds.dirs.empty())
    throw std::invalid_argument("propagate_direction: empty direction set");

  if (single) {
    const Word& u = ds.dirs[0];
    bool commutes_all = true;
    for (Gen s : u) commutes_all = commutes_all && g.commutes(ell, s);
    if (commutes_all) {
      out.dirs = {u};  // case (1): same labeling, re-based at v
    } else {
      Word w;  // case (2): prepend ell (an involution, so ell^-1 = ell)
      w.push_back(ell);
      w.insert(w.end(), u.begin(), u.end());
      if (!is_geodesic(g, w))
        throw std::runtime_error("propagate_direction: prepended direction not geodesic");
      out.dirs = {w};
    }
    return out;
  }

  // Case (3): rebuild at the new vertex and associate by shared-wall count.
  DirectionSet rebuilt = reduce_directions(g, v, ds.star, ds.cfg);
  if (rebuilt.dirs.size() == 1) {
    out.dirs = rebuilt.dirs;
    return out;
  }
  std::vector<std::set<Wall>> old_walls, new_walls;
  for (const Word& u : ds.dirs) old_walls.push_back(wall_set(walls_of_path(g, ds.base, u)));
  for (const Word& u : rebuilt.dirs) new_walls.push_back(wall_set(walls_of_path(g, v, u)));
  std::vector<int> match(new_walls.size(), -1);
  for (size_t i = 0; i < new_walls.size(); ++i) {
    for (size_t j = 0; j < old_walls.size(); ++j) {
      int common = static_cast<int>(intersect(new_walls[i], old_walls[j]).size());
      if (common >= ds.cfg.assoc) {
        if (match[i] != -1)
          throw AmbiguousAssociation(
              "propagate_direction: direction matches both predecessors");
        match[i] = static_cast<int>(j);
      }
    }
    if (match[i] == -1)
      throw AmbiguousAssociation(
          "propagate_direction: direction matches no predecessor");
  }
  if (match[0] == match[1])
    throw AmbiguousAssociation(
        "propagate_direction: both directions match the same predecessor");
  out.dirs.resize(2);
  out.dirs[match[0]] = rebuilt.dirs[0];
  out.dirs[match[1]] = rebuilt.dirs[1];
  return out;
}

}  // namespace racg
