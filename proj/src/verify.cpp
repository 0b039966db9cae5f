#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "racg/classify.hpp"
#include "racg/filter.hpp"
#include "racg/oracle.hpp"
#include "racg/walls.hpp"
#include "racg/words.hpp"
#include "vendor/json.hpp"

namespace racg::oracle {

const std::vector<std::string> kLemmaIds = {
    "sameletters", "deletion",      "finiteback", "radel",   "differentletters",
    "wallprops",   "shortback",     "diamond",    "doublediamond",
    "backprops",   "twodir",        "avoidlink",  "filterprops"};

namespace {

using Rng = std::mt19937;

int walk(const CayleyBall& b, const Word& w) {
  int i = 0;
  for (Gen s : w) {
    i = b.neighbor(i, s);
    if (i < 0) return -1;
  }
  return i;
}

// Random geodesic word from the identity to element i (downward walk,
// reversed), uniform over lower neighbors at each step.
Word random_geodesic(const CayleyBall& b, int i, Rng& rng) {
  Word rev;
  while (b.layer(i) > 0) {
    std::vector<Gen> down;
    for (Gen s = 0; s < b.graph().size(); ++s) {
      int j = b.neighbor(i, s);
      if (j >= 0 && b.layer(j) == b.layer(i) - 1) down.push_back(s);
    }
    Gen s = down[rng() % down.size()];
    rev.push_back(s);
    i = b.neighbor(i, s);
  }
  return Word(rev.rbegin(), rev.rend());
}

void all_geodesics(const CayleyBall& b, int i, std::vector<Word>& out,
                   size_t cap) {
  if (b.layer(i) == 0) {
    out.push_back({});
    return;
  }
  std::vector<Word> shorter;
  for (Gen s = 0; s < b.graph().size() && out.size() < cap; ++s) {
    int j = b.neighbor(i, s);
    if (j < 0 || b.layer(j) != b.layer(i) - 1) continue;
    shorter.clear();
    all_geodesics(b, j, shorter, cap - out.size());
    for (Word& w : shorter) {
      w.push_back(s);
      out.push_back(std::move(w));
    }
  }
}

Word random_word(const PresentationGraph& g, int len, Rng& rng) {
  Word w(len);
  for (int i = 0; i < len; ++i) w[i] = static_cast<Gen>(rng() % g.size());
  return w;
}

std::string show(const PresentationGraph& g, const Word& w) {
  return "[" + word_to_string(g, w) + "]";
}

GenSet back_set_in_ball(const CayleyBall& b, int i) {
  GenSet out = 0;
  for (Gen s = 0; s < b.graph().size(); ++s) {
    int j = b.neighbor(i, s);
    if (j >= 0 && b.layer(j) < b.layer(i)) out |= gen_bit(s);
  }
  return out;
}

// True when removing positions i and j leaves a word for the same element.
bool deletes_to_same(const PresentationGraph& g, const Word& w, size_t i,
                     size_t j) {
  Word cut;
  for (size_t k = 0; k < w.size(); ++k)
    if (k != i && k != j) cut.push_back(w[k]);
  return normal_form(g, cut) == normal_form(g, w);
}

struct Ctx {
  const PresentationGraph& g;
  const VerifyBounds& bounds;
  LemmaReport& rep;
  Rng rng;
  Ctx(const PresentationGraph& g_, const VerifyBounds& b_, LemmaReport& r_)
      : g(g_), bounds(b_), rep(r_), rng(b_.seed) {}
  void fail(const std::string& why) {
    if (rep.failures.size() < 50) rep.failures.push_back(why);
  }
};

void check_sameletters(Ctx& c, const CayleyBall& b) {
  for (int i = 0; i < b.size() && c.rep.instances < c.bounds.sample_limit; ++i) {
    std::vector<Word> reps;
    all_geodesics(b, i, reps, 64);
    for (const Word& w : reps) {
      ++c.rep.instances;
      if (lett(w) != lett(b.canonical(i)) || w.size() != b.canonical(i).size())
        c.fail("representative " + show(c.g, w) + " of " +
               show(c.g, b.canonical(i)) + " has different letters or length");
    }
  }
}

void check_deletion(Ctx& c, const CayleyBall& b) {
  int len_max = std::min(c.bounds.max_word_len, b.radius());
  while (c.rep.instances < c.bounds.sample_limit) {
    Word w = random_word(c.g, 2 + static_cast<int>(c.rng() % std::max(1, len_max - 1)), c.rng);
    int at = walk(b, w);
    if (at < 0) continue;
    if (b.layer(at) == static_cast<int>(w.size())) continue;  // geodesic
    ++c.rep.instances;
    bool found = false;
    for (size_t i = 0; i < w.size() && !found; ++i)
      for (size_t j = i + 1; j < w.size() && !found; ++j)
        found = w[i] == w[j] && deletes_to_same(c.g, w, i, j);
    if (!found)
      c.fail("non-geodesic word " + show(c.g, w) + " admits no deletable pair");
  }
}

void check_finiteback(Ctx& c, const CayleyBall& b) {
  for (int i = 0; i < b.size() && c.rep.instances < c.bounds.sample_limit; ++i) {
    ++c.rep.instances;
    if (!c.g.is_clique(back_set_in_ball(b, i)))
      c.fail("back set of " + show(c.g, b.canonical(i)) + " is not a clique");
  }
}

void check_radel(Ctx& c, const CayleyBall& b) {
  int len_max = std::min(c.bounds.max_word_len, b.radius());
  while (c.rep.instances < c.bounds.sample_limit) {
    Word w = random_word(c.g, 1 + static_cast<int>(c.rng() % len_max), c.rng);
    int at = walk(b, w);
    if (at < 0) continue;
    ++c.rep.instances;
    bool oracle_geo = b.layer(at) == static_cast<int>(w.size());
    if (is_geodesic(c.g, w) != oracle_geo) {
      c.fail("is_geodesic disagrees with ball layering on " + show(c.g, w));
      continue;
    }
    // The one-letter extension claim: a geodesic that stops being geodesic
    // deletes with the last previous occurrence across commuting letters.
    if (!oracle_geo) continue;
    for (Gen s = 0; s < c.g.size(); ++s) {
      int j = b.neighbor(at, s);
      if (j < 0 || b.layer(j) >= b.layer(at)) continue;
      int last = -1;
      for (int k = static_cast<int>(w.size()) - 1; k >= 0; --k)
        if (w[k] == s) {
          last = k;
          break;
        }
      bool ok = last >= 0;
      for (int k = last + 1; ok && k < static_cast<int>(w.size()); ++k)
        ok = c.g.commutes(w[k], s);
      if (!ok)
        c.fail("extension of " + show(c.g, w) + " by " + c.g.name(s) +
               " shortens without a commuting tail");
    }
  }
}

void check_differentletters(Ctx& c, const CayleyBall& b) {
  while (c.rep.instances < c.bounds.sample_limit) {
    GenSet u_set = static_cast<GenSet>(c.rng()) & c.g.all();
    GenSet v_set = c.g.all() & ~u_set;
    int lu = 1 + static_cast<int>(c.rng() % 3), lv = 1 + static_cast<int>(c.rng() % 3);
    auto pick = [&](GenSet from, int len) -> std::optional<Word> {
      std::vector<Gen> mem = set_to_vec(from);
      if (mem.empty()) return std::nullopt;
      Word w(len);
      for (int i = 0; i < len; ++i) w[i] = mem[c.rng() % mem.size()];
      if (!is_geodesic(c.g, w)) return std::nullopt;
      return w;
    };
    auto u = pick(u_set, lu), v = pick(v_set, lv);
    if (!u || !v || lu + lv > b.radius()) continue;
    Word uv = *u;
    uv.insert(uv.end(), v->begin(), v->end());
    ++c.rep.instances;
    int at = walk(b, uv);
    if (at < 0 || b.layer(at) != static_cast<int>(uv.size()))
      c.fail("concatenation " + show(c.g, uv) +
             " of disjoint-letter geodesics is not geodesic");
  }
}

void check_wallprops(Ctx& c, const CayleyBall& b) {
  // (1) every wall has a constant label.
  for (int i = 0; i < b.size() && c.rep.instances < c.bounds.sample_limit / 2; ++i)
    for (Gen s = 0; s < c.g.size(); ++s) {
      if (b.neighbor(i, s) < 0 || b.layer(b.neighbor(i, s)) <= b.layer(i)) continue;
      ++c.rep.instances;
      for (const BallEdge& e : oracle_wall(b, b.canonical(i), s))
        if (e.label != s) {
          c.fail("wall of (" + show(c.g, b.canonical(i)) + "," + c.g.name(s) +
                 ") contains an edge labeled " + c.g.name(e.label));
          break;
        }
      break;  // one wall per base is enough for sampling
    }
  // (3) same wall on a common path <=> the two letters delete.
  while (c.rep.instances < c.bounds.sample_limit) {
    Word w = random_word(c.g, 2 + static_cast<int>(c.rng() % std::max(1, b.radius() - 1)),
                         c.rng);
    if (walk(b, w) < 0) continue;
    ++c.rep.instances;
    std::vector<GroupElement> pref(w.size());
    GroupElement cur;
    for (size_t k = 0; k < w.size(); ++k) {
      pref[k] = cur;
      cur = append(c.g, cur, w[k]);
    }
    for (size_t i = 0; i < w.size(); ++i)
      for (size_t j = i + 1; j < w.size(); ++j) {
        bool same = same_wall(c.g, {pref[i], w[i]}, {pref[j], w[j]});
        bool del = w[i] == w[j] && deletes_to_same(c.g, w, i, j);
        if (same != del) {
          c.fail("wall/deletion equivalence fails on " + show(c.g, w) +
                 " at positions " + std::to_string(i) + "," + std::to_string(j));
          i = j = w.size();
        }
      }
  }
  // (4) rearrangements have equal wall multisets.
  for (int i = 0; i < b.size(); ++i) {
    std::vector<Word> reps;
    all_geodesics(b, i, reps, 8);
    if (reps.size() < 2) continue;
    auto walls_of = [&](const Word& w) {
      std::vector<Wall> ws = walls_of_path(c.g, GroupElement(), w);
      std::sort(ws.begin(), ws.end());
      return ws;
    };
    auto w0 = walls_of(reps[0]);
    for (size_t r = 1; r < reps.size(); ++r)
      if (walls_of(reps[r]) != w0)
        c.fail("rearrangement " + show(c.g, reps[r]) +
               " has different walls than " + show(c.g, reps[0]));
  }
}

void check_shortback(Ctx& c, const CayleyBall& b) {
  while (c.rep.instances < c.bounds.sample_limit) {
    int i = static_cast<int>(c.rng() % b.size());
    if (b.layer(i) < 1) continue;
    Word gamma = random_geodesic(b, i, c.rng);
    int nt = 1 + static_cast<int>(c.rng() % 3);
    std::vector<int> targets;
    for (int k = 0; k < nt; ++k)
      targets.push_back(static_cast<int>(c.rng() % gamma.size()));
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    ++c.rep.instances;
    Word tau = shortest_hitting_walls(c.g, gamma, targets);
    int vt = walk(b, tau);
    if (vt < 0 || b.layer(vt) != static_cast<int>(tau.size())) {
      c.fail("hitting path " + show(c.g, tau) + " is not geodesic");
      continue;
    }
    // extends to a geodesic to the endpoint: |tau| + d(end(tau), y) = |gamma|
    GroupElement end_tau = normal_form(c.g, tau);
    GroupElement y = normal_form(c.g, gamma);
    int rest = multiply(c.g, inverse(c.g, end_tau), y).length();
    if (static_cast<int>(tau.size()) + rest != static_cast<int>(gamma.size()))
      c.fail("hitting path " + show(c.g, tau) +
             " does not extend geodesically along " + show(c.g, gamma));
    // contains an edge in the wall of every target
    auto tw = walls_of_path(c.g, GroupElement(), tau);
    auto gw = walls_of_path(c.g, GroupElement(), gamma);
    for (int t : targets)
      if (std::find(tw.begin(), tw.end(), gw[t]) == tw.end())
        c.fail("hitting path " + show(c.g, tau) + " misses a target wall of " +
               show(c.g, gamma));
  }
}

void check_diamond(Ctx& c, const CayleyBall& b) {
  while (c.rep.instances < c.bounds.sample_limit) {
    int i = static_cast<int>(c.rng() % b.size());
    if (b.layer(i) < 2) continue;
    Word w1 = random_geodesic(b, i, c.rng);
    Word w2 = random_geodesic(b, i, c.rng);
    size_t k = 1 + c.rng() % (w1.size() - 1);
    ++c.rep.instances;
    try {
      auto split = [&](const Word& w) {
        return std::make_pair(Word(w.begin(), w.begin() + k),
                              Word(w.begin() + k, w.end()));
      };
      diamond(c.g, split(w1), split(w2));  // postconditions checked inside
    } catch (const std::exception& e) {
      c.fail("diamond failed for " + show(c.g, w1) + " vs " + show(c.g, w2) +
             " at " + std::to_string(k) + ": " + e.what());
    }
  }
}

void check_doublediamond(Ctx& c, const CayleyBall& b) {
  const int n = c.g.size();
  long long attempts = 0;
  while (c.rep.instances < c.bounds.sample_limit &&
         attempts < 50 * c.bounds.sample_limit) {
    ++attempts;
    int i = static_cast<int>(c.rng() % b.size());
    if (b.layer(i) < 4 * n) continue;
    Word l1 = random_geodesic(b, i, c.rng);
    Word l2 = random_geodesic(b, i, c.rng);
    Word l3 = random_geodesic(b, i, c.rng);
    size_t k = l1.size() / 2;
    auto split = [&](const Word& w) {
      return std::make_pair(Word(w.begin(), w.begin() + k),
                            Word(w.begin() + k, w.end()));
    };
    Word nu12, nu13;
    try {
      nu12 = diamond(c.g, split(l1), split(l2)).tau1;
      nu13 = diamond(c.g, split(l1), split(l3)).tau1;
    } catch (const std::exception& e) {
      c.fail(std::string("diamond failed inside doublediamond: ") + e.what());
      continue;
    }
    if (nu12.size() < nu13.size()) std::swap(nu12, nu13);
    if (static_cast<int>(nu13.size()) < 2 * n) continue;
    GenSet common = lett(nu12) & lett(nu13);
    bool unrelated = false;
    for (Gen a = 0; a < n && !unrelated; ++a)
      for (Gen bb = a + 1; bb < n && !unrelated; ++bb)
        unrelated = gen_in(common, a) && gen_in(common, bb) && !c.g.commutes(a, bb);
    if (!unrelated) continue;
    ++c.rep.instances;
    GroupElement x2 = normal_form(c.g, Word(l2.begin(), l2.begin() + k));
    GroupElement x3 = normal_form(c.g, Word(l3.begin(), l3.begin() + k));
    int d23 = multiply(c.g, inverse(c.g, x2), x3).length();
    int bound = 2 * (static_cast<int>(nu12.size()) - static_cast<int>(nu13.size())) + 4 * n;
    if (d23 >= bound)
      c.fail("distance bound violated: d=" + std::to_string(d23) +
             " bound=" + std::to_string(bound) + " on " + show(c.g, l1));
  }
}

void check_backprops(Ctx& c, const CayleyBall& b) {
  for (int i = 0; i < b.size() && c.rep.instances < c.bounds.sample_limit; ++i) {
    ++c.rep.instances;
    GroupElement e = normal_form(c.g, b.canonical(i));
    BackCombing bc = back_combing(c.g, e, GroupElement());
    Word concat = bc.concatenation();
    if (!is_geodesic(c.g, concat) ||
        multiply(c.g, e, normal_form(c.g, concat)).length() != 0) {
      c.fail("back combing of " + show(c.g, b.canonical(i)) +
             " is not a geodesic to the identity");
      continue;
    }
    for (size_t k = 0; k < bc.segments.size(); ++k) {
      if (!c.g.is_clique(lett(bc.segments[k])))
        c.fail("combing segment " + show(c.g, bc.segments[k]) + " is not a clique");
      if (k + 1 < bc.segments.size())
        for (Gen s : bc.segments[k + 1]) {
          bool commutes_all = true;
          for (Gen t : bc.segments[k]) commutes_all = commutes_all && c.g.commutes(s, t);
          if (commutes_all)
            c.fail("letter " + c.g.name(s) + " of segment " + std::to_string(k + 2) +
                   " commutes with all of segment " + std::to_string(k + 1));
        }
    }
  }
}

ThresholdConfig scaled_config(const VerifyBounds& bounds, int n) {
  ThresholdConfig cfg = ThresholdConfig::defaults(n);
  if (bounds.radius <= 12) {  // desk scale: make the regimes reachable
    cfg.far = 6;
    cfg.r0 = 3;
    cfg.wide14 = 10;
    cfg.wide16 = 12;
    cfg.assoc = std::max(2, n - 2);
  }
  return cfg;
}

void check_twodir(Ctx& c, const CayleyBall& b) {
  if (find_visual_z2z2_power(c.g, 3)) return;  // hypothesis excluded
  ThresholdConfig cfg = scaled_config(c.bounds, c.g.size());
  for (int i = 0; i < b.size() && c.rep.instances < c.bounds.sample_limit; ++i) {
    if (b.layer(i) <= cfg.far) continue;
    GroupElement x = normal_form(c.g, b.canonical(i));
    try {
      DirectionSet ds = reduce_directions(c.g, x, GroupElement(), cfg);
      ++c.rep.instances;
      if (ds.dirs.size() > 2)
        c.fail("more than two directions at " + show(c.g, b.canonical(i)));
    } catch (const std::invalid_argument&) {
      // combing shorter than the scaled R0+1 segments; not an instance
    } catch (const std::exception& e) {
      ++c.rep.instances;
      c.fail("direction reduction failed at " + show(c.g, b.canonical(i)) +
             ": " + e.what());
    }
  }
}

void check_avoidlink(Ctx& c, const CayleyBall& b) {
  if (ends_class(c.g) != EndsClass::one_ended) return;
  if (find_virtual_factor_separator(c.g)) return;
  while (c.rep.instances < c.bounds.sample_limit) {
    int i = static_cast<int>(c.rng() % b.size());
    if (b.layer(i) < 1) continue;
    Word gamma = random_geodesic(b, i, c.rng);
    size_t cut = c.rng() % gamma.size();
    Word suffix(gamma.begin() + cut, gamma.end());
    GenSet letters = lett(suffix);
    if (c.g.is_clique(letters)) continue;  // needs an infinite suffix group
    GenSet avoid = c.g.link(letters) | back_set_in_ball(b, i);
    Gen s = static_cast<Gen>(c.rng() % c.g.size());
    Gen t = static_cast<Gen>(c.rng() % c.g.size());
    if (gen_in(back_set_in_ball(b, i), s) || gen_in(back_set_in_ball(b, i), t))
      continue;
    ++c.rep.instances;
    try {
      GammaPath p = avoid_path(c.g, s, t, avoid);
      if (p.edge_length() < 2)
        c.fail("avoid path shorter than two edges");
      for (size_t k = 1; k + 1 < p.vertices.size(); ++k) {
        Gen v = p.vertices[k];
        if (gen_in(avoid, v) && v != s && v != t)
          c.fail("avoid path interior vertex " + c.g.name(v) + " is blocked");
      }
    } catch (const std::exception& e) {
      c.fail(std::string("avoid path missing despite hypotheses: ") + e.what());
    }
  }
}

void check_filterprops(Ctx& c, const CayleyBall&) {
  if (ends_class(c.g) != EndsClass::one_ended) return;
  if (find_virtual_factor_separator(c.g)) return;
  ThresholdConfig cfg = scaled_config(c.bounds, c.g.size());
  for (Gen s = 0; s < c.g.size(); ++s)
    for (Gen t = s + 1; t < c.g.size(); ++t) {
      if (c.rep.instances >= std::max<long long>(1, c.bounds.sample_limit / 100))
        return;
      for (FilterStrategy strat : {FilterStrategy::basic, FilterStrategy::directed}) {
        ++c.rep.instances;
        try {
          Filter f = build_filter(c.g, {s}, {t}, {}, 4, strat, cfg);
          FilterReport r = check_filter_properties(f);
          for (int p = 0; p < 7; ++p)
            if (!r.properties[p].ok)
              c.fail("filter property " + std::to_string(p + 1) + " fails for spines " +
                     c.g.name(s) + "/" + c.g.name(t) + ": " + r.properties[p].detail);
        } catch (const std::exception& e) {
          c.fail("filter construction failed for spines " + c.g.name(s) + "/" +
                 c.g.name(t) + ": " + e.what());
        }
      }
    }
}

}  // namespace

std::string LemmaReport::to_text(const PresentationGraph&) const {
  std::ostringstream os;
  os << "lemma " << lemma << ": " << instances << " instances, "
     << failures.size() << " failures (seed " << seed << ")\n";
  for (const auto& f : failures) os << "  FAIL: " << f << "\n";
  return os.str();
}

std::string LemmaReport::to_json() const {
  nlohmann::ordered_json j;
  j["lemma"] = lemma;
  j["instances"] = instances;
  j["failures"] = failures;
  j["seconds"] = seconds;
  j["seed"] = seed;
  return j.dump(2) + "\n";
}

LemmaReport verify_lemma(const PresentationGraph& g, const std::string& lemma,
                         const VerifyBounds& bounds) {
  LemmaReport rep;
  rep.lemma = lemma;
  rep.seed = bounds.seed;
  auto t0 = std::chrono::steady_clock::now();
  Ctx c(g, bounds, rep);
  CayleyBall b(g, bounds.radius, bounds.element_cap, true);

  if (lemma == "sameletters") check_sameletters(c, b);
  else if (lemma == "deletion") check_deletion(c, b);
  else if (lemma == "finiteback") check_finiteback(c, b);
  else if (lemma == "radel") check_radel(c, b);
  else if (lemma == "differentletters") check_differentletters(c, b);
  else if (lemma == "wallprops") check_wallprops(c, b);
  else if (lemma == "shortback") check_shortback(c, b);
  else if (lemma == "diamond") check_diamond(c, b);
  else if (lemma == "doublediamond") check_doublediamond(c, b);
  else if (lemma == "backprops") check_backprops(c, b);
  else if (lemma == "twodir") check_twodir(c, b);
  else if (lemma == "avoidlink") check_avoidlink(c, b);
  else if (lemma == "filterprops") check_filterprops(c, b);
  else throw std::invalid_argument("unknown lemma id: " + lemma);

  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace racg::oracle
