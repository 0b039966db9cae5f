#include "racg/words.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace racg {

Word parse_word(const PresentationGraph& g, const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  Word w;
  while (in >> tok) {
    Gen x = g.index_of(tok);
    if (x < 0) throw std::invalid_argument("unknown generator '" + tok + "'");
    w.push_back(x);
  }
  return w;
}

std::string word_to_string(const PresentationGraph& g, const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += g.name(w[i]);
  }
  return out;
}

GenSet lett(const Word& w) {
  GenSet s = 0;
  for (Gen a : w) s |= gen_bit(a);
  return s;
}

namespace {

void check_word(const PresentationGraph& g, const Word& w) {
  for (Gen a : w)
    if (a < 0 || a >= g.size())
      throw std::invalid_argument("invalid generator index " + std::to_string(a));
}

// Lexicographically least rearrangement of a geodesic word: greedily move
// the least letter that commutes past everything before it to the front.
void canonicalize_geodesic(const PresentationGraph& g, Word& w) {
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i) {
    int best = i;
    GenSet window = gen_bit(w[i]);
    for (int j = i + 1; j < n; ++j) {
      if ((window & ~g.neighbors(w[j])) == 0 && w[j] < w[best]) best = j;
      window |= gen_bit(w[j]);
    }
    if (best != i) {
      Gen x = w[best];
      for (int j = best; j > i; --j) w[j] = w[j - 1];
      w[i] = x;
    }
  }
}

}  // namespace

bool is_geodesic(const PresentationGraph& g, const Word& w) {
  check_word(g, w);
  const int n = static_cast<int>(w.size());
  for (int k = 1; k < n; ++k) {
    // radel: only the last previous occurrence of w[k] matters
    int i = k - 1;
    bool blocked = false;
    while (i >= 0 && w[i] != w[k]) {
      if (!g.commutes(w[i], w[k])) { blocked = true; break; }
      --i;
    }
    if (!blocked && i >= 0) return false;  // w[i] and w[k] delete
  }
  return true;
}

GroupElement append(const PresentationGraph& g, const GroupElement& e, Gen s) {
  if (s < 0 || s >= g.size())
    throw std::invalid_argument("invalid generator index " + std::to_string(s));
  Word w = e.word();
  int i = static_cast<int>(w.size()) - 1;
  bool blocked = false;
  while (i >= 0 && w[i] != s) {
    if (!g.commutes(w[i], s)) { blocked = true; break; }
    --i;
  }
  if (!blocked && i >= 0) {
    w.erase(w.begin() + i);  // s deletes with its last occurrence
  } else {
    w.push_back(s);
  }
  canonicalize_geodesic(g, w);
  return GroupElement::from_canonical(std::move(w));
}

GroupElement normal_form(const PresentationGraph& g, const Word& w) {
  check_word(g, w);
  GroupElement e;
  for (Gen a : w) e = append(g, e, a);
  return e;
}

GroupElement multiply(const PresentationGraph& g, const GroupElement& a,
                      const GroupElement& b) {
  GroupElement e = a;
  for (Gen x : b.word()) e = append(g, e, x);
  return e;
}

GroupElement inverse(const PresentationGraph& g, const GroupElement& e) {
  Word w(e.word().rbegin(), e.word().rend());
  canonicalize_geodesic(g, w);
  return GroupElement::from_canonical(std::move(w));
}

GenSet back_set_word(const PresentationGraph& g, const Word& w) {
  GenSet b = 0;
  GenSet seen = 0;
  for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
    if ((seen & ~g.neighbors(w[i])) == 0) b |= gen_bit(w[i]);
    seen |= gen_bit(w[i]);
  }
  return b;
}

GenSet back_set(const PresentationGraph& g, const GroupElement& e) {
  return back_set_word(g, e.word());
}

std::vector<Word> geodesic_words(const PresentationGraph& g,
                                 const GroupElement& e, size_t cap) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  std::unordered_set<Word, WordHash> seen;
  std::deque<Word> queue;
  seen.insert(e.word());
  queue.push_back(e.word());
  while (!queue.empty() && seen.size() < cap) {
    Word w = queue.front();
    queue.pop_front();
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (!g.commutes(w[i], w[i + 1])) continue;
      std::swap(w[i], w[i + 1]);
      if (seen.insert(w).second) queue.push_back(w);
      std::swap(w[i], w[i + 1]);
    }
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  if (out.size() > cap) out.resize(cap);
  return out;
}

}  // namespace racg
