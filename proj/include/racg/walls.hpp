#pragma once

#include <vector>

#include "racg/presentation.hpp"
#include "racg/words.hpp"

namespace racg {

struct HypothesisViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AmbiguousAssociation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The edge of Lambda(W,S) between base and base*label.
struct EdgeRef {
  GroupElement base;
  Gen label = -1;
};

// Wall identity is the normal form of the reflection v*label*v^-1; two edges
// are in the same wall exactly when these reflections agree.
struct Wall {
  GroupElement reflection;
  bool operator==(const Wall& o) const { return reflection == o.reflection; }
  bool operator!=(const Wall& o) const { return reflection != o.reflection; }
  bool operator<(const Wall& o) const { return reflection < o.reflection; }
};

Wall wall_of(const PresentationGraph& g, const EdgeRef& e);
bool same_wall(const PresentationGraph& g, const EdgeRef& e1, const EdgeRef& e2);

// The common label of all edges of the wall (Remark wallprops (1)).
Gen wall_label(const PresentationGraph& g, const Wall& w);
// The unique edge of the wall crossed by the normal-form path of the reflection.
EdgeRef canonical_edge(const PresentationGraph& g, const Wall& w);

// Reflections of the successive edges of the path `word` based at `base`.
std::vector<Wall> walls_of_path(const PresentationGraph& g,
                                const GroupElement& base, const Word& word);

// True iff a relation square with one edge in each wall exists within the
// given radius of either wall's canonical edge; false means "not found
// within radius", which is definitive only for true.
bool walls_cross(const PresentationGraph& g, const Wall& w1, const Wall& w2,
                 int radius);

// Shortest prefix-rearrangement of gamma containing an edge in the wall of
// every indexed edge: the dependence closure of the target positions, read
// in gamma order.
Word shortest_hitting_walls(const PresentationGraph& g, const Word& gamma,
                            const std::vector<int>& targets);

// Six-segment decomposition of a geodesic bigon split at equal length.
// All six words are stored in canonical form.
struct Diamond {
  Word gamma1, tau1, delta1, delta2, tau2, gamma2;
  GroupElement anchor;  // the split vertex y on the (alpha1, alpha2) side
};

// p1 = (alpha1, alpha2), p2 = (beta1, beta2): geodesics between the same two
// points (based at `base`, identity by default) with |alpha1| = |beta1|.
Diamond diamond(const PresentationGraph& g, const std::pair<Word, Word>& p1,
                const std::pair<Word, Word>& p2,
                const GroupElement& base = GroupElement());

// Geodesic from `from` to `to` that consumes the whole back set at each step;
// each segment is a clique word in generator order.
struct BackCombing {
  std::vector<Word> segments;
  Word concatenation() const;
};

BackCombing back_combing(const PresentationGraph& g, const GroupElement& from,
                         const GroupElement& to);

// The direction-machinery constants as a single configurable record.
// The defaults mirror the proof-scale constants; tests scale them down.
struct ThresholdConfig {
  int far;          // minimum d(x, star) before directions exist (7N^2)
  int r0;           // starting back-combing segment index R (7N)
  int wide14;       // direction-propagation distance threshold (14N^2)
  int wide16;       // wide-bigon threshold for the directed strategy (16N^2)
  int assoc;        // shared-wall count for direction association (6N-3)
  static ThresholdConfig defaults(int n) {
    return {7 * n * n, 7 * n, 14 * n * n, 16 * n * n, 6 * n - 3};
  }
};

// At most two surviving directions back toward star at base.
struct DirectionSet {
  GroupElement base;
  GroupElement star;
  std::vector<Word> dirs;  // one or two geodesic words based at base
  ThresholdConfig cfg;
};

DirectionSet reduce_directions(const PresentationGraph& g, const GroupElement& x,
                               const GroupElement& star, const ThresholdConfig& cfg);

// One step of direction propagation: (context, ell) geodesic,
// context ending at ds.base.  Case (1): rebase; case (2): prepend ell;
// case (3): rebuild at the new vertex and associate by shared-wall count.
DirectionSet propagate_direction(const PresentationGraph& g, const DirectionSet& ds,
                                 Gen ell, const Word& context);

}  // namespace racg
