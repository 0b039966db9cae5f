#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Presentation graphs of right-angled Coxeter systems and the
// graph-theoretic predicates used by the boundary classification.
namespace racg {

using Gen = int;              // generator index, position in declaration order
using GenSet = std::uint64_t; // subset of generators as a bitmask

constexpr int kMaxGenerators = 64;

inline GenSet gen_bit(Gen g) { return GenSet{1} << g; }
inline bool gen_in(GenSet s, Gen g) { return (s >> g) & 1; }

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what),
        line(line_) {}
};

// Vertex set S with the commuting-pair edges of Gamma(W,S).
// m(s,t) = 2 exactly for the edges, m(s,t) = infinity for every other
// distinct pair.  Declaration order of the generators is fixed at parse
// time and defines the ShortLex order used everywhere else.
class PresentationGraph {
 public:
  PresentationGraph() = default;
  PresentationGraph(std::vector<std::string> generators,
                    const std::vector<std::pair<std::string, std::string>>& edges);

  int size() const { return static_cast<int>(names_.size()); }
  GenSet all() const { return size() == 64 ? ~GenSet{0} : (GenSet{1} << size()) - 1; }

  const std::string& name(Gen g) const { return names_[g]; }
  const std::vector<std::string>& names() const { return names_; }
  Gen index_of(const std::string& name) const;  // -1 when unknown

  bool commutes(Gen a, Gen b) const { return gen_in(adj_[a], b); }
  GenSet neighbors(Gen g) const { return adj_[g]; }

  bool is_clique(GenSet c) const;
  // Common neighbors of every member of a.  lk(emptyset) = S.
  GenSet link(GenSet a) const;
  GenSet link(Gen a) const { return adj_[a]; }

  bool operator==(const PresentationGraph& o) const {
    return names_ == o.names_ && adj_ == o.adj_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<GenSet> adj_;
};

// Native line-oriented format or the DOT subset `graph { u -- v; }`.
PresentationGraph parse_presentation(const std::string& text);
PresentationGraph load_presentation(const std::string& path);
std::string export_dot(const PresentationGraph& g);

struct SeparatorWitness {
  GenSet cut = 0;
  std::vector<GenSet> components;  // connected components of Gamma - cut
};

struct VfsWitness {
  GenSet c = 0;          // the separating set C
  GenSet d = 0;          // D subset of C; <C-D> finite and commutes with <D>
  Gen s = -1, t = -1;    // m(s,t) = infinity, both commute with D
  bool exhaustive = true; // whether the full-enumeration search ran
};

enum class EndsClass { finite, two_ended, infinite_ended, one_ended };
std::string to_string(EndsClass e);

// Components of Gamma - c, or nullopt when the remainder is connected or empty.
std::optional<SeparatorWitness> is_separating(const PresentationGraph& g, GenSet c);

// Separating clique (possibly empty when Gamma is disconnected), smallest
// first, lexicographic within a size.
std::optional<SeparatorWitness> find_clique_separator(const PresentationGraph& g);

EndsClass ends_class(const PresentationGraph& g);

// k pairwise-disjoint non-adjacent pairs {u_i,v_i} with full adjacency
// between distinct pairs: a visual (Z2*Z2)^k.
std::optional<std::vector<std::pair<Gen, Gen>>> find_visual_z2z2_power(
    const PresentationGraph& g, int k);

// Non-adjacent pair {s,t} with both adjacent to every other generator,
// i.e. W = (Z2*Z2) x <S-{s,t}>.
std::optional<std::pair<Gen, Gen>> find_dihedral_factor(const PresentationGraph& g);

std::optional<VfsWitness> find_virtual_factor_separator(const PresentationGraph& g);

// Non-adjacent (v,w) with lk(v) & lk(w) separating some third vertex.
std::optional<std::pair<Gen, Gen>> find_mr_nonlocal_witness(const PresentationGraph& g);

std::vector<Gen> set_to_vec(GenSet s);
std::string set_to_string(const PresentationGraph& g, GenSet s);

}  // namespace racg
