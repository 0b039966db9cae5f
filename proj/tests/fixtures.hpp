#pragma once

#include <random>

#include "racg/presentation.hpp"

// Shared fixture graphs.  The five- and six-vertex graphs are the witness
// constructions used by the classification goldens.
namespace fixtures {

using racg::PresentationGraph;

inline PresentationGraph p5() {
  return racg::parse_presentation("vertices a b c d e\nedges a-b b-c c-d d-e e-a");
}

inline PresentationGraph square() {
  return racg::parse_presentation("vertices a b c d\nedges a-b b-c c-d d-a");
}

inline PresentationGraph hexagon() {
  return racg::parse_presentation(
      "vertices a b c d e f\nedges a-b b-c c-d d-e e-f f-a");
}

// K_{2,2,2}: three non-adjacent pairs with full adjacency between pairs
inline PresentationGraph octahedron() {
  return racg::parse_presentation(
      "vertices a b c d e f\n"
      "edges a-c a-d a-e a-f b-c b-d b-e b-f c-e c-f d-e d-f");
}

inline PresentationGraph path4() {
  return racg::parse_presentation("vertices a b c d\nedges a-b b-c c-d");
}

// item-1 fixture: {u,v} a dihedral factor, A = {s,t,p} edgeless (infinite ended)
inline PresentationGraph fix5() {
  return racg::parse_presentation(
      "vertices u v s t p\nedges s-u s-v t-u t-v p-u p-v");
}

// item-2 fixture with virtual factor separator C = D = {u,v}
inline PresentationGraph fix6() {
  return racg::parse_presentation(
      "vertices u v s t p q\nedges s-u s-v t-u t-v p-u p-v q-s q-t");
}

inline PresentationGraph infinite_dihedral() {
  return racg::parse_presentation("vertices a b\nedges");
}

inline std::vector<PresentationGraph> all_fixtures() {
  return {p5(), square(), hexagon(), octahedron(), path4(), fix5(), fix6()};
}

// seeded Erdos-Renyi style graphs on 4..6 vertices
inline PresentationGraph random_graph(unsigned seed) {
  std::mt19937 rng(seed);
  int n = 4 + static_cast<int>(rng() % 3);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 2) edges.emplace_back(names[i], names[j]);
  return PresentationGraph(names, edges);
}

}  // namespace fixtures
