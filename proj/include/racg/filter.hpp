#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "racg/walls.hpp"
#include "racg/words.hpp"

namespace racg {

// Walk in the presentation graph; the degenerate forms (e,e^-1) and
// (e,e^-1,e) appear as revisits of the same vertices.
struct GammaPath {
  std::vector<Gen> vertices;
  int edge_length() const { return static_cast<int>(vertices.size()) - 1; }
};

// Shortest path from s to t of edge-length >= 2 whose interior vertices
// avoid `avoid`; ties broken lexicographically. Falls back to (e,e^-1) when
// s = t and to (e,e^-1,e) when s,t are adjacent and every detour is blocked.
// Throws when no path exists (the caller's hypotheses were violated).
GammaPath avoid_path(const PresentationGraph& g, Gen s, Gen t, GenSet avoid);

struct Fan {
  GroupElement base;
  Gen left_label = -1;
  Gen right_label = -1;
  std::vector<Gen> interior_labels;
  std::vector<std::pair<Gen, Gen>> loops;  // consecutive commuting label pairs
};

// Fan at the endpoint of base_geodesic spanning from label a to label b,
// with interior labels avoiding `avoid` united with the back set.
Fan build_fan(const PresentationGraph& g, const Word& base_geodesic, Gen a,
              Gen b, GenSet avoid);

enum class EdgeKind { left_fan, right_fan, interior, spine_left, spine_right };
const char* edge_kind_name(EdgeKind k);

struct FilterNode {
  int id = 0;
  int level = 0;
  GroupElement element;
};

struct FilterEdge {
  int from = 0;  // lower endpoint
  int to = 0;    // upper endpoint
  Gen label = -1;
  EdgeKind kind = EdgeKind::interior;
  bool tree = true;
};

enum class FilterStrategy { basic, directed };

struct Filter {
  PresentationGraph graph;
  std::vector<FilterNode> nodes;
  std::vector<FilterEdge> edges;
  int root = 0;
  int depth = 0;  // number of fan levels built
  Word shared, spine_left, spine_right;  // spines as built (auto-extended)
  FilterStrategy strategy = FilterStrategy::basic;
};

// Level-by-level fan construction between two geodesics diverging after
// `shared`. Strategy basic avoids only the back set at each fan base;
// strategy directed additionally avoids the link of the letters of the
// tracked direction when that direction generates an infinite subgroup.
Filter build_filter(const PresentationGraph& g, const Word& spine_left,
                    const Word& spine_right, const Word& shared, int depth,
                    FilterStrategy strategy,
                    std::optional<ThresholdConfig> cfg = std::nullopt);

// Partition of edge indices under the commuting-path-in-filter relation;
// classes ordered by smallest member.
std::vector<std::vector<int>> filter_walls(const Filter& f);

struct PropertyResult {
  bool ok = true;
  std::string detail;  // counterexample description on failure
};

// Results for the seven structural filter properties, 1-indexed as
// properties[i-1].
struct FilterReport {
  std::array<PropertyResult, 7> properties;
  bool all_ok() const {
    for (const auto& p : properties)
      if (!p.ok) return false;
    return true;
  }
};

FilterReport check_filter_properties(const Filter& f);

std::string export_filter(const Filter& f, const std::string& format);
Filter import_filter(const PresentationGraph& g, const std::string& json_text);

}  // namespace racg
