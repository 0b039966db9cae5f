#pragma once

#include <optional>
#include <string>
#include <vector>

#include "racg/presentation.hpp"

namespace racg {

enum class Status {
  locally_connected,
  non_locally_connected,
  hypothesis_violated,
  not_one_ended,
};
enum class VerdictCase { item1, item2, none };

std::string to_string(Status s);
std::string to_string(VerdictCase c);

struct Verdict {
  PresentationGraph graph;
  Status status = Status::locally_connected;
  VerdictCase which = VerdictCase::none;
  std::optional<SeparatorWitness> separator;                    // not_one_ended
  std::optional<std::vector<std::pair<Gen, Gen>>> z2z2_pairs;   // hypothesis_violated
  std::optional<std::pair<Gen, Gen>> dihedral;                  // item1
  GenSet factor = 0;                                            // item1: A = S - {s,t}
  std::optional<EndsClass> factor_ends;                         // item1
  std::optional<VfsWitness> vfs;                                // item2
};

// Decision procedure: not one-ended -> not_one_ended; visual (Z2*Z2)^3 ->
// hypothesis_violated; dihedral direct factor -> item1 with status from the
// ends of the complement factor; otherwise item2 with status from the
// virtual-factor-separator search.
Verdict classify(const PresentationGraph& g);

std::string explain(const Verdict& v);
std::string verdict_json(const Verdict& v);

}  // namespace racg
