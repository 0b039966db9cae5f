#include "racg/classify.hpp"

#include <sstream>

#include "vendor/json.hpp"

namespace racg {

std::string to_string(Status s) {
  switch (s) {
    case Status::locally_connected: return "locally_connected";
    case Status::non_locally_connected: return "non_locally_connected";
    case Status::hypothesis_violated: return "hypothesis_violated";
    case Status::not_one_ended: return "not_one_ended";
  }
  return "?";
}

std::string to_string(VerdictCase c) {
  switch (c) {
    case VerdictCase::item1: return "item1";
    case VerdictCase::item2: return "item2";
    case VerdictCase::none: return "none";
  }
  return "?";
}

namespace {

PresentationGraph induced(const PresentationGraph& g, GenSet keep) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (Gen a = 0; a < g.size(); ++a) {
    if (!gen_in(keep, a)) continue;
    names.push_back(g.name(a));
    for (Gen b = a + 1; b < g.size(); ++b)
      if (gen_in(keep, b) && g.commutes(a, b))
        edges.emplace_back(g.name(a), g.name(b));
  }
  return PresentationGraph(names, edges);
}

}  // namespace

Verdict classify(const PresentationGraph& g) {
  Verdict v;
  v.graph = g;

  EndsClass ends = ends_class(g);
  if (ends != EndsClass::one_ended) {
    v.status = Status::not_one_ended;
    v.separator = find_clique_separator(g);
    return v;
  }
  if (auto z = find_visual_z2z2_power(g, 3)) {
    v.status = Status::hypothesis_violated;
    v.z2z2_pairs = *z;
    return v;
  }
  if (auto d = find_dihedral_factor(g)) {
    v.which = VerdictCase::item1;
    v.dihedral = *d;
    v.factor = g.all() & ~gen_bit(d->first) & ~gen_bit(d->second);
    PresentationGraph a = induced(g, v.factor);
    if (find_visual_z2z2_power(a, 2))
      throw std::logic_error(
          "classify: dihedral complement is not word hyperbolic");
    v.factor_ends = ends_class(a);
    v.status = *v.factor_ends == EndsClass::infinite_ended
                   ? Status::non_locally_connected
                   : Status::locally_connected;
    return v;
  }
  v.which = VerdictCase::item2;
  if (auto w = find_virtual_factor_separator(g)) {
    v.vfs = *w;
    v.status = Status::non_locally_connected;
  } else {
    v.status = Status::locally_connected;
  }
  return v;
}

namespace {

std::string pair_names(const PresentationGraph& g, std::pair<Gen, Gen> p) {
  return "{" + g.name(p.first) + "," + g.name(p.second) + "}";
}

}  // namespace

std::string explain(const Verdict& v) {
  const PresentationGraph& g = v.graph;
  std::ostringstream os;
  switch (v.status) {
    case Status::not_one_ended:
      os << "not one-ended: the boundary classification does not apply.\n";
      if (v.separator)
        os << "complete separating subgraph: "
           << set_to_string(g, v.separator->cut) << "\n";
      break;
    case Status::hypothesis_violated:
      os << "hypothesis violated: visual (Z2*Z2)^3 found; the classification "
            "assumes none.\n";
      if (v.z2z2_pairs) {
        os << "unrelated pairs:";
        for (auto p : *v.z2z2_pairs) os << " " << pair_names(g, p);
        os << "\n";
      }
      break;
    case Status::locally_connected:
    case Status::non_locally_connected:
      if (v.which == VerdictCase::item1) {
        os << "item 1: group splits as (Z2*Z2) x A with dihedral pair "
           << pair_names(g, *v.dihedral) << " and A = "
           << set_to_string(g, v.factor) << ".\n";
        os << "A is " << to_string(*v.factor_ends) << "; boundary is ";
        os << (v.status == Status::locally_connected
                   ? "locally connected (suspension of the boundary of A).\n"
                   : "non-locally connected (A is infinite ended).\n");
      } else {
        if (v.vfs) {
          os << "item 2: virtual factor separator found => non-locally "
                "connected boundary.\n";
          os << "C = " << set_to_string(g, v.vfs->c)
             << ", D = " << set_to_string(g, v.vfs->d) << ", s = "
             << g.name(v.vfs->s) << ", t = " << g.name(v.vfs->t) << "\n";
          if (!v.vfs->exhaustive)
            os << "(witness found by pruned search)\n";
        } else {
          os << "item 2: locally connected (no virtual factor separator).\n";
        }
      }
      break;
  }
  return os.str();
}

std::string verdict_json(const Verdict& v) {
  const PresentationGraph& g = v.graph;
  nlohmann::ordered_json j;
  j["status"] = to_string(v.status);
  j["case"] = to_string(v.which);
  nlohmann::ordered_json w = nlohmann::ordered_json::object();
  auto names = [&](GenSet s) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (Gen x : set_to_vec(s)) a.push_back(g.name(x));
    return a;
  };
  if (v.separator) w["clique_separator"] = names(v.separator->cut);
  if (v.z2z2_pairs) {
    auto a = nlohmann::ordered_json::array();
    for (auto p : *v.z2z2_pairs)
      a.push_back({g.name(p.first), g.name(p.second)});
    w["z2z2_pairs"] = a;
  }
  if (v.dihedral) {
    w["dihedral_pair"] = {g.name(v.dihedral->first), g.name(v.dihedral->second)};
    w["factor"] = names(v.factor);
    w["factor_ends"] = to_string(*v.factor_ends);
  }
  if (v.vfs) {
    w["vfs"] = {{"C", names(v.vfs->c)},
                {"D", names(v.vfs->d)},
                {"s", g.name(v.vfs->s)},
                {"t", g.name(v.vfs->t)},
                {"exhaustive", v.vfs->exhaustive}};
  }
  j["witnesses"] = w;
  return j.dump(2) + "\n";
}

}  // namespace racg
