#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "vendor/doctest.h"

#include "fixtures.hpp"
#include "racg/classify.hpp"
#include "vendor/json.hpp"

using namespace racg;

TEST_CASE("square: dihedral factor with two-ended complement") {
  Verdict v = classify(fixtures::square());
  CHECK(v.status == Status::locally_connected);
  CHECK(v.which == VerdictCase::item1);
  REQUIRE(v.dihedral.has_value());
  Gen a = 0, c = 2;
  CHECK((*v.dihedral == std::make_pair(a, c)));
  CHECK(v.factor == (gen_bit(1) | gen_bit(3)));
  CHECK(v.factor_ends == EndsClass::two_ended);
}

TEST_CASE("five-vertex fixture: infinite-ended complement") {
  Verdict v = classify(fixtures::fix5());
  CHECK(v.status == Status::non_locally_connected);
  CHECK(v.which == VerdictCase::item1);
  REQUIRE(v.dihedral.has_value());
  CHECK(v.factor_ends == EndsClass::infinite_ended);
}

TEST_CASE("5-cycle and 6-cycle: no virtual factor separator") {
  for (const auto& g : {fixtures::p5(), fixtures::hexagon()}) {
    Verdict v = classify(g);
    CHECK(v.status == Status::locally_connected);
    CHECK(v.which == VerdictCase::item2);
    CHECK(!v.vfs.has_value());
  }
}

TEST_CASE("six-vertex fixture: virtual factor separator witness") {
  auto g = fixtures::fix6();
  Verdict v = classify(g);
  CHECK(v.status == Status::non_locally_connected);
  CHECK(v.which == VerdictCase::item2);
  REQUIRE(v.vfs.has_value());
  GenSet uv = gen_bit(g.index_of("u")) | gen_bit(g.index_of("v"));
  CHECK(v.vfs->c == uv);
  CHECK(v.vfs->d == uv);
}

TEST_CASE("octahedron: hypothesis violated") {
  Verdict v = classify(fixtures::octahedron());
  CHECK(v.status == Status::hypothesis_violated);
  CHECK(v.which == VerdictCase::none);
  REQUIRE(v.z2z2_pairs.has_value());
  CHECK(v.z2z2_pairs->size() == 3);
}

TEST_CASE("path graph: not one-ended") {
  Verdict v = classify(fixtures::path4());
  CHECK(v.status == Status::not_one_ended);
  CHECK(v.which == VerdictCase::none);
  REQUIRE(v.separator.has_value());
  CHECK(v.graph.is_clique(v.separator->cut));
}

TEST_CASE("explain output is deterministic and names witnesses") {
  std::string p5 = explain(classify(fixtures::p5()));
  CHECK(p5.find("item 2: locally connected (no virtual factor separator)") !=
        std::string::npos);
  CHECK(p5 == explain(classify(fixtures::p5())));

  std::string sq = explain(classify(fixtures::square()));
  CHECK(sq.find("item 1") != std::string::npos);
  CHECK(sq.find("{a,c}") != std::string::npos);

  std::string f6 = explain(classify(fixtures::fix6()));
  CHECK(f6.find("C = ") != std::string::npos);
  CHECK(f6.find("D = ") != std::string::npos);

  std::string oct = explain(classify(fixtures::octahedron()));
  CHECK(oct.find("hypothesis violated") != std::string::npos);

  std::string p4 = explain(classify(fixtures::path4()));
  CHECK(p4.find("not one-ended") != std::string::npos);
}

TEST_CASE("verdict JSON schema") {
  auto js = nlohmann::json::parse(verdict_json(classify(fixtures::fix6())));
  CHECK(js["status"] == "non_locally_connected");
  CHECK(js["case"] == "item2");
  CHECK(js["witnesses"].contains("vfs"));
  CHECK(js["witnesses"]["vfs"]["s"].is_string());

  auto j1 = nlohmann::json::parse(verdict_json(classify(fixtures::square())));
  CHECK(j1["status"] == "locally_connected");
  CHECK(j1["case"] == "item1");
  CHECK(j1["witnesses"].contains("dihedral_pair"));

  auto j2 = nlohmann::json::parse(verdict_json(classify(fixtures::path4())));
  CHECK(j2["status"] == "not_one_ended");
  CHECK(j2["case"] == "none");
}

TEST_CASE("non-local witness pair implies a virtual factor separator") {
  for (unsigned seed = 1; seed <= 60; ++seed) {
    auto g = fixtures::random_graph(seed);
    if (ends_class(g) != EndsClass::one_ended) continue;
    if (find_visual_z2z2_power(g, 3)) continue;
    if (find_dihedral_factor(g)) continue;
    if (find_mr_nonlocal_witness(g)) {
      INFO("seed ", seed);
      CHECK(find_virtual_factor_separator(g).has_value());
      CHECK(classify(g).status == Status::non_locally_connected);
    }
  }
}
