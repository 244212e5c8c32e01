#include "doctest.h"

#include <random>

#include "nslattice/json_io.hpp"

using namespace nslattice;
using namespace nslattice::json_io;

namespace {

// Serialise, print, re-parse: the reader sees exactly what a consumer would.
Json reparse(const Json& j) { return Json::parse(j.dump()); }

std::vector<Int> random_coeffs(std::mt19937_64& rng, std::size_t n, Int bound) {
  std::uniform_int_distribution<Int> dist(-bound, bound);
  std::vector<Int> c(n);
  for (auto& x : c) x = dist(rng);
  return c;
}

}  // namespace

TEST_CASE("family forms") {
  CHECK(family_to_json(Family::hirzebruch(3)).dump() == R"({"family":"hirzebruch","n":3})");
  CHECK(family_to_json(Family::blowup_p2(6)).dump() == R"({"family":"blowup_p2","r":6})");
  CHECK(family_to_json(Family::blowup_hirzebruch(5, 1)).dump() ==
        R"({"family":"blowup_hirzebruch","n":5,"r":1})");
  for (Int n = 0; n <= 5; ++n) {
    for (Int r = 0; r <= 5; ++r) {
      for (const auto& f : {Family::hirzebruch(n), Family::blowup_p2(r),
                            Family::blowup_hirzebruch(n, r)}) {
        CHECK(family_from_json(reparse(family_to_json(f))) == f);
      }
    }
  }
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"family":"cubic"})")), InvalidParameterError);
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"n":2})")), nlohmann::json::exception);
}

TEST_CASE("class and witness round trips") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const DivisorClass d(random_coeffs(rng, 1 + i % 12, 1000));
    CHECK(class_from_json(reparse(class_to_json(d))) == d);
    for (bool p : {true, false}) {
      const blowup::CurveWitness w{d, p};
      CHECK(witness_from_json(reparse(witness_to_json(w))) == w);
    }
  }
  std::vector<DivisorClass> many;
  for (int i = 0; i < 20; ++i) many.emplace_back(random_coeffs(rng, 4, 9));
  CHECK(classes_from_json(reparse(classes_to_json(many))) == many);
  CHECK(class_to_json({1, -2, 0}).dump() == R"({"coeffs":[1,-2,0]})");
  CHECK(witness_from_json(Json::parse(R"({"coeffs":[1,0]})")).asserted_prime);
  CHECK_THROWS_AS(class_from_json(Json::parse(R"({"coeffs":[1,"x"]})")),
                  nlohmann::json::exception);
}

TEST_CASE("model round trip") {
  const blowup::SurfaceModel m(make_lattice(Family::blowup_hirzebruch(5, 1)),
                               {{{1, 0, 0}, true}, {{0, 1, 0}, true}, {{0, 0, 1}, false}});
  const auto back = model_from_json(reparse(model_to_json(m)));
  CHECK(back.lattice() == m.lattice());
  CHECK(back.curves() == m.curves());
  CHECK_THROWS_AS(model_from_json(Json::parse(
                      R"({"lattice":{"family":"hirzebruch","n":2},"curves":[{"coeffs":[1]}]})")),
                  DimensionError);
  CHECK_THROWS_AS(
      model_from_json(Json::parse(R"({"lattice":{"family":"hirzebruch","n":-2},"curves":[]})")),
      InvalidParameterError);
}

TEST_CASE("Hirzebruch forms round trip") {
  for (Int n = 0; n <= 6; ++n) {
    for (Int a = -4; a <= 8; ++a) {
      for (Int b = -4; b <= 30; ++b) {
        const hirzebruch::HirzebruchClass c{n, a, b};
        CHECK(hirzebruch_class_from_json(reparse(hirzebruch_class_to_json(c))) == c);

        const auto e = hirzebruch::is_effective(n, a, b);
        const auto e2 = effective_from_json(reparse(effective_to_json(e)));
        REQUIRE(e.has_value() == e2.has_value());
        if (e) {
          CHECK(e->c_multiplicity == e2->c_multiplicity);
          CHECK(e->f_multiplicity == e2->f_multiplicity);
        }

        const auto v = hirzebruch::nef_decompose(n, a, b);
        CHECK(nef_from_json(reparse(nef_to_json(v))) == v);

        if (e) {
          const auto d = hirzebruch::fixed_mobile_decompose(n, a, b);
          CHECK(fixed_mobile_from_json(reparse(fixed_mobile_to_json(d)), n) == d);
        }
      }
    }
  }
  CHECK(fixed_mobile_to_json(hirzebruch::fixed_mobile_decompose(3, 2, 5)).dump() ==
        R"({"j":1,"fixed":{"a":1,"b":0},"mobile":{"a":1,"b":5}})");
  CHECK(nef_to_json(hirzebruch::nef_decompose(4, 1, 3)).dump() ==
        R"({"nef":false,"violator":"C","pairing":-1})");
  CHECK_THROWS_AS(nef_from_json(Json::parse(R"({"nef":false,"violator":"Q","pairing":0})")),
                  InvalidParameterError);
}

TEST_CASE("blowup reports round trip") {
  std::mt19937_64 rng(2);
  int checked = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const auto lattice = iter % 2 ? make_lattice(Family::blowup_p2(iter % 11))
                                  : make_lattice(Family::blowup_hirzebruch(iter % 7, iter % 5));
    std::vector<blowup::CurveWitness> ws;
    for (int k = 0; k < 5; ++k) {
      DivisorClass d(random_coeffs(rng, lattice.rank(), 3));
      if (arithmetic_genus(lattice, d) >= 0) ws.push_back({d, k != 4});
    }
    const blowup::SurfaceModel m(lattice, ws);

    const auto nef = blowup::nef_against_witnesses(m, lattice.anticanonical());
    CHECK(nef_report_from_json(reparse(nef_report_to_json(m, nef))) == nef);

    const auto forced = blowup::forced_fixed_components(m);
    CHECK(forced_report_from_json(reparse(forced_report_to_json(forced))) == forced);

    for (bool complete : {false, true}) {
      const auto r = blowup::anticanonical_consequence_check(m, complete);
      CHECK(consequence_report_from_json(reparse(consequence_report_to_json(r))) == r);
    }

    for (const auto& w : ws) {
      if (!w.asserted_prime) continue;
      ++checked;
      const auto kind = blowup::classify_fixed_component(m, w);
      CHECK(classify_report_from_json(reparse(classify_report_to_json(w, kind))) == kind);
      const auto lm = blowup::lemma_move_check(m, w);
      CHECK(lemma_move_report_from_json(reparse(lemma_move_report_to_json(w, lm))) == lm);
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("report shape") {
  const blowup::SurfaceModel m(make_lattice(Family::hirzebruch(4)),
                               {{{1, 0}, true}, {{0, 1}, true}});
  for (const auto& j :
       {nef_report_to_json(m, blowup::nef_against_witnesses(m, {2, 6})),
        forced_report_to_json(blowup::forced_fixed_components(m)),
        consequence_report_to_json(blowup::anticanonical_consequence_check(m, false)),
        classify_report_to_json({{1, 0}, true}, blowup::classify_fixed_component(m, {{1, 0}, true})),
        lemma_move_report_to_json({{1, 5}, true}, blowup::lemma_move_check(m, {{1, 5}, true}))}) {
    REQUIRE(j.is_object());
    REQUIRE(j.size() == 3);
    auto it = j.begin();
    CHECK(it.key() == "verdict");
    CHECK((++it).key() == "details");
    CHECK((++it).key() == "violators");
    CHECK(j.at("verdict").is_string());
    CHECK(j.at("details").is_object());
    CHECK(j.at("violators").is_array());
  }
  CHECK_THROWS_AS(classify_report_from_json(Json::parse(
                      R"({"verdict":"elliptic","details":{},"violators":[]})")),
                  InvalidParameterError);
}
