#include "doctest.h"

#include <random>

#include "nslattice/lattice.hpp"
#include "oracles.hpp"

using namespace nslattice;

namespace {

oracle::Coeffs raw(const DivisorClass& d) { return {d.coeffs().begin(), d.coeffs().end()}; }

DivisorClass random_class(std::mt19937_64& rng, std::size_t rank, Int bound = 15) {
  std::uniform_int_distribution<Int> dist(-bound, bound);
  std::vector<Int> c(rank);
  for (auto& x : c) x = dist(rng);
  return DivisorClass(std::move(c));
}

}  // namespace

TEST_SUITE("make_lattice") {
  TEST_CASE("F_3 gram and canonical") {
    const auto l = make_lattice(Family::hirzebruch(3));
    REQUIRE(l.rank() == 2);
    CHECK(l.gram()(0, 0) == -3);
    CHECK(l.gram()(0, 1) == 1);
    CHECK(l.gram()(1, 0) == 1);
    CHECK(l.gram()(1, 1) == 0);
    CHECK(l.canonical() == DivisorClass{-2, -5});
    CHECK(l.basis_labels() == std::vector<std::string>{"C_3", "F"});
  }

  TEST_CASE("P^2 itself") {
    const auto l = make_lattice(Family::blowup_p2(0));
    REQUIRE(l.rank() == 1);
    CHECK(l.gram()(0, 0) == 1);
    CHECK(l.canonical() == DivisorClass{-3});
    CHECK(self_intersection(l, l.canonical()) == 9);
  }

  TEST_CASE("cubic surface has K^2 = 3") {
    const auto l = make_lattice(Family::blowup_p2(6));
    CHECK(self_intersection(l, l.canonical()) == 3);
    CHECK(l.basis_labels().back() == "E_6");
  }

  TEST_CASE("blowup of F_n with r = 0 is F_n") {
    const auto a = make_lattice(Family::blowup_hirzebruch(4, 0));
    const auto b = make_lattice(Family::hirzebruch(4));
    CHECK(a.gram() == b.gram());
    CHECK(a.canonical() == b.canonical());
  }

  TEST_CASE("ranks") {
    CHECK(make_lattice(Family::hirzebruch(7)).rank() == 2);
    CHECK(make_lattice(Family::blowup_p2(5)).rank() == 6);
    CHECK(make_lattice(Family::blowup_hirzebruch(2, 3)).rank() == 5);
  }

  TEST_CASE("deterministic") {
    CHECK(make_lattice(Family::blowup_hirzebruch(2, 3)) ==
          make_lattice(Family::blowup_hirzebruch(2, 3)));
  }

  TEST_CASE("negative parameters are rejected") {
    CHECK_THROWS_AS(make_lattice(Family::hirzebruch(-1)), InvalidParameterError);
    CHECK_THROWS_AS(make_lattice(Family::blowup_p2(-2)), InvalidParameterError);
    CHECK_THROWS_AS(make_lattice(Family::blowup_hirzebruch(1, -1)), InvalidParameterError);
  }

  TEST_CASE("K^2 per family") {
    for (Int n = 0; n <= 20; ++n) {
      CHECK(self_intersection(make_lattice(Family::hirzebruch(n)),
                              make_lattice(Family::hirzebruch(n)).canonical()) == 8);
      for (Int r = 0; r <= 12; ++r) {
        const auto l = make_lattice(Family::blowup_hirzebruch(n, r));
        CHECK(self_intersection(l, l.canonical()) == 8 - r);
      }
    }
    for (Int r = 0; r <= 12; ++r) {
      const auto l = make_lattice(Family::blowup_p2(r));
      CHECK(self_intersection(l, l.canonical()) == 9 - r);
    }
  }

  TEST_CASE("unimodular with signature (1, rank - 1)") {
    std::vector<SurfaceLattice> all;
    for (Int n = 0; n <= 6; ++n) {
      all.push_back(make_lattice(Family::hirzebruch(n)));
      all.push_back(make_lattice(Family::blowup_hirzebruch(n, 4)));
    }
    for (Int r = 0; r <= 12; ++r) all.push_back(make_lattice(Family::blowup_p2(r)));
    for (const auto& l : all) {
      CAPTURE(l.rank());
      CHECK(l.gram().is_symmetric());
      const Int det = determinant(l.gram());
      CHECK((det == 1 || det == -1));
      const auto in = inertia(l.gram());
      CHECK(in.positive == 1);
      CHECK(in.negative == l.rank() - 1);
      CHECK(in.zero == 0);
    }
  }
}

TEST_SUITE("matrix helpers") {
  TEST_CASE("determinant needs a row swap for F_0") {
    IntMatrix m(2);
    m(0, 1) = 1;
    m(1, 0) = 1;
    CHECK(determinant(m) == -1);
  }

  TEST_CASE("inertia of indefinite and degenerate forms") {
    IntMatrix m(3);
    m(0, 1) = m(1, 0) = 2;
    const auto in = inertia(m);
    CHECK(in.positive == 1);
    CHECK(in.negative == 1);
    CHECK(in.zero == 1);

    IntMatrix d(3);
    d(0, 0) = 2;
    d(1, 1) = 3;
    d(2, 2) = -1;
    d(0, 1) = d(1, 0) = 1;
    CHECK(determinant(d) == -5);
    CHECK(inertia(d).positive == 2);
    CHECK(inertia(d).negative == 1);
  }
}

TEST_SUITE("intersect") {
  TEST_CASE("worked examples") {
    CHECK(intersect(make_lattice(Family::hirzebruch(2)), {1, 0}, {1, 0}) == -2);
    CHECK(intersect(make_lattice(Family::hirzebruch(5)), {1, 0}, {0, 1}) == 1);
    CHECK(intersect(make_lattice(Family::blowup_p2(3)), {1, -1, -1, 0}, {1, -1, -1, 0}) == -1);
  }

  TEST_CASE("length mismatch") {
    const auto l = make_lattice(Family::blowup_p2(3));
    CHECK_THROWS_AS(intersect(l, {1, 0}, {1, 0, 0, 0}), DimensionError);
    CHECK_THROWS_AS(intersect(l, {1, 0, 0, 0}, {1}), DimensionError);
  }

  TEST_CASE("agrees with the scripted expansion, symmetric and bilinear") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> small(-5, 5);
    for (int iter = 0; iter < 500; ++iter) {
      const Int n = iter % 9;
      const Int r = iter % 6;
      const auto lh = make_lattice(Family::blowup_hirzebruch(n, r));
      const auto lp = make_lattice(Family::blowup_p2(r));
      for (const auto* l : {&lh, &lp}) {
        const auto a = random_class(rng, l->rank());
        const auto b = random_class(rng, l->rank());
        const auto c = random_class(rng, l->rank());
        const Int s = small(rng);
        const Int t = small(rng);
        CHECK(intersect(*l, a, b) == intersect(*l, b, a));
        CHECK(intersect(*l, s * a + t * b, c) == s * intersect(*l, a, c) + t * intersect(*l, b, c));
        const Int expected = l == &lh ? oracle::pairing_hirzebruch(n, raw(a), raw(b))
                                      : oracle::pairing_p2(raw(a), raw(b));
        CHECK(intersect(*l, a, b) == expected);
      }
    }
  }
}

TEST_SUITE("genus and chi") {
  TEST_CASE("sections and fibres of F_n are rational") {
    for (Int n = 0; n <= 10; ++n) {
      const auto l = make_lattice(Family::hirzebruch(n));
      CHECK(arithmetic_genus(l, {1, 0}) == 0);
      CHECK(arithmetic_genus(l, {0, 1}) == 0);
    }
  }

  TEST_CASE("anticanonical curve has genus one") {
    CHECK(arithmetic_genus(make_lattice(Family::blowup_p2(1)), {3, -1}) == 1);
  }

  TEST_CASE("chi examples") {
    const auto l = make_lattice(Family::hirzebruch(4));
    CHECK(euler_characteristic(l, DivisorClass::zero(2)) == 1);
    for (Int n = 0; n <= 10; ++n) {
      const auto f = make_lattice(Family::hirzebruch(n));
      CHECK(euler_characteristic(f, f.anticanonical()) == 9);
    }
    const auto p9 = make_lattice(Family::blowup_p2(9));
    CHECK(euler_characteristic(p9, p9.anticanonical()) == 1);
  }

  TEST_CASE("parity over random classes") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 2000; ++iter) {
      const auto l = make_lattice(iter % 2 ? Family::blowup_p2(iter % 13)
                                           : Family::blowup_hirzebruch(iter % 7, iter % 5));
      const auto d = random_class(rng, l.rank(), 40);
      CHECK((self_intersection(l, d) + intersect(l, l.canonical(), d)) % 2 == 0);
      // chi(D) - p_a(D) = -K.D
      CHECK(euler_characteristic(l, d) - arithmetic_genus(l, d) ==
            -intersect(l, l.canonical(), d));
    }
  }

  TEST_CASE("corrupted gram data fails loudly") {
    IntMatrix g(1);
    g(0, 0) = 1;
    const auto bad = SurfaceLattice::custom(Family::blowup_p2(0), g, {"H"}, DivisorClass{-2});
    CHECK_THROWS_AS(arithmetic_genus(bad, {1}), LatticeCorruptionError);
    CHECK_THROWS_AS(euler_characteristic(bad, {1}), LatticeCorruptionError);
    CHECK(arithmetic_genus(bad, {2}) == 1);
  }
}

TEST_SUITE("h0_lower_bound") {
  TEST_CASE("examples") {
    const auto l = make_lattice(Family::hirzebruch(3));
    CHECK(h0_lower_bound(l, {1, 5}) == 9);
    CHECK(h0_lower_bound(l, {0, 0}) == 1);
    CHECK_FALSE(provably_not_effective(l, {1, 5}));
  }

  TEST_CASE("clamped at zero") {
    const auto l = make_lattice(Family::blowup_p2(1));
    // chi(2E_1) = 1 + (-4 + 2)/2, chi(3E_1) = 1 + (-9 + 3)/2
    CHECK(euler_characteristic(l, {0, 2}) == 0);
    CHECK(euler_characteristic(l, {0, 3}) == -2);
    CHECK(h0_lower_bound(l, {0, 3}) == 0);
  }

  TEST_CASE("positive prime classes with K.D <= -1 get at least 2") {
    for (Int n = 0; n <= 8; ++n) {
      const auto l = make_lattice(Family::hirzebruch(n));
      // C_n + bF with b > n is prime with positive square.
      for (Int b = n + 1; b <= n + 6; ++b) {
        const DivisorClass d{1, b};
        REQUIRE(self_intersection(l, d) > 0);
        REQUIRE(intersect(l, l.canonical(), d) <= -1);
        CHECK(h0_lower_bound(l, d) >= 2);
      }
    }
  }

  TEST_CASE("effectivity precondition") {
    const auto f3 = make_lattice(Family::hirzebruch(3));
    CHECK(provably_not_effective(f3, {-1, 5}));  // meets F negatively
    CHECK(provably_not_effective(f3, {1, -1}));  // meets C_3 + 3F negatively
    CHECK_FALSE(provably_not_effective(f3, {2, 0}));
    const auto p = make_lattice(Family::blowup_p2(2));
    CHECK(provably_not_effective(p, {-6, 0, 0}));
    CHECK(provably_not_effective(p, {1, -2, 0}));  // H - E_1 meets it in -1
    CHECK_FALSE(provably_not_effective(p, {0, 3, 0}));
    CHECK_THROWS_AS(provably_not_effective(p, {1}), DimensionError);
  }

  TEST_CASE("known nef classes are nef against the basis curves") {
    for (const auto& l : {make_lattice(Family::blowup_p2(5)),
                          make_lattice(Family::blowup_hirzebruch(3, 2)),
                          make_lattice(Family::hirzebruch(4))}) {
      for (const auto& n : known_nef_classes(l)) {
        CHECK(self_intersection(l, n) >= 0);
        for (std::size_t i = 0; i < l.rank(); ++i) {
          CHECK(intersect(l, n, DivisorClass::unit(l.rank(), i)) >= 0);
        }
      }
    }
  }
}

TEST_SUITE("basis changes") {
  TEST_CASE("F_1 to P^2") {
    const auto f1 = make_lattice(Family::hirzebruch(1));
    const auto p = make_lattice(Family::blowup_p2(1));
    CHECK(basis_change_f1_to_p2(f1, {1, 0}) == DivisorClass{0, 1});
    CHECK(basis_change_f1_to_p2(f1, {0, 1}) == DivisorClass{1, -1});
    CHECK(basis_change_f1_to_p2(f1, f1.canonical()) == p.canonical());
    CHECK(self_intersection(p, basis_change_f1_to_p2(f1, {1, 0})) == -1);
    CHECK(self_intersection(p, basis_change_f1_to_p2(f1, {0, 1})) == 0);
    CHECK_NOTHROW(basis_change_f1_to_p2(make_lattice(Family::blowup_hirzebruch(1, 0)), {1, 0}));
  }

  TEST_CASE("Bl F_0 to Bl_2 P^2") {
    const auto src = make_lattice(Family::blowup_hirzebruch(0, 1));
    const auto p = make_lattice(Family::blowup_p2(2));
    CHECK(basis_change_blf0_to_p2(src, {0, 0, 1}) == DivisorClass{1, -1, -1});
    CHECK(basis_change_blf0_to_p2(src, src.canonical()) == DivisorClass{-3, 1, 1});
    CHECK(basis_change_blf0_to_p2(src, src.canonical()) == p.canonical());
    CHECK(intersect(p, basis_change_blf0_to_p2(src, {1, 0, 0}),
                    basis_change_blf0_to_p2(src, {0, 1, 0})) == 1);
  }

  TEST_CASE("wrong source family") {
    CHECK_THROWS_AS(basis_change_f1_to_p2(make_lattice(Family::hirzebruch(2)), {1, 0}),
                    FamilyError);
    CHECK_THROWS_AS(basis_change_f1_to_p2(make_lattice(Family::blowup_p2(1)), {1, 0}),
                    FamilyError);
    CHECK_THROWS_AS(basis_change_blf0_to_p2(make_lattice(Family::blowup_hirzebruch(1, 1)),
                                            {1, 0, 0}),
                    FamilyError);
    CHECK_THROWS_AS(basis_change_blf0_to_p2(make_lattice(Family::blowup_hirzebruch(0, 1)),
                                            {1, 0}),
                    DimensionError);
  }
}

TEST_SUITE("enumerate_negative_rational_classes") {
  const auto enumerate = [](Int r, Int s, Int bound) {
    return enumerate_negative_rational_classes(make_lattice(Family::blowup_p2(r)), s, bound);
  };

  TEST_CASE("small cases") {
    CHECK(enumerate(1, -1, 7) == std::vector<DivisorClass>{{0, 1}});
    CHECK(enumerate(2, -1, 7) ==
          std::vector<DivisorClass>{{0, 0, 1}, {0, 1, 0}, {1, -1, -1}});
    CHECK(enumerate(2, -2, 7) == std::vector<DivisorClass>{{0, -1, 1}, {0, 1, -1}});
    CHECK(enumerate(3, -2, 7).size() == 7);
    CHECK(enumerate(6, -1, 7).size() == 27);
    CHECK(enumerate(0, -1, 7).empty());
  }

  TEST_CASE("matches the brute-force walk") {
    for (Int r = 1; r <= 4; ++r) {
      for (Int s : {-1, -2, -3}) {
        CAPTURE(r);
        CAPTURE(s);
        const auto got = enumerate(r, s, 5);
        const auto want = oracle::brute_force_rational_classes(r, s, 5);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(raw(got[i]) == want[i]);
      }
    }
  }

  TEST_CASE("no (-1)-classes of degree 8..12 when r <= 8") {
    for (Int r = 1; r <= 8; ++r) {
      for (const auto& c : enumerate(r, -1, 12)) CHECK(c[0] <= 7);
    }
  }

  TEST_CASE("adjunction forces K.C") {
    for (Int r = 1; r <= 7; ++r) {
      const auto l = make_lattice(Family::blowup_p2(r));
      for (const auto& c : enumerate(r, -1, 7)) CHECK(intersect(l, l.canonical(), c) == -1);
      for (const auto& c : enumerate(r, -2, 7)) CHECK(intersect(l, l.canonical(), c) == 0);
    }
  }

  TEST_CASE("input validation") {
    CHECK_THROWS_AS(enumerate_negative_rational_classes(make_lattice(Family::hirzebruch(1)), -1, 7),
                    FamilyError);
    CHECK_THROWS_AS(enumerate(3, 0, 7), InvalidParameterError);
    CHECK_THROWS_AS(enumerate(3, -1, -1), InvalidParameterError);
  }
}
