#include "nslattice/selfcheck.hpp"

#include <array>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "nslattice/blowup.hpp"
#include "nslattice/hirzebruch.hpp"

namespace nslattice::selfcheck {

namespace {

// Accumulates a pass/fail verdict and remembers the first failure.
class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what;
    }
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string show(Int a, Int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

DivisorClass random_class(std::mt19937_64& rng, std::size_t rank, Int bound) {
  std::uniform_int_distribution<Int> coeff(-bound, bound);
  std::vector<Int> c(rank);
  for (auto& x : c) x = coeff(rng);
  return DivisorClass(std::move(c));
}

std::vector<Family> random_families(std::mt19937_64& rng, const Config& cfg) {
  std::uniform_int_distribution<Int> n_dist(0, cfg.lattice_n_max);
  std::uniform_int_distribution<Int> r_dist(0, cfg.lattice_r_max);
  return {Family::hirzebruch(n_dist(rng)), Family::blowup_p2(r_dist(rng)),
          Family::blowup_hirzebruch(n_dist(rng), r_dist(rng))};
}

CheckResult check_anticanonical_locus(const Config& cfg) {
  Tally t("anticanonical fixed locus on F_n");
  for (Int n = 0; n <= cfg.anticanonical_n_max; ++n) {
    const auto d = hirzebruch::anticanonical_fixed_locus(n);
    if (n <= 2) {
      t.expect(d.j == 0 && d.fixed.a == 0 && d.fixed.b == 0,
               "n=" + std::to_string(n) + " has a fixed part");
    } else {
      t.expect(d.j == 1 && d.fixed.a == 1 && d.fixed.b == 0 && d.mobile.a == 1 &&
                   d.mobile.b == n + 2,
               "n=" + std::to_string(n) + " fixed part is not C_n");
    }
  }
  return t.done();
}

CheckResult check_fixed_mobile_scan(const Config& cfg) {
  Tally t("fixed/mobile j unique and closed form");
  for (Int n = 1; n <= cfg.fixed_mobile_n_max; ++n) {
    for (Int a = 1; a <= cfg.fixed_mobile_a_max; ++a) {
      for (Int b = 0; b <= a * n - 1; ++b) {
        Int matches = 0;
        Int found = -1;
        for (Int j = 1; j <= a; ++j) {
          if ((a - j) * n <= b && b <= (a - j + 1) * n - 1) {
            ++matches;
            found = j;
          }
        }
        const auto d = hirzebruch::fixed_mobile_decompose(n, a, b);
        t.expect(matches == 1 && d.j == found,
                 "n=" + std::to_string(n) + " class " + show(a, b));
      }
    }
  }
  return t.done();
}

CheckResult check_monoids(const Config& cfg) {
  Tally t("effective and nef monoids on F_n");
  for (Int n = 0; n <= cfg.monoid_n_max; ++n) {
    std::set<std::pair<Int, Int>> effective;
    std::set<std::pair<Int, Int>> nef;
    for (Int i = 0; i <= cfg.monoid_copies; ++i) {
      for (Int k = 0; i + k <= cfg.monoid_copies; ++k) {
        effective.insert({i, k});
        nef.insert({i, i * n + k});
      }
    }
    for (Int a = -cfg.monoid_box; a <= cfg.monoid_box; ++a) {
      for (Int b = -cfg.monoid_box; b <= cfg.monoid_box; ++b) {
        const bool eff = hirzebruch::is_effective(n, a, b).has_value();
        const auto verdict = hirzebruch::nef_decompose(n, a, b);
        const bool is_nef = std::holds_alternative<hirzebruch::NefDecomposition>(verdict);
        const bool pairing_nef =
            hirzebruch::pairing(n, a, b, 1, 0) >= 0 && hirzebruch::pairing(n, a, b, 0, 1) >= 0;
        const std::string where = "n=" + std::to_string(n) + " class " + show(a, b);
        t.expect(eff == effective.contains({a, b}), "effective mismatch at " + where);
        t.expect(is_nef == nef.contains({a, b}), "nef mismatch at " + where);
        t.expect(is_nef == pairing_nef, "nef/pairing mismatch at " + where);
        t.expect(!is_nef || eff, "nef but not effective at " + where);
      }
    }
  }
  return t.done();
}

CheckResult check_lattice_invariants(const Config& cfg) {
  Tally t("lattice unimodularity, signature, K^2, parity");
  std::vector<std::pair<SurfaceLattice, Int>> lattices;
  for (Int n = 0; n <= cfg.lattice_n_max; ++n) {
    lattices.emplace_back(make_lattice(Family::hirzebruch(n)), 8);
    for (Int r = 0; r <= cfg.lattice_r_max; ++r) {
      lattices.emplace_back(make_lattice(Family::blowup_hirzebruch(n, r)), 8 - r);
    }
  }
  for (Int r = 0; r <= cfg.lattice_r_max; ++r) {
    lattices.emplace_back(make_lattice(Family::blowup_p2(r)), 9 - r);
  }
  for (const auto& [lattice, k2] : lattices) {
    const auto name = family_name(lattice.family().kind) + " n=" +
                      std::to_string(lattice.family().n) + " r=" +
                      std::to_string(lattice.family().r);
    const Int det = determinant(lattice.gram());
    const auto in = inertia(lattice.gram());
    t.expect(lattice.gram().is_symmetric(), name + " gram not symmetric");
    t.expect(det == 1 || det == -1, name + " not unimodular");
    t.expect(in.positive == 1 && in.negative + 1 == lattice.rank() && in.zero == 0,
             name + " signature");
    t.expect(self_intersection(lattice, lattice.canonical()) == k2, name + " K^2");
  }

  std::mt19937_64 rng(cfg.seed);
  for (Int i = 0; i < cfg.random_classes; ++i) {
    for (const auto& family : random_families(rng, cfg)) {
      const auto lattice = make_lattice(family);
      const auto d = random_class(rng, lattice.rank(), cfg.random_coeff);
      const Int v = self_intersection(lattice, d) + intersect(lattice, lattice.canonical(), d);
      t.expect(v % 2 == 0, "odd D^2 + K.D for " + to_string(d));
    }
  }
  return t.done();
}

CheckResult check_isometries(const Config& cfg) {
  Tally t("basis changes are isometries preserving K");
  struct Route {
    SurfaceLattice source;
    SurfaceLattice target;
    DivisorClass (*map)(const SurfaceLattice&, const DivisorClass&);
  };
  const std::array<Route, 2> routes = {
      Route{make_lattice(Family::hirzebruch(1)), make_lattice(Family::blowup_p2(1)),
            &basis_change_f1_to_p2},
      Route{make_lattice(Family::blowup_hirzebruch(0, 1)), make_lattice(Family::blowup_p2(2)),
            &basis_change_blf0_to_p2},
  };
  std::mt19937_64 rng(cfg.seed + 1);
  for (const auto& route : routes) {
    const std::size_t rank = route.source.rank();
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = 0; j < rank; ++j) {
        const auto ei = DivisorClass::unit(rank, i);
        const auto ej = DivisorClass::unit(rank, j);
        t.expect(intersect(route.source, ei, ej) ==
                     intersect(route.target, route.map(route.source, ei),
                               route.map(route.source, ej)),
                 "basis pairing not preserved");
      }
    }
    t.expect(route.map(route.source, route.source.canonical()) == route.target.canonical(),
             "canonical not mapped to canonical");
    for (Int k = 0; k < 1000; ++k) {
      const auto x = random_class(rng, rank, cfg.random_coeff);
      const auto y = random_class(rng, rank, cfg.random_coeff);
      t.expect(intersect(route.source, x, y) ==
                   intersect(route.target, route.map(route.source, x),
                             route.map(route.source, y)),
               "random pairing not preserved for " + to_string(x));
    }
  }
  return t.done();
}

CheckResult check_enumeration(const Config& cfg) {
  Tally t("(-1)-class enumeration on blowups of P^2");
  // Number of exceptional classes on the r-fold blowup of P^2, r = 1..8.
  constexpr std::array<std::size_t, 9> kKnown = {0, 1, 3, 6, 10, 16, 27, 56, 240};
  for (Int r = 1; r <= std::min<Int>(cfg.enumeration_r_max, 8); ++r) {
    const auto lattice = make_lattice(Family::blowup_p2(r));
    const auto low = enumerate_negative_rational_classes(lattice, -1, cfg.degree_bound);
    const auto high = enumerate_negative_rational_classes(lattice, -1, cfg.stability_bound);
    const std::string where = "r=" + std::to_string(r);
    t.expect(low == high, where + " not stable under a larger degree bound");
    t.expect(low.size() == kKnown[static_cast<std::size_t>(r)],
             where + " count " + std::to_string(low.size()));
    for (const auto& c : low) {
      t.expect(self_intersection(lattice, c) == -1 && arithmetic_genus(lattice, c) == 0 &&
                   intersect(lattice, lattice.canonical(), c) == -1,
               where + " bad class " + to_string(c));
    }
    for (const auto& c : enumerate_negative_rational_classes(lattice, -2, cfg.degree_bound)) {
      t.expect(self_intersection(lattice, c) == -2 && intersect(lattice, lattice.canonical(), c) == 0,
               where + " bad (-2)-class " + to_string(c));
    }
  }
  return t.done();
}

CheckResult check_classifier(const Config& cfg) {
  Tally t("fixed component classifier");
  {
    const auto lattice = make_lattice(Family::blowup_p2(9));
    const blowup::SurfaceModel model(lattice, {});
    const auto kind = blowup::classify_fixed_component(model, {lattice.anticanonical(), true});
    t.expect(kind == blowup::FixedComponentKind{blowup::GenusOne{0}},
             "-K on the 9-fold blowup is not genus one with square 0");
  }
  std::vector<SurfaceLattice> positive;
  for (Int r = 0; r <= 8; ++r) positive.push_back(make_lattice(Family::blowup_p2(r)));
  for (Int n = 0; n <= cfg.lattice_n_max; ++n) {
    positive.push_back(make_lattice(Family::hirzebruch(n)));
    for (Int r = 0; r <= 7; ++r) positive.push_back(make_lattice(Family::blowup_hirzebruch(n, r)));
  }
  for (const auto& lattice : positive) {
    const blowup::SurfaceModel model(lattice, {});
    // By the Hodge index theorem the zero class is the only genus-one class of
    // square 0 orthogonal to K when K^2 > 0.
    const auto kind =
        blowup::classify_fixed_component(model, {DivisorClass::zero(lattice.rank()), true});
    t.expect(std::holds_alternative<blowup::TheoremViolation>(kind),
             "genus-one square-0 class accepted with K^2 > 0");
  }
  for (Int n = 0; n <= cfg.anticanonical_n_max; ++n) {
    const auto lattice = make_lattice(Family::hirzebruch(n));
    const blowup::SurfaceModel model(lattice, {{{1, 0}, true}, {{0, 1}, true}});
    const auto forced = blowup::forced_fixed_components(model);
    if (n <= 2) {
      t.expect(forced.empty(), "F_" + std::to_string(n) + " has forced components");
    } else {
      t.expect(forced.size() == 1 && forced[0].cls == DivisorClass{1, 0} &&
                   blowup::classify_fixed_component(model, forced[0]) ==
                       blowup::FixedComponentKind{blowup::NegativeRational{n}},
               "F_" + std::to_string(n) + " forced component is not C_n");
    }
  }
  return t.done();
}

CheckResult check_negative_curve_arithmetic(const Config& cfg) {
  Tally t("p_a = 0 and K.C >= 1 force C^2 <= -3");
  std::mt19937_64 rng(cfg.seed + 2);
  Int found = 0;
  const Int max_attempts = std::max<Int>(cfg.random_classes, 1) * 2000;
  for (Int attempt = 0; found < cfg.random_classes && attempt < max_attempts; ++attempt) {
    for (const auto& family : random_families(rng, cfg)) {
      const auto lattice = make_lattice(family);
      const auto c = random_class(rng, lattice.rank(), 3);
      if (arithmetic_genus(lattice, c) != 0) continue;
      const Int s = self_intersection(lattice, c);
      const Int kc = intersect(lattice, lattice.canonical(), c);
      t.expect(s == -2 - kc, "adjunction identity fails for " + to_string(c));
      if (kc >= 1) {
        ++found;
        t.expect(s <= -3, "square above -3 for " + to_string(c));
      }
    }
  }
  t.expect(found >= cfg.random_classes, "not enough sampled classes");
  return t.done();
}

}  // namespace

Config config_from_json(const nlohmann::json& j) {
  Config c;
  const std::array<std::pair<const char*, Int*>, 13> fields = {{
      {"anticanonical_n_max", &c.anticanonical_n_max},
      {"fixed_mobile_n_max", &c.fixed_mobile_n_max},
      {"fixed_mobile_a_max", &c.fixed_mobile_a_max},
      {"monoid_n_max", &c.monoid_n_max},
      {"monoid_box", &c.monoid_box},
      {"monoid_copies", &c.monoid_copies},
      {"random_classes", &c.random_classes},
      {"random_coeff", &c.random_coeff},
      {"lattice_n_max", &c.lattice_n_max},
      {"lattice_r_max", &c.lattice_r_max},
      {"enumeration_r_max", &c.enumeration_r_max},
      {"degree_bound", &c.degree_bound},
      {"stability_bound", &c.stability_bound},
  }};
  for (const auto& [key, value] : j.items()) {
    if (key == "seed") {
      c.seed = value.get<std::uint64_t>();
      continue;
    }
    bool known = false;
    for (const auto& [name, slot] : fields) {
      if (key == name) {
        *slot = value.get<Int>();
        known = true;
      }
    }
    if (!known) throw InvalidParameterError("unknown selfcheck config key '" + key + "'");
  }
  return c;
}

nlohmann::ordered_json config_to_json(const Config& c) {
  nlohmann::ordered_json j;
  j["anticanonical_n_max"] = c.anticanonical_n_max;
  j["fixed_mobile_n_max"] = c.fixed_mobile_n_max;
  j["fixed_mobile_a_max"] = c.fixed_mobile_a_max;
  j["monoid_n_max"] = c.monoid_n_max;
  j["monoid_box"] = c.monoid_box;
  j["monoid_copies"] = c.monoid_copies;
  j["random_classes"] = c.random_classes;
  j["random_coeff"] = c.random_coeff;
  j["lattice_n_max"] = c.lattice_n_max;
  j["lattice_r_max"] = c.lattice_r_max;
  j["enumeration_r_max"] = c.enumeration_r_max;
  j["degree_bound"] = c.degree_bound;
  j["stability_bound"] = c.stability_bound;
  j["seed"] = c.seed;
  return j;
}

std::vector<CheckResult> run_all(const Config& config) {
  return {
      check_anticanonical_locus(config),  check_fixed_mobile_scan(config),
      check_monoids(config),              check_lattice_invariants(config),
      check_isometries(config),           check_enumeration(config),
      check_classifier(config),           check_negative_curve_arithmetic(config),
  };
}

}  // namespace nslattice::selfcheck
