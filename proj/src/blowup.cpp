#include "nslattice/blowup.hpp"

#include <algorithm>

namespace nslattice::blowup {

SurfaceModel::SurfaceModel(SurfaceLattice lattice, std::vector<CurveWitness> curves)
    : lattice_(std::move(lattice)), curves_(std::move(curves)) {
  for (const auto& w : curves_) validate(w);
}

void SurfaceModel::validate(const CurveWitness& w) const {
  check_dimension(lattice_, w.cls);
  if (w.asserted_prime && arithmetic_genus(lattice_, w.cls) < 0) {
    throw PreconditionError("witness " + to_string(w.cls) +
                            " is asserted prime but has negative arithmetic genus");
  }
}

NefVerdict nef_against_witnesses(const SurfaceModel& model, const DivisorClass& d) {
  check_dimension(model.lattice(), d);
  NefVerdict verdict;
  verdict.empty_evidence = model.curves().empty();
  for (std::size_t i = 0; i < model.curves().size(); ++i) {
    const Int p = intersect(model.lattice(), d, model.curves()[i].cls);
    if (p < 0) {
      verdict.nef_relative = false;
      verdict.violator_index = i;
      verdict.pairing = p;
      break;
    }
  }
  return verdict;
}

std::vector<CurveWitness> forced_fixed_components(const SurfaceModel& model) {
  const DivisorClass minus_k = model.lattice().anticanonical();
  std::vector<CurveWitness> out;
  std::copy_if(model.curves().begin(), model.curves().end(), std::back_inserter(out),
               [&](const CurveWitness& w) {
                 return w.asserted_prime && intersect(model.lattice(), minus_k, w.cls) < 0;
               });
  return out;
}

FixedComponentKind classify_fixed_component(const SurfaceModel& model,
                                            const CurveWitness& g) {
  if (!g.asserted_prime) {
    throw PreconditionError("classify_fixed_component needs a prime-asserted witness");
  }
  model.validate(g);
  const auto& lattice = model.lattice();
  const Int pa = arithmetic_genus(lattice, g.cls);
  const Int s = self_intersection(lattice, g.cls);
  const Int k2 = self_intersection(lattice, lattice.canonical());
  const std::string values = "p_a=" + std::to_string(pa) + ", C^2=" + std::to_string(s) +
                             ", K^2=" + std::to_string(k2);

  if (pa == 0 && s <= -1) return NegativeRational{-s};
  if (pa == 1 && s <= 0) {
    if (k2 > 0) {
      return TheoremViolation{"genus-one fixed component on a surface with K^2 > 0 (" +
                              values + ")"};
    }
    if (s == 0 && k2 != 0) {
      return TheoremViolation{"genus-one fixed component with C^2 = 0 requires K^2 = 0 (" +
                              values + ")"};
    }
    return GenusOne{s};
  }
  if (pa == 0 && s >= 0) {
    return TheoremViolation{"rational class with nonnegative self-intersection moves (" +
                            values + ")"};
  }
  return TheoremViolation{"no fixed component of |-K| has these invariants (" + values + ")"};
}

std::string kind_name(const FixedComponentKind& kind) {
  struct {
    std::string operator()(const NegativeRational&) const { return "negative_rational"; }
    std::string operator()(const GenusOne&) const { return "genus_one"; }
    std::string operator()(const TheoremViolation&) const { return "theorem_violation"; }
  } visitor;
  return std::visit(visitor, kind);
}

namespace {

constexpr std::pair<Verdict, const char*> kVerdictNames[] = {
    {Verdict::Consistent, "consistent"},
    {Verdict::IncompleteOrNotNef, "incomplete_or_not_anticanonical_nef"},
    {Verdict::Inconclusive, "inconclusive"},
    {Verdict::NegativeCurveVerified, "negative_curve_fixed_component_verified"},
    {Verdict::NotApplicable, "not_applicable"},
    {Verdict::Verified, "verified"},
    {Verdict::TheoremViolation, "theorem_violation"},
};

}  // namespace

std::string verdict_name(Verdict v) {
  for (const auto& [value, name] : kVerdictNames)
    if (value == v) return name;
  return "unknown";
}

Verdict parse_verdict_name(const std::string& name) {
  for (const auto& [value, text] : kVerdictNames)
    if (name == text) return value;
  throw InvalidParameterError("unknown verdict '" + name + "'");
}

ConsequenceReport anticanonical_consequence_check(const SurfaceModel& model,
                                                  bool witness_complete) {
  const auto& lattice = model.lattice();
  const DivisorClass minus_k = lattice.anticanonical();

  ConsequenceReport report;
  report.witness_complete = witness_complete;
  report.k_squared = self_intersection(lattice, lattice.canonical());
  report.rank = static_cast<Int>(lattice.rank());
  report.nef_relative = nef_against_witnesses(model, minus_k).nef_relative;

  if (report.nef_relative) {
    report.checks.push_back({"K^2 >= 0", report.k_squared, 0, report.k_squared >= 0});
    report.checks.push_back({"rho <= 10", report.rank, 10, report.rank <= 10});
    if (lattice.family().kind == FamilyKind::BlowupP2) {
      const Int r = lattice.family().r;
      report.checks.push_back({"r <= 9", r, 9, r <= 9});
    }
    const bool all_passed = std::all_of(report.checks.begin(), report.checks.end(),
                                        [](const Check& c) { return c.passed; });
    if (all_passed) {
      report.verdict = Verdict::Consistent;
    } else {
      report.verdict = witness_complete ? Verdict::IncompleteOrNotNef : Verdict::Inconclusive;
    }
    return report;
  }

  for (const auto& w : forced_fixed_components(model)) report.forced.push_back(w.cls);

  if (report.k_squared < 0) {
    report.verdict = Verdict::NotApplicable;
    return report;
  }

  bool any_rational = false;
  for (const auto& c : report.forced) {
    if (arithmetic_genus(lattice, c) != 0) continue;
    any_rational = true;
    const Int s = self_intersection(lattice, c);
    const bool ok = s <= -3;
    report.checks.push_back({"C^2 <= -3 for " + to_string(c), s, -3, ok});
    if (!ok) report.violators.push_back(c);
  }
  if (!report.violators.empty()) {
    report.verdict = Verdict::TheoremViolation;
  } else if (!any_rational) {
    report.verdict = Verdict::Inconclusive;
  } else {
    report.verdict = Verdict::NegativeCurveVerified;
  }
  return report;
}

LemmaMoveReport lemma_move_check(const SurfaceModel& model, const CurveWitness& g) {
  if (!g.asserted_prime) {
    throw PreconditionError("lemma_move_check needs a prime-asserted witness");
  }
  model.validate(g);
  const auto& lattice = model.lattice();
  LemmaMoveReport report;
  report.self_int = self_intersection(lattice, g.cls);
  report.k_dot = intersect(lattice, lattice.canonical(), g.cls);
  if (report.self_int <= 0) {
    report.verdict = Verdict::NotApplicable;
    return report;
  }
  report.bound = h0_lower_bound(lattice, g.cls);
  report.verdict = report.bound >= 2 ? Verdict::Verified : Verdict::TheoremViolation;
  return report;
}

}  // namespace nslattice::blowup
