#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nslattice/lattice.hpp"

namespace nslattice::blowup {

// A class the caller asserts to contain a prime divisor. Primality is not
// computable from the class; only p_a >= 0 is checked.
struct CurveWitness {
  DivisorClass cls;
  bool asserted_prime = true;

  bool operator==(const CurveWitness&) const = default;
};

// A lattice plus a possibly incomplete list of known prime classes.
class SurfaceModel {
 public:
  // Throws DimensionError on a length mismatch and PreconditionError when a
  // prime-asserted witness has negative arithmetic genus.
  SurfaceModel(SurfaceLattice lattice, std::vector<CurveWitness> curves);

  const SurfaceLattice& lattice() const { return lattice_; }
  const std::vector<CurveWitness>& curves() const { return curves_; }

  // Validates a single witness against this model's lattice.
  void validate(const CurveWitness& w) const;

 private:
  SurfaceLattice lattice_;
  std::vector<CurveWitness> curves_;
};

// Nefness relative to the witnesses in the model, never absolute.
struct NefVerdict {
  bool nef_relative = true;
  bool empty_evidence = false;
  std::optional<std::size_t> violator_index;
  Int pairing = 0;  // D.violator when violated

  bool operator==(const NefVerdict&) const = default;
};

NefVerdict nef_against_witnesses(const SurfaceModel& model, const DivisorClass& d);

// Prime witnesses C with -K.C < 0, in list order.
std::vector<CurveWitness> forced_fixed_components(const SurfaceModel& model);

struct NegativeRational {
  Int n = 1;
  bool operator==(const NegativeRational&) const = default;
};
struct GenusOne {
  Int self_int = 0;
  bool operator==(const GenusOne&) const = default;
};
struct TheoremViolation {
  std::string reason;
  bool operator==(const TheoremViolation&) const = default;
};

using FixedComponentKind = std::variant<NegativeRational, GenusOne, TheoremViolation>;

// What a fixed prime component of |-K| may be:
//   p_a = 0, G^2 <= -1   a (-n)-curve
//   p_a = 1, G^2 <= 0    a genus-one curve; G^2 = 0 needs K^2 = 0
// and when K^2 > 0 only the first case survives. Anything else is reported
// as a TheoremViolation, meaning the witness data cannot describe a real
// fixed component.
FixedComponentKind classify_fixed_component(const SurfaceModel& model,
                                            const CurveWitness& g);

std::string kind_name(const FixedComponentKind& kind);

enum class Verdict {
  Consistent,
  IncompleteOrNotNef,
  Inconclusive,
  NegativeCurveVerified,
  NotApplicable,
  Verified,
  TheoremViolation,
};

std::string verdict_name(Verdict v);
Verdict parse_verdict_name(const std::string& name);

struct Check {
  std::string name;
  Int lhs = 0;
  Int rhs = 0;
  bool passed = true;
  bool operator==(const Check&) const = default;
};

struct ConsequenceReport {
  Verdict verdict = Verdict::Consistent;
  bool nef_relative = true;
  bool witness_complete = false;
  Int k_squared = 0;
  Int rank = 0;
  std::vector<Check> checks;
  std::vector<DivisorClass> forced;     // forced fixed components examined
  std::vector<DivisorClass> violators;  // classes behind a failed check

  bool operator==(const ConsequenceReport&) const = default;
};

// When -K is nef relative to the witnesses: K^2 >= 0, rho <= 10 and, on
// blowups of P^2, r <= 9. A failure is a contradiction only when the caller
// asserts the witness list is complete; otherwise the verdict is
// Inconclusive.
//
// When -K is not nef relative and K^2 >= 0: every forced fixed component of
// arithmetic genus 0 must be a (-n)-curve with n >= 3.
ConsequenceReport anticanonical_consequence_check(const SurfaceModel& model,
                                                  bool witness_complete);

struct LemmaMoveReport {
  Verdict verdict = Verdict::NotApplicable;
  Int self_int = 0;
  Int k_dot = 0;
  Int bound = 0;
  bool operator==(const LemmaMoveReport&) const = default;
};

// A prime class with positive self-intersection on an anticanonical surface
// moves: h0 >= 2. Reports NotApplicable for G^2 <= 0 and TheoremViolation if
// the Riemann–Roch bound comes out below 2.
LemmaMoveReport lemma_move_check(const SurfaceModel& model, const CurveWitness& g);

}  // namespace nslattice::blowup
