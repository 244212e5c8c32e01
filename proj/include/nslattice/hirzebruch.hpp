#pragma once

#include <optional>
#include <variant>

#include "nslattice/lattice.hpp"

namespace nslattice::hirzebruch {

// The class a*C_n + b*F on F_n.
struct HirzebruchClass {
  Int n = 0;
  Int a = 0;
  Int b = 0;

  // -n a^2 + 2ab
  Int self_intersection() const { return -n * a * a + 2 * a * b; }
  DivisorClass to_divisor() const { return DivisorClass{a, b}; }

  bool operator==(const HirzebruchClass&) const = default;
};

HirzebruchClass operator+(const HirzebruchClass& x, const HirzebruchClass& y);

// Pairing on F_n: C_n^2 = -n, C_n.F = 1, F^2 = 0.
Int pairing(Int n, Int a1, Int b1, Int a2, Int b2);

// Multiplicities of the generators C_n and F of the effective monoid.
struct EffectiveWitness {
  Int c_multiplicity = 0;
  Int f_multiplicity = 0;
};

// x = s (C_n + nF) + t F with s, t >= 0.
struct NefDecomposition {
  Int s = 0;
  Int t = 0;
  bool operator==(const NefDecomposition&) const = default;
};

enum class Generator { C, F };

// The generator of the effective monoid that x pairs negatively with.
struct NotNef {
  Generator violator = Generator::C;
  Int pairing = 0;
  bool operator==(const NotNef&) const = default;
};

using NefVerdict = std::variant<NefDecomposition, NotNef>;

struct FixedMobileDecomposition {
  HirzebruchClass fixed;   // j * C_n
  HirzebruchClass mobile;  // (a - j) C_n + b F
  Int j = 0;

  bool has_fixed_component() const { return j > 0; }
  bool operator==(const FixedMobileDecomposition&) const = default;
};

// Effective classes on F_n are exactly N C_n + N F.
std::optional<EffectiveWitness> is_effective(Int n, Int a, Int b);

// Nef classes on F_n are exactly N (C_n + nF) + N F. On failure reports the
// pairing with F when a < 0, otherwise the pairing with C_n.
NefVerdict nef_decompose(Int n, Int a, Int b);

// Splits |aC_n + bF| into its fixed part j C_n and its mobile part.
//
// For n = 0, or b >= a n, there is no fixed part. Otherwise j is the unique
// integer in [1, a] with (a - j) n <= b <= (a - j + 1) n - 1, computed as
// a - floor(b / n).
//
// Throws NotEffectiveError when the class is not effective.
FixedMobileDecomposition fixed_mobile_decompose(Int n, Int a, Int b);

// -K = 2 C_n + (n + 2) F.
HirzebruchClass anticanonical_class(Int n);

// Fixed part of |-K_{F_n}|: empty for n <= 2, exactly C_n for n >= 3.
FixedMobileDecomposition anticanonical_fixed_locus(Int n);

}  // namespace nslattice::hirzebruch
