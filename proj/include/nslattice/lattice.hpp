#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "nslattice/errors.hpp"

namespace nslattice {

using Int = std::int64_t;

enum class FamilyKind { Hirzebruch, BlowupP2, BlowupHirzebruch };

// Which surface a lattice models. `n` is ignored for BlowupP2 and `r` for
// Hirzebruch.
struct Family {
  FamilyKind kind = FamilyKind::BlowupP2;
  Int n = 0;
  Int r = 0;

  static Family hirzebruch(Int n) { return {FamilyKind::Hirzebruch, n, 0}; }
  static Family blowup_p2(Int r) { return {FamilyKind::BlowupP2, 0, r}; }
  static Family blowup_hirzebruch(Int n, Int r) {
    return {FamilyKind::BlowupHirzebruch, n, r};
  }

  bool operator==(const Family&) const = default;
};

std::string family_name(FamilyKind kind);
FamilyKind parse_family_name(const std::string& name);

// Integer coefficient vector in the basis of some lattice. The class does not
// know its lattice; every lattice operation checks the length.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {}
  DivisorClass(std::initializer_list<Int> coeffs) : coeffs_(coeffs) {}

  static DivisorClass zero(std::size_t rank) {
    return DivisorClass(std::vector<Int>(rank, 0));
  }
  static DivisorClass unit(std::size_t rank, std::size_t index);

  std::size_t size() const { return coeffs_.size(); }
  std::span<const Int> coeffs() const { return coeffs_; }
  Int operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  friend DivisorClass operator+(DivisorClass lhs, const DivisorClass& rhs) {
    return lhs += rhs;
  }
  friend DivisorClass operator-(DivisorClass lhs, const DivisorClass& rhs) {
    return lhs -= rhs;
  }
  friend DivisorClass operator*(Int scalar, const DivisorClass& d);
  DivisorClass operator-() const { return Int{-1} * *this; }

  bool operator==(const DivisorClass&) const = default;
  // Lexicographic on coefficients.
  std::strong_ordering operator<=>(const DivisorClass& other) const {
    return coeffs_ <=> other.coeffs_;
  }

 private:
  std::vector<Int> coeffs_;
};

std::string to_string(const DivisorClass& d);

// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const { return n_; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  bool is_symmetric() const;
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Int> data_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

// Signature of a symmetric integer matrix by exact congruence
// diagonalisation over the rationals.
Inertia inertia(const IntMatrix& m);

// Based Néron–Severi lattice of a rational surface together with its
// canonical class. Immutable once built.
//
// Bases:
//   Hirzebruch(n)            C_n, F                 C_n^2 = -n, C_n.F = 1, F^2 = 0
//   BlowupP2(r)              H, E_1..E_r            H^2 = 1, E_i^2 = -1
//   BlowupHirzebruch(n, r)   C_n, F, E_1..E_r       Hirzebruch block + E_i^2 = -1
// with every E_i orthogonal to everything else.
class SurfaceLattice {
 public:
  const Family& family() const { return family_; }
  std::size_t rank() const { return gram_.size(); }
  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const DivisorClass& canonical() const { return canonical_; }

  // Number of blown-up points; 0 for Hirzebruch(n).
  Int blowups() const;

  DivisorClass anticanonical() const { return -canonical_; }

  // Builds a lattice with arbitrary Gram data. Intended for tests and for
  // exercising the parity guards; no invariants beyond shape are checked.
  static SurfaceLattice custom(Family family, IntMatrix gram,
                               std::vector<std::string> labels,
                               DivisorClass canonical);

  bool operator==(const SurfaceLattice&) const = default;

 private:
  friend SurfaceLattice make_lattice(const Family& family);

  Family family_;
  IntMatrix gram_;
  std::vector<std::string> labels_;
  DivisorClass canonical_;
};

// Throws InvalidParameterError for negative n or r.
SurfaceLattice make_lattice(const Family& family);

void check_dimension(const SurfaceLattice& lattice, const DivisorClass& d);

// D1^T * gram * D2.
Int intersect(const SurfaceLattice& lattice, const DivisorClass& d1,
              const DivisorClass& d2);

inline Int self_intersection(const SurfaceLattice& lattice,
                             const DivisorClass& d) {
  return intersect(lattice, d, d);
}

// p_a(D) = 1 + (D^2 + K.D)/2, by adjunction.
Int arithmetic_genus(const SurfaceLattice& lattice, const DivisorClass& d);

// chi(O(D)) = 1 + (D^2 - K.D)/2 (Riemann–Roch with chi(O) = 1).
Int euler_characteristic(const SurfaceLattice& lattice, const DivisorClass& d);

// max(0, chi(O(D))). A lower bound for h^0(D) when D is effective: then
// h^0(K - D) <= h^0(K) = 0 on a rational surface, and Riemann–Roch gives
// h^0(D) >= chi(D). Effectivity is not checked; see provably_not_effective().
Int h0_lower_bound(const SurfaceLattice& lattice, const DivisorClass& d);

// Nef classes known for every surface of the family: H and H - E_i on blowups
// of P^2; F and C_n + nF (pulled back) on F_n and its blowups.
std::vector<DivisorClass> known_nef_classes(const SurfaceLattice& lattice);

// True when D meets one of known_nef_classes() negatively, which rules out
// effectivity. False does not imply D is effective.
bool provably_not_effective(const SurfaceLattice& lattice, const DivisorClass& d);

// F_1 is P^2 blown up at one point: C_1 -> E_1, F -> H - E_1.
// Source must be Hirzebruch(1) (or BlowupHirzebruch(1, 0)); the result lives
// on BlowupP2(1).
DivisorClass basis_change_f1_to_p2(const SurfaceLattice& source,
                                   const DivisorClass& d);

// F_0 blown up at one point is P^2 blown up at two:
// C_0 -> H - E_2, F -> H - E_1, E -> H - E_1 - E_2.
// Source must be BlowupHirzebruch(0, 1); the result lives on BlowupP2(2).
DivisorClass basis_change_blf0_to_p2(const SurfaceLattice& source,
                                     const DivisorClass& d);

// All classes C = dH - sum m_i E_i on BlowupP2(r) with 0 <= d <= degree_bound,
// |m_i| <= degree_bound, C^2 = self_int and p_a(C) = 0, sorted
// lexicographically by coefficient vector. No quotient by permutations of
// the E_i. Returns an empty list for r = 0.
//
// For self_int = -1 and r <= 8 a degree bound of 7 is complete: C^2 = -1 and
// K.C = -1 give sum m_i^2 = d^2 + 1 and sum m_i = 3d - 1, and Cauchy–Schwarz
// (sum m_i)^2 <= r * sum m_i^2 with r = 8 yields (d - 7)(d + 1) <= 0.
// Likewise m_i^2 <= d^2 + 1 forces |m_i| <= d for d >= 1, so the
// coefficient box loses nothing. For self_int = -2 the same argument gives
// d <= 4.
std::vector<DivisorClass> enumerate_negative_rational_classes(
    const SurfaceLattice& lattice, Int self_int, Int degree_bound);

}  // namespace nslattice
