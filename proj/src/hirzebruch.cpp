#include "nslattice/hirzebruch.hpp"

#include <string>

namespace nslattice::hirzebruch {

namespace {

void require_nonnegative_n(Int n) {
  if (n < 0) {
    throw InvalidParameterError("n must be nonnegative, got " + std::to_string(n));
  }
}

}  // namespace

HirzebruchClass operator+(const HirzebruchClass& x, const HirzebruchClass& y) {
  if (x.n != y.n) {
    throw FamilyError("cannot add classes on F_" + std::to_string(x.n) +
                      " and F_" + std::to_string(y.n));
  }
  return {x.n, x.a + y.a, x.b + y.b};
}

Int pairing(Int n, Int a1, Int b1, Int a2, Int b2) {
  return -n * a1 * a2 + a1 * b2 + b1 * a2;
}

std::optional<EffectiveWitness> is_effective(Int n, Int a, Int b) {
  require_nonnegative_n(n);
  if (a < 0 || b < 0) return std::nullopt;
  return EffectiveWitness{a, b};
}

NefVerdict nef_decompose(Int n, Int a, Int b) {
  require_nonnegative_n(n);
  // x.F = a, x.C_n = b - n a
  const Int with_f = pairing(n, a, b, 0, 1);
  const Int with_c = pairing(n, a, b, 1, 0);
  if (with_f < 0) return NotNef{Generator::F, with_f};
  if (with_c < 0) return NotNef{Generator::C, with_c};
  return NefDecomposition{a, b - n * a};
}

FixedMobileDecomposition fixed_mobile_decompose(Int n, Int a, Int b) {
  if (!is_effective(n, a, b)) {
    throw NotEffectiveError("|" + std::to_string(a) + "C_" + std::to_string(n) +
                            " + " + std::to_string(b) +
                            "F| is empty: the class is not effective");
  }
  const HirzebruchClass input{n, a, b};
  if (n == 0 || b >= a * n) {
    return {HirzebruchClass{n, 0, 0}, input, 0};
  }

  const Int j = a - b / n;
  if (!(1 <= j && j <= a && (a - j) * n <= b && b <= (a - j + 1) * n - 1)) {
    throw std::logic_error("closed-form j fails its bracketing inequalities");
  }
  return {HirzebruchClass{n, j, 0}, HirzebruchClass{n, a - j, b}, j};
}

HirzebruchClass anticanonical_class(Int n) {
  require_nonnegative_n(n);
  return {n, 2, n + 2};
}

FixedMobileDecomposition anticanonical_fixed_locus(Int n) {
  const auto k = anticanonical_class(n);
  return fixed_mobile_decompose(n, k.a, k.b);
}

}  // namespace nslattice::hirzebruch
