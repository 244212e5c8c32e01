#include "nslattice/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace nslattice {

namespace {

__extension__ typedef __int128 Wide;

// Exact rational used only by the inertia computation.
struct Rational {
  Wide num = 0;
  Wide den = 1;

  static Wide gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  Rational() = default;
  Rational(Wide n, Wide d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Wide g = gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }
  int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    return {a.num * b.den, a.den * b.num};
  }
};

Int half_or_throw(Int value, const char* what) {
  if (value % 2 != 0) {
    throw LatticeCorruptionError(std::string(what) +
                                 " is odd; Gram matrix or canonical class is "
                                 "inconsistent with adjunction");
  }
  return value / 2;
}

DivisorClass apply_images(const std::vector<DivisorClass>& images,
                          const DivisorClass& d) {
  DivisorClass out = DivisorClass::zero(images.front().size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    out += d[i] * images[i];
  }
  return out;
}

void collect_classes(Int d, std::size_t pos, std::size_t r, Int bound,
                     Int rem_sq, Int rem_sum, std::vector<Int>& m,
                     std::vector<DivisorClass>& out) {
  const auto left = static_cast<Int>(r - pos);
  if (left == 0) {
    if (rem_sq == 0 && rem_sum == 0) {
      std::vector<Int> coeffs;
      coeffs.reserve(r + 1);
      coeffs.push_back(d);
      for (Int mi : m) coeffs.push_back(-mi);
      out.emplace_back(std::move(coeffs));
    }
    return;
  }
  // Cauchy–Schwarz on the remaining entries.
  if (rem_sq < 0 || rem_sum * rem_sum > left * rem_sq) return;
  for (Int v = -bound; v <= bound; ++v) {
    if (v * v > rem_sq) continue;
    m[pos] = v;
    collect_classes(d, pos + 1, r, bound, rem_sq - v * v, rem_sum - v, m, out);
  }
}

}  // namespace

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Hirzebruch:
      return "hirzebruch";
    case FamilyKind::BlowupP2:
      return "blowup_p2";
    case FamilyKind::BlowupHirzebruch:
      return "blowup_hirzebruch";
  }
  return "unknown";
}

FamilyKind parse_family_name(const std::string& name) {
  if (name == "hirzebruch") return FamilyKind::Hirzebruch;
  if (name == "blowup_p2") return FamilyKind::BlowupP2;
  if (name == "blowup_hirzebruch") return FamilyKind::BlowupHirzebruch;
  throw InvalidParameterError("unknown surface family '" + name + "'");
}

DivisorClass DivisorClass::unit(std::size_t rank, std::size_t index) {
  DivisorClass d = zero(rank);
  d.coeffs_.at(index) = 1;
  return d;
}

bool DivisorClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](Int c) { return c == 0; });
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  if (other.size() != size()) {
    throw DimensionError("cannot add classes of length " +
                         std::to_string(size()) + " and " +
                         std::to_string(other.size()));
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  if (other.size() != size()) {
    throw DimensionError("cannot subtract classes of length " +
                         std::to_string(size()) + " and " +
                         std::to_string(other.size()));
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

DivisorClass operator*(Int scalar, const DivisorClass& d) {
  DivisorClass out = d;
  for (auto& c : out.coeffs_) c *= scalar;
  return out;
}

std::string to_string(const DivisorClass& d) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) os << ',';
    os << d[i];
  }
  os << ')';
  return os.str();
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Int determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<Wide> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> Wide& { return a[i * n + j]; };

  int sign = 1;
  Wide prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return static_cast<Int>(sign * at(n - 1, n - 1));
}

Inertia inertia(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));

  std::vector<std::size_t> alive(n);
  std::iota(alive.begin(), alive.end(), std::size_t{0});
  Inertia result;

  while (!alive.empty()) {
    auto pivot = std::find_if(alive.begin(), alive.end(),
                              [&](std::size_t k) { return !a[k][k].is_zero(); });
    if (pivot == alive.end()) {
      // Zero diagonal: look for a hyperbolic pair and replace e_k by e_k + e_l,
      // which makes the new diagonal entry 2 a[k][l] nonzero.
      bool found = false;
      for (std::size_t k : alive) {
        for (std::size_t l : alive) {
          if (k != l && !a[k][l].is_zero()) {
            for (std::size_t j : alive) a[k][j] = a[k][j] + a[l][j];
            for (std::size_t i : alive) a[i][k] = a[i][k] + a[i][l];
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) {
        result.zero += alive.size();
        break;
      }
      continue;
    }

    const std::size_t k = *pivot;
    const Rational p = a[k][k];
    (p.sign() > 0 ? result.positive : result.negative) += 1;
    alive.erase(pivot);
    for (std::size_t i : alive) {
      const Rational factor = a[i][k] / p;
      if (factor.is_zero()) continue;
      for (std::size_t j : alive) a[i][j] = a[i][j] - factor * a[k][j];
    }
  }
  return result;
}

Int SurfaceLattice::blowups() const {
  return family_.kind == FamilyKind::Hirzebruch ? 0 : family_.r;
}

SurfaceLattice SurfaceLattice::custom(Family family, IntMatrix gram,
                                      std::vector<std::string> labels,
                                      DivisorClass canonical) {
  if (labels.size() != gram.size() || canonical.size() != gram.size()) {
    throw DimensionError("custom lattice: labels and canonical must match rank");
  }
  SurfaceLattice out;
  out.family_ = family;
  out.gram_ = std::move(gram);
  out.labels_ = std::move(labels);
  out.canonical_ = std::move(canonical);
  return out;
}

SurfaceLattice make_lattice(const Family& family) {
  if (family.n < 0) {
    throw InvalidParameterError("n must be nonnegative, got " +
                                std::to_string(family.n));
  }
  if (family.r < 0) {
    throw InvalidParameterError("r must be nonnegative, got " +
                                std::to_string(family.r));
  }

  SurfaceLattice out;
  out.family_ = family;
  std::size_t head = 0;
  std::vector<Int> k;

  switch (family.kind) {
    case FamilyKind::Hirzebruch:
      out.family_.r = 0;
      [[fallthrough]];
    case FamilyKind::BlowupHirzebruch:
      head = 2;
      out.labels_ = {"C_" + std::to_string(family.n), "F"};
      k = {-2, -(family.n + 2)};
      break;
    case FamilyKind::BlowupP2:
      out.family_.n = 0;
      head = 1;
      out.labels_ = {"H"};
      k = {-3};
      break;
  }

  const auto r = static_cast<std::size_t>(out.family_.r);
  out.gram_ = IntMatrix(head + r);
  if (head == 2) {
    out.gram_(0, 0) = -family.n;
    out.gram_(0, 1) = 1;
    out.gram_(1, 0) = 1;
  } else {
    out.gram_(0, 0) = 1;
  }
  for (std::size_t i = 0; i < r; ++i) {
    out.gram_(head + i, head + i) = -1;
    out.labels_.push_back("E_" + std::to_string(i + 1));
    k.push_back(1);
  }
  out.canonical_ = DivisorClass(std::move(k));
  return out;
}

void check_dimension(const SurfaceLattice& lattice, const DivisorClass& d) {
  if (d.size() != lattice.rank()) {
    throw DimensionError("class " + to_string(d) + " has length " +
                         std::to_string(d.size()) + ", lattice rank is " +
                         std::to_string(lattice.rank()));
  }
}

Int intersect(const SurfaceLattice& lattice, const DivisorClass& d1,
              const DivisorClass& d2) {
  check_dimension(lattice, d1);
  check_dimension(lattice, d2);
  const auto& g = lattice.gram();
  Int total = 0;
  for (std::size_t i = 0; i < d1.size(); ++i) {
    if (d1[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < d2.size(); ++j) row += g(i, j) * d2[j];
    total += d1[i] * row;
  }
  return total;
}

Int arithmetic_genus(const SurfaceLattice& lattice, const DivisorClass& d) {
  const Int sq = self_intersection(lattice, d);
  const Int kd = intersect(lattice, lattice.canonical(), d);
  return 1 + half_or_throw(sq + kd, "D^2 + K.D");
}

Int euler_characteristic(const SurfaceLattice& lattice, const DivisorClass& d) {
  const Int sq = self_intersection(lattice, d);
  const Int kd = intersect(lattice, lattice.canonical(), d);
  return 1 + half_or_throw(sq - kd, "D^2 - K.D");
}

Int h0_lower_bound(const SurfaceLattice& lattice, const DivisorClass& d) {
  return std::max<Int>(0, euler_characteristic(lattice, d));
}

std::vector<DivisorClass> known_nef_classes(const SurfaceLattice& lattice) {
  const std::size_t rank = lattice.rank();
  std::vector<DivisorClass> out;
  if (lattice.family().kind == FamilyKind::BlowupP2) {
    const auto h = DivisorClass::unit(rank, 0);
    out.push_back(h);
    for (std::size_t i = 1; i < rank; ++i) out.push_back(h - DivisorClass::unit(rank, i));
  } else {
    const auto c = DivisorClass::unit(rank, 0);
    const auto f = DivisorClass::unit(rank, 1);
    out.push_back(f);
    out.push_back(c + lattice.family().n * f);
  }
  return out;
}

bool provably_not_effective(const SurfaceLattice& lattice, const DivisorClass& d) {
  check_dimension(lattice, d);
  const auto nef = known_nef_classes(lattice);
  return std::any_of(nef.begin(), nef.end(),
                     [&](const DivisorClass& n) { return intersect(lattice, n, d) < 0; });
}

DivisorClass basis_change_f1_to_p2(const SurfaceLattice& source,
                                   const DivisorClass& d) {
  const auto& f = source.family();
  const bool ok = f.n == 1 && (f.kind == FamilyKind::Hirzebruch ||
                               (f.kind == FamilyKind::BlowupHirzebruch && f.r == 0));
  if (!ok) throw FamilyError("basis_change_f1_to_p2 needs the F_1 lattice");
  check_dimension(source, d);
  static const std::vector<DivisorClass> images = {{0, 1}, {1, -1}};
  return apply_images(images, d);
}

DivisorClass basis_change_blf0_to_p2(const SurfaceLattice& source,
                                     const DivisorClass& d) {
  const auto& f = source.family();
  if (!(f.kind == FamilyKind::BlowupHirzebruch && f.n == 0 && f.r == 1)) {
    throw FamilyError(
        "basis_change_blf0_to_p2 needs the lattice of F_0 blown up once");
  }
  check_dimension(source, d);
  static const std::vector<DivisorClass> images = {
      {1, 0, -1}, {1, -1, 0}, {1, -1, -1}};
  return apply_images(images, d);
}

std::vector<DivisorClass> enumerate_negative_rational_classes(
    const SurfaceLattice& lattice, Int self_int, Int degree_bound) {
  if (lattice.family().kind != FamilyKind::BlowupP2) {
    throw FamilyError("enumeration is defined on blowups of P^2 only");
  }
  if (self_int > -1) {
    throw InvalidParameterError("self_int must be <= -1");
  }
  if (degree_bound < 0) {
    throw InvalidParameterError("degree_bound must be nonnegative");
  }
  const auto r = static_cast<std::size_t>(lattice.family().r);
  std::vector<DivisorClass> out;
  if (r == 0) return out;

  // C = dH - sum m_i E_i: C^2 = d^2 - sum m_i^2 and K.C = -3d + sum m_i.
  // p_a = 0 means K.C = -2 - C^2.
  std::vector<Int> m(r, 0);
  for (Int d = 0; d <= degree_bound; ++d) {
    const Int sum_sq = d * d - self_int;
    const Int sum = 3 * d - 2 - self_int;
    collect_classes(d, 0, r, degree_bound, sum_sq, sum, m, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nslattice
