#pragma once

// Brieskorn-Pham singularities f = x_0^{a_0} + ... + x_n^{a_n}.
//
// All invariants are computed from the exponent vector alone: the monomial
// basis of the Milnor algebra, the distinguished-basis intersection form,
// the spectrum, and the weighted-homogeneous grading. Rationals are exact.

#include "exotic/errors.hpp"
#include "exotic/lattice.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace exotic {

using Rational = mpq_class;

/// Lowest-terms "p/q" with q >= 1, also for integers ("2/1", "0/1").
inline std::string to_fraction_string(const Rational &r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

using ExponentTuple = std::vector<int>;

class BrieskornPham {
public:
  explicit BrieskornPham(std::vector<int> exponents)
    : exponents_(std::move(exponents)) {
    if (exponents_.empty())
      throw DomainError(ErrorKind::InvalidInput, "empty exponent vector");
    for (int a : exponents_)
      if (a < 2)
        throw DomainError(ErrorKind::InvalidInput,
                          "exponent " + std::to_string(a) + " is below 2");
  }

  [[nodiscard]] const std::vector<int> &exponents() const noexcept {
    return exponents_;
  }
  [[nodiscard]] std::size_t variables() const noexcept {
    return exponents_.size();
  }

  friend bool operator==(const BrieskornPham &, const BrieskornPham &) = default;

private:
  std::vector<int> exponents_;
};

namespace detail {
/// All tuples with lo <= t_i <= hi_i, in lexicographic order.
inline std::vector<ExponentTuple> box_tuples(int lo,
                                             const std::vector<int> &hi) {
  std::vector<ExponentTuple> out;
  for (int h : hi)
    if (h < lo) return out;
  ExponentTuple t(hi.size(), lo);
  for (;;) {
    out.push_back(t);
    std::size_t i = t.size();
    while (i > 0 && t[i - 1] == hi[i - 1]) t[--i] = lo;
    if (i == 0) return out;
    ++t[i - 1];
  }
}
} // namespace detail

struct MilnorAlgebra {
  std::int64_t mu = 0;
  /// Exponents (k_0, ..., k_n) of the monomial basis, 0 <= k_i <= a_i - 2.
  std::vector<ExponentTuple> basis;
};

inline MilnorAlgebra milnor_number_and_basis(const BrieskornPham &bp) {
  std::vector<int> hi;
  std::int64_t mu = 1;
  for (int a : bp.exponents()) {
    hi.push_back(a - 2);
    mu *= a - 1;
  }
  return {mu, detail::box_tuples(0, hi)};
}

/// Cartan matrix of A_n: 2 on the diagonal, -1 next to it.
inline IntMatrix a_lattice(int n) {
  if (n < 1)
    throw DomainError(ErrorKind::InvalidSize,
                      "A_n needs n >= 1, got " + std::to_string(n));
  const auto size = static_cast<std::size_t>(n);
  IntMatrix g(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    g(i, i) = 2;
    if (i + 1 < size) g(i, i + 1) = g(i + 1, i) = -1;
  }
  return g;
}

struct MilnorLattice {
  /// Lex-ordered index set {(i_0..i_n) : 1 <= i_m <= a_m - 1}.
  std::vector<ExponentTuple> index_set;
  IntMatrix gram;
};

/// Distinguished-basis intersection form on the tensor product of the A_{a-1}
/// lattices. For lex-ordered i < j the pairing is the product of the
/// single-factor A-pairings when i_m <= j_m in every slot, 0 otherwise.
/// The diagonal is 2 and the lower triangle mirrors the upper one.
inline MilnorLattice milnor_lattice(const BrieskornPham &bp) {
  std::vector<int> hi;
  for (int a : bp.exponents()) hi.push_back(a - 1);
  MilnorLattice lattice{detail::box_tuples(1, hi), {}};
  const auto &idx = lattice.index_set;
  const std::size_t mu = idx.size();
  lattice.gram = IntMatrix(mu, mu);

  const auto single = [](int i, int j) -> long {
    if (i == j) return 2;
    return std::abs(i - j) == 1 ? -1 : 0;
  };
  for (std::size_t r = 0; r < mu; ++r) {
    lattice.gram(r, r) = 2;
    for (std::size_t c = r + 1; c < mu; ++c) {
      long value = 1;
      for (std::size_t s = 0; s < idx[r].size() && value != 0; ++s) {
        if (idx[r][s] > idx[c][s]) value = 0;
        else value *= single(idx[r][s], idx[c][s]);
      }
      lattice.gram(r, c) = value;
      lattice.gram(c, r) = value;
    }
  }
  return lattice;
}

/// Sorted multiset {sum_i (k_i + 1) / a_i} over the Milnor algebra basis.
inline std::vector<Rational> spectrum(const BrieskornPham &bp) {
  const auto &a = bp.exponents();
  std::vector<Rational> values;
  for (const auto &k : milnor_number_and_basis(bp).basis) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(k[i] + 1, a[i]);
    s.canonicalize();
    values.push_back(s);
  }
  std::sort(values.begin(), values.end());
  return values;
}

/// sum_i 1 / a_i; also the least spectral value.
inline Rational reciprocal_sum(const BrieskornPham &bp) {
  Rational s = 0;
  for (int a : bp.exponents()) s += Rational(1, a);
  s.canonicalize();
  return s;
}

struct WeightedDegree {
  std::int64_t ell = 0;
  std::vector<std::int64_t> weights; ///< w_i = ell / a_i
};

inline WeightedDegree weights_and_degree(const BrieskornPham &bp) {
  std::int64_t ell = 1;
  for (int a : bp.exponents()) {
    const std::int64_t step = a / std::gcd(ell, static_cast<std::int64_t>(a));
    if (__builtin_mul_overflow(ell, step, &ell))
      throw DomainError(ErrorKind::InvalidInput, "degree overflows int64");
  }
  WeightedDegree wd{ell, {}};
  for (int a : bp.exponents()) wd.weights.push_back(ell / a);
  return wd;
}

enum class CanonicalType { Fano, CalabiYau, GeneralType };

constexpr std::string_view to_string(CanonicalType t) {
  switch (t) {
  case CanonicalType::Fano: return "Fano";
  case CanonicalType::CalabiYau: return "CalabiYau";
  case CanonicalType::GeneralType: return "GeneralType";
  }
  return "?";
}

struct TypeAndGorenstein {
  CanonicalType type;
  Rational gorenstein; ///< sum 1/a_i - 1
};

inline TypeAndGorenstein canonical_type(const BrieskornPham &bp) {
  const Rational s = reciprocal_sum(bp);
  const int c = cmp(s, 1);
  const CanonicalType t = c > 0   ? CanonicalType::Fano
                          : c == 0 ? CanonicalType::CalabiYau
                                   : CanonicalType::GeneralType;
  Rational g = s - 1;
  g.canonicalize();
  return {t, g};
}

/// Member k of u^{6k-1} + v^3 + z_0^2 + z_1^2 + z_2^2, k = 1..28. Each link
/// is a homotopy 7-sphere.
struct FamilyMember {
  int k;
  BrieskornPham singularity;
  bool links_homotopy_sphere = true;
};

inline constexpr int kFamilyMin = 1;
inline constexpr int kFamilyMax = 28;

inline void require_family_index(int k) {
  if (k < kFamilyMin || k > kFamilyMax)
    throw DomainError(ErrorKind::OutOfFamily,
                      "k = " + std::to_string(k) + " is outside [1, 28]");
}

inline FamilyMember milnor_family(int k) {
  require_family_index(k);
  return {k, BrieskornPham({6 * k - 1, 3, 2, 2, 2}), true};
}

/// Graded dimensions of a morphism space: degree -> dimension.
using HomDims = std::map<int, std::int64_t>;

/// Morphisms in the A_a category with objects C_1..C_a: the identity in
/// degree 0 when i == j, one generator in degree 1 when i == j - 1.
inline HomDims category_hom_dims(int a, int i, int j) {
  if (a < 1)
    throw DomainError(ErrorKind::InvalidSize, "category A_a needs a >= 1");
  if (i < 1 || i > a || j < 1 || j > a)
    throw DomainError(ErrorKind::IndexOutOfRange,
                      "objects are C_1..C_" + std::to_string(a));
  if (i == j) return {{0, 1}};
  if (i == j - 1) return {{1, 1}};
  return {};
}

/// Hom dimensions in a tensor product of A-categories: graded convolution of
/// the factorwise answers.
inline HomDims tensor_hom_dims(const std::vector<int> &a,
                               const ExponentTuple &i,
                               const ExponentTuple &j) {
  if (a.size() != i.size() || a.size() != j.size())
    throw DomainError(ErrorKind::InvalidSize, "factor count mismatch");
  HomDims acc{{0, 1}};
  for (std::size_t s = 0; s < a.size(); ++s) {
    const HomDims factor = category_hom_dims(a[s], i[s], j[s]);
    HomDims next;
    for (const auto &[d1, n1] : acc)
      for (const auto &[d2, n2] : factor) next[d1 + d2] += n1 * n2;
    acc = std::move(next);
    if (acc.empty()) break;
  }
  return acc;
}

/// chi(i, j) = sum_d (-1)^d dim hom^d(C_i, C_j).
inline std::int64_t euler_characteristic(const HomDims &dims) {
  std::int64_t chi = 0;
  for (const auto &[d, n] : dims) chi += (d % 2 == 0 ? n : -n);
  return chi;
}

/// E + E^T for the Euler form E of the single-factor category A_a.
inline IntMatrix symmetrized_euler_form(int a) {
  const auto size = static_cast<std::size_t>(a);
  IntMatrix e(size, size);
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= a; ++j)
      e(i - 1, j - 1) =
        static_cast<long>(euler_characteristic(category_hom_dims(a, i, j)));
  IntMatrix sym(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) sym(i, j) = e(i, j) + e(j, i);
  return sym;
}

} // namespace exotic
