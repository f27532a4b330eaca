#pragma once

// S^3-bundles over S^4 ("Milnor bundles"). The bundle M_{m,n} is glued from
// two copies of D^4 x S^3 along the clutching map t_{mn}(x)v = x^m v x^n.

#include "exotic/errors.hpp"
#include "exotic/lattice.hpp"

#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <string>

namespace exotic {

struct MilnorBundle {
  std::int64_t m = 0;
  std::int64_t n = 0;

  /// Euler class k = m + n of the associated rank-4 bundle.
  [[nodiscard]] constexpr std::int64_t euler() const noexcept { return m + n; }

  friend constexpr auto operator<=>(const MilnorBundle &,
                                    const MilnorBundle &) = default;
  friend std::ostream &operator<<(std::ostream &os, const MilnorBundle &b) {
    return os << "M_{" << b.m << ',' << b.n << '}';
  }
};

/// M_{m, k-m}: the bundle with first index m and Euler class k.
constexpr MilnorBundle with_euler(std::int64_t m, std::int64_t k) {
  return {m, k - m};
}

struct CharClasses {
  std::int64_t euler = 0;
  std::int64_t pontryagin = 0;
  bool principal = false;
  bool homotopy_sphere = false;

  friend bool operator==(const CharClasses &, const CharClasses &) = default;
};

constexpr CharClasses characteristic_classes(const MilnorBundle &b) {
  const std::int64_t k = b.m + b.n;
  return {k, 2 * (b.m - b.n), b.m == 0 || b.n == 0, k == 1 || k == -1};
}

/// M_{m,n} and M_{-n,-m} are the same manifold; pick the lexicographically
/// smaller pair.
constexpr MilnorBundle canonical_form(const MilnorBundle &b) {
  const MilnorBundle other{-b.n, -b.m};
  return other < b ? other : b;
}

/// Milnor's lambda invariant mod 7, ((2m - 1)^2 - 1) mod 7 on M_{m,1-m}.
/// Bundles with Euler class -1 are first rewritten as M_{-n,-m}, which has
/// Euler class +1.
inline int lambda_invariant(const MilnorBundle &b) {
  const std::int64_t k = b.euler();
  if (k != 1 && k != -1)
    throw DomainError(ErrorKind::NotHomotopySphere,
                      "lambda invariant needs m + n = +-1, got m + n = " +
                        std::to_string(k));
  const std::int64_t m = k == 1 ? b.m : -b.n;
  const std::int64_t r = ((2 * m - 1) % 7 + 7) % 7;
  return static_cast<int>((r * r - 1 + 7) % 7);
}

/// True when the bundle is homeomorphic to S^7 and lambda detects an exotic
/// smooth structure.
inline bool is_exotic_sphere(const MilnorBundle &b) {
  return characteristic_classes(b).homotopy_sphere && lambda_invariant(b) != 0;
}

/// Integral cohomology of the total space, closed form in the Euler class.
inline GradedGroups bundle_cohomology(const MilnorBundle &b) {
  const std::int64_t k = b.euler();
  GradedGroups h;
  h.set(0, AbelianGroup::free(1));
  h.set(7, AbelianGroup::free(1));
  if (k == 0) {
    h.set(3, AbelianGroup::free(1));
    h.set(4, AbelianGroup::free(1));
  } else if (std::llabs(k) != 1) {
    h.set(4, AbelianGroup::cyclic(Integer(static_cast<long>(std::llabs(k)))));
  }
  return h;
}

/// Gysin sequence solve for an S^3-bundle over S^4 with Euler class k,
/// done entirely with presentation matrices:
///
///   0 -> coker(e: H^{i-4}(S^4) -> H^i(S^4)) -> H^i(E)
///     -> ker(e: H^{i-3}(S^4) -> H^{i+1}(S^4)) -> 0
///
/// The kernel term is free, so the extension splits.
inline GradedGroups gysin_cohomology(std::int64_t euler_class) {
  const auto base_rank = [](int degree) -> std::size_t {
    return degree == 0 || degree == 4 ? 1 : 0;
  };
  // cup with e maps H^d(S^4) to H^{d+4}(S^4)
  const auto cup_euler = [&](int degree) {
    IntMatrix map(base_rank(degree + 4), base_rank(degree));
    if (map.rows() == 1 && map.cols() == 1)
      map(0, 0) = Integer(static_cast<long>(euler_class));
    return map;
  };
  GradedGroups h;
  for (int i = 0; i <= 7; ++i) {
    const AbelianGroup quotient = cokernel_group(cup_euler(i - 4));
    const std::size_t sub = kernel_rank(cup_euler(i - 3));
    h.set(i, quotient.direct_sum(AbelianGroup::free(sub)));
  }
  return h;
}

/// Pointwise quaternionic product of clutching maps: exponents add.
constexpr MilnorBundle clutching_compose(const MilnorBundle &t1,
                                         const MilnorBundle &t2) {
  return {t1.m + t2.m, t1.n + t2.n};
}

enum class StarMode { Principal, NonPrincipal };

/// Target of the star-diagram P_r <- pi^*(P_k) -> M: in non-principal mode
/// M = M_{r,k-r}, in principal mode M = M_{r-k,0}.
constexpr MilnorBundle star_quotient(std::int64_t r, std::int64_t k,
                                     StarMode mode) {
  if (mode == StarMode::NonPrincipal) return {r, k - r};
  return {r - k, 0};
}

} // namespace exotic
