#pragma once

// Spherical T-duality for Milnor bundles with H-flux.

#include "exotic/errors.hpp"
#include "exotic/lattice.hpp"
#include "exotic/milnor.hpp"

#include <cstdint>
#include <numeric>
#include <ostream>

namespace exotic {

/// A Milnor bundle together with an integral class in H^7 of its total
/// space (always Z).
struct FluxedBundle {
  MilnorBundle bundle;
  std::int64_t flux = 0;

  friend constexpr bool operator==(const FluxedBundle &,
                                   const FluxedBundle &) = default;
  friend std::ostream &operator<<(std::ostream &os, const FluxedBundle &fb) {
    return os << '(' << fb.bundle << ", [" << fb.flux << "])";
  }
};

/// (M_{m,k-m}, [j]) <-> (M_{j,k-j}, [m]); the Euler class k is preserved.
constexpr FluxedBundle euler_preserving_dual(const FluxedBundle &fb) {
  const std::int64_t k = fb.bundle.euler();
  return {with_euler(fb.flux, k), fb.bundle.m};
}

/// (M_{m,0}, [j]) <-> (M_{0,-j}, [m]) for principal bundles. M_{0,n} is read
/// as its equivalent M_{-n,0} first.
inline FluxedBundle principal_dual(const FluxedBundle &fb) {
  const MilnorBundle &b = fb.bundle;
  if (b.m != 0 && b.n != 0)
    throw DomainError(ErrorKind::NotPrincipal,
                      "bundle M_{" + std::to_string(b.m) + "," +
                        std::to_string(b.n) + "} has m * n != 0");
  const std::int64_t m = b.n == 0 ? b.m : -b.n;
  return {MilnorBundle{0, -fb.flux}, m};
}

namespace detail {
inline void require_not_both_zero(std::int64_t m, std::int64_t j) {
  if (m == 0 && j == 0)
    throw DomainError(ErrorKind::DegenerateInput, "m = j = 0");
}
} // namespace detail

/// H^7 of the correspondence space M_{m,0} x_{S^4} M_{m,0}^: Z + Z_gcd(j,m).
inline AbelianGroup correspondence_h7(std::int64_t m, std::int64_t j) {
  detail::require_not_both_zero(m, j);
  const std::int64_t g = std::gcd(m, j); // std::gcd is nonnegative
  return AbelianGroup(1, {Integer(static_cast<long>(g))});
}

/// Free component of both pulled-back fluxes on the correspondence space,
/// jm / gcd(j, m).
inline std::int64_t lifted_flux(std::int64_t m, std::int64_t j) {
  detail::require_not_both_zero(m, j);
  return j / std::gcd(m, j) * m;
}

} // namespace exotic
