#pragma once

// Finite group models: theta^7 under connected sum, sigma^8 under
// logarithmic transformation, the bilinear/trilinear generating maps, the
// Fano moduli group on S^1-representation classes, and torus isotropy on the
// links W^7_{6k-1,3}.

#include "exotic/brieskorn.hpp"
#include "exotic/errors.hpp"

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace exotic {

/// Cyclic model Z_N with the value c of the generating map at (1, 1).
struct GroupConfig {
  std::int64_t order = 28;
  std::int64_t coeff = 1;

  void validate() const {
    if (order < 1)
      throw DomainError(ErrorKind::InvalidInput,
                        "group order must be >= 1, got " +
                          std::to_string(order));
  }
  /// Whether c generates Z_N, i.e. the generating maps are onto.
  [[nodiscard]] bool coeff_generates() const {
    return std::gcd(coeff, order) == 1;
  }

  friend constexpr bool operator==(const GroupConfig &,
                                   const GroupConfig &) = default;
};

namespace detail {
inline std::int64_t reduce(__int128 x, std::int64_t n) {
  __int128 r = x % n;
  if (r < 0) r += n;
  return static_cast<std::int64_t>(r);
}
} // namespace detail

struct Theta7Tag {
  static constexpr const char *name = "theta7";
};
struct Sigma8Tag {
  static constexpr const char *name = "sigma8";
};

/// Residue class in the cyclic model selected by Tag.
template <class Tag> class CyclicElement {
public:
  CyclicElement(std::int64_t value, GroupConfig cfg) : cfg_(cfg) {
    cfg_.validate();
    residue_ = detail::reduce(value, cfg_.order);
  }

  static CyclicElement identity(GroupConfig cfg) { return {0, cfg}; }

  [[nodiscard]] std::int64_t residue() const noexcept { return residue_; }
  [[nodiscard]] const GroupConfig &config() const noexcept { return cfg_; }

  [[nodiscard]] CyclicElement inverse() const { return {-residue_, cfg_}; }

  friend bool operator==(const CyclicElement &,
                         const CyclicElement &) = default;
  friend std::ostream &operator<<(std::ostream &os, const CyclicElement &x) {
    return os << x.residue_ << " mod " << x.cfg_.order;
  }

private:
  GroupConfig cfg_;
  std::int64_t residue_ = 0;
};

using Theta7Element = CyclicElement<Theta7Tag>;
using Sigma8Element = CyclicElement<Sigma8Tag>;

/// Group operation: connected sum on theta^7, logarithmic transformation on
/// sigma^8.
template <class Tag>
CyclicElement<Tag> compose(const CyclicElement<Tag> &x,
                           const CyclicElement<Tag> &y) {
  if (!(x.config() == y.config()))
    throw DomainError(ErrorKind::ConfigMismatch,
                      std::string(Tag::name) + " elements from Z_" +
                        std::to_string(x.config().order) + " and Z_" +
                        std::to_string(y.config().order));
  return {static_cast<std::int64_t>(
            (static_cast<__int128>(x.residue()) + y.residue()) %
            x.config().order),
          x.config()};
}

/// Bilinear map Z (x) Z -> Z_N with value c at (1, 1).
inline Theta7Element sigma33(std::int64_t m, std::int64_t n,
                             const GroupConfig &cfg) {
  cfg.validate();
  const std::int64_t N = cfg.order;
  const __int128 mn = static_cast<__int128>(detail::reduce(m, N)) *
                      detail::reduce(n, N) % N;
  return {detail::reduce(mn * detail::reduce(cfg.coeff, N), N), cfg};
}

/// Trilinear map Z (x) Z (x) Z -> Z_N with value c at (1, 1, 1).
inline Sigma8Element sigma_tilde8(std::int64_t m, std::int64_t n,
                                  std::int64_t l, const GroupConfig &cfg) {
  const std::int64_t mn = sigma33(m, n, cfg).residue();
  const std::int64_t N = cfg.order;
  return {detail::reduce(static_cast<__int128>(mn) * detail::reduce(l, N), N),
          cfg};
}

/// Number of connected sums with `step` needed to move `start` onto
/// `target`: least l >= 0 with start + l * step == target.
inline std::int64_t de_sapio_steps(const Theta7Element &start,
                                   const Theta7Element &step,
                                   const Theta7Element &target) {
  if (!(start.config() == step.config()) ||
      !(start.config() == target.config()))
    throw DomainError(ErrorKind::ConfigMismatch,
                      "theta7 elements from different models");
  Theta7Element cur = start;
  for (std::int64_t l = 0; l < start.config().order; ++l) {
    if (cur == target) return l;
    cur = compose(cur, step);
  }
  throw DomainError(ErrorKind::Unreachable,
                    "no multiple of " + std::to_string(step.residue()) +
                      " moves " + std::to_string(start.residue()) + " to " +
                      std::to_string(target.residue()) + " in Z_" +
                      std::to_string(start.config().order));
}

/// The sigma^8 element delta with compose(from, delta) == to.
inline Sigma8Element log_transform(const Sigma8Element &from,
                                   const Sigma8Element &to) {
  return compose(to, from.inverse());
}

/// A triple (m, 1, 1) mapping to x under sigma_tilde8, if one exists.
inline std::optional<std::array<std::int64_t, 3>>
sigma_tilde8_preimage(const Sigma8Element &x) {
  const GroupConfig &cfg = x.config();
  for (std::int64_t m = 0; m < cfg.order; ++m)
    if (sigma_tilde8(m, 1, 1, cfg) == x)
      return std::array<std::int64_t, 3>{m, 1, 1};
  return std::nullopt;
}

/// Class of the representation rho(lambda) q = lambda^l q.
struct RepClass {
  std::int64_t exponent = 0;

  friend constexpr bool operator==(const RepClass &,
                                   const RepClass &) = default;
};

/// Pointwise product of characters: exponents add. Identity is l = 0.
constexpr RepClass fano_moduli_compose(RepClass a, RepClass b) {
  return {a.exponent + b.exponent};
}
constexpr RepClass fano_moduli_identity() { return {0}; }
constexpr RepClass fano_moduli_inverse(RepClass a) { return {-a.exponent}; }

/// No q in S^1 is fixed by the whole circle, i.e. l != 0.
constexpr bool is_orbifold_rep(RepClass r) { return r.exponent != 0; }

/// Weights of the circle action on W^7_{6k-1,3}:
/// (6, 2(6k-1), 3(6k-1), 3(6k-1), 3(6k-1)).
inline std::array<std::int64_t, 5> link_weights(int k) {
  require_family_index(k);
  const std::int64_t d = 6 * static_cast<std::int64_t>(k) - 1;
  return {6, 2 * d, 3 * d, 3 * d, 3 * d};
}

/// Whether distinct coordinates always carry coprime weights. False for
/// every k: the second and third weights share the factor 6k - 1.
inline bool link_weights_pairwise_coprime(int k) {
  const auto w = link_weights(k);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (std::gcd(w[i], w[j]) != 1) return false;
  return true;
}

struct IsotropyEntry {
  std::vector<int> support; ///< coordinates that are nonzero
  std::int64_t b = 1;       ///< torus part Z_b, b = gcd of supported weights
  std::int64_t rep_order = 1; ///< representation part Z_l
  /// Z_b x Z_l is cyclic (gcd(b, l) == 1).
  [[nodiscard]] bool cyclic() const { return std::gcd(b, rep_order) == 1; }
};

/// Isotropy of the T^2-action on W^7_{6k-1,3} x S^1 for every support with
/// at least two nonzero coordinates, ordered by size then lexicographically.
inline std::vector<IsotropyEntry> link_isotropies(int k, std::int64_t l) {
  const auto w = link_weights(k);
  if (l == 0)
    throw DomainError(ErrorKind::InvalidRep,
                      "l = 0 fixes every point of the circle factor");
  const std::int64_t rep = l < 0 ? -l : l;
  std::vector<IsotropyEntry> out;
  for (std::size_t size = 2; size <= w.size(); ++size) {
    // lexicographic subsets of the given size
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      std::int64_t g = 0;
      for (int i : pick) g = std::gcd(g, w[static_cast<std::size_t>(i)]);
      out.push_back({pick, g, rep});
      std::size_t i = size;
      while (i > 0 &&
             pick[i - 1] == static_cast<int>(w.size() - size + i - 1))
        --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

} // namespace exotic
