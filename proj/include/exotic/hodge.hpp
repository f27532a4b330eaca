#pragma once

// Homotopy Hopf manifolds M_{m,k-m} x S^1: integral cohomology and the
// Hodge-diamond constraints imposed by the ddbar-lemma.

#include "exotic/errors.hpp"
#include "exotic/lattice.hpp"
#include "exotic/milnor.hpp"

#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace exotic {

inline constexpr int kHodgeDim = 4; // complex dimension

/// h^{p,q}, 0 <= p, q <= 4, with Serre duality h^{p,q} = h^{4-p,4-q}.
/// Hodge symmetry h^{p,q} = h^{q,p} is not assumed.
class HodgeDiamond {
public:
  using Grid = std::array<std::array<int, kHodgeDim + 1>, kHodgeDim + 1>;

  HodgeDiamond() : h_{} {}

  static HodgeDiamond from_grid(const Grid &grid) {
    for (int p = 0; p <= kHodgeDim; ++p)
      for (int q = 0; q <= kHodgeDim; ++q) {
        if (grid[p][q] < 0)
          throw DomainError(ErrorKind::InvalidInput, "negative Hodge number");
        if (grid[p][q] != grid[kHodgeDim - p][kHodgeDim - q])
          throw DomainError(ErrorKind::InvalidInput,
                            "grid violates Serre duality at (" +
                              std::to_string(p) + "," + std::to_string(q) +
                              ")");
      }
    HodgeDiamond d;
    d.h_ = grid;
    return d;
  }

  [[nodiscard]] int operator()(int p, int q) const { return h_.at(p).at(q); }

  /// Sets h^{p,q} and its Serre partner.
  void set_pair(int p, int q, int value) {
    if (value < 0)
      throw DomainError(ErrorKind::InvalidInput, "negative Hodge number");
    h_.at(p).at(q) = value;
    h_.at(kHodgeDim - p).at(kHodgeDim - q) = value;
  }

  [[nodiscard]] const Grid &grid() const noexcept { return h_; }

  /// sum_{p+q=r} h^{p,q}
  [[nodiscard]] int antidiagonal_sum(int r) const {
    int s = 0;
    for (int p = 0; p <= kHodgeDim; ++p) {
      const int q = r - p;
      if (q >= 0 && q <= kHodgeDim) s += h_[p][q];
    }
    return s;
  }

  /// Rows from p+q = 8 down to p+q = 0, p increasing left to right.
  [[nodiscard]] std::string to_triangle() const {
    std::ostringstream os;
    for (int r = 2 * kHodgeDim; r >= 0; --r) {
      const int width = kHodgeDim - std::abs(r - kHodgeDim);
      os << std::string(static_cast<std::size_t>(2 * (kHodgeDim - width)),
                        ' ');
      bool first = true;
      for (int p = 0; p <= kHodgeDim; ++p) {
        const int q = r - p;
        if (q < 0 || q > kHodgeDim) continue;
        os << (first ? "" : "   ") << h_[p][q];
        first = false;
      }
      os << '\n';
    }
    return os.str();
  }

  friend bool operator==(const HodgeDiamond &, const HodgeDiamond &) = default;

private:
  Grid h_;
};

/// Hodge numbers of the Hopf manifold S^{2n-1} x S^1: exactly
/// h^{0,0} = h^{0,1} = h^{n,n} = h^{n,n-1} = 1. The 5x5 grid is only filled
/// for n = 4.
struct HopfHodgeNumbers {
  int n = 0;
  std::vector<std::pair<int, int>> unit_entries;
  std::optional<HodgeDiamond> diamond;
};

inline HopfHodgeNumbers hopf_hodge_numbers(int n) {
  if (n < 2)
    throw DomainError(ErrorKind::InvalidDimension,
                      "Hopf manifold needs n >= 2, got " + std::to_string(n));
  HopfHodgeNumbers out{n, {{0, 0}, {0, 1}, {n, n}, {n, n - 1}}, std::nullopt};
  if (n == kHodgeDim) {
    HodgeDiamond d;
    d.set_pair(0, 0, 1);
    d.set_pair(0, 1, 1);
    out.diamond = d;
  }
  return out;
}

/// H^*(M_{m,k-m} x S^1; Z) by Kunneth.
inline GradedGroups hopf_manifold_cohomology(std::int64_t m, std::int64_t k) {
  return kunneth(bundle_cohomology(with_euler(m, k)), GradedGroups::sphere(1));
}

enum class EulerBranch { Unit, NonUnit };

constexpr EulerBranch branch_of(std::int64_t k) {
  return k == 1 || k == -1 ? EulerBranch::Unit : EulerBranch::NonUnit;
}

/// Betti vector b_0..b_8 used as constraint input: b_0 = b_1 = b_7 = b_8 = 1
/// and b_4 = 1 off the unit branch.
inline std::array<int, 2 * kHodgeDim + 1> constraint_betti(EulerBranch br) {
  std::array<int, 2 * kHodgeDim + 1> b{};
  b[0] = b[1] = b[7] = b[8] = 1;
  if (br == EulerBranch::NonUnit) b[4] = 1;
  return b;
}

struct ConstraintReport {
  bool ok = true;
  std::string violation; ///< first failed constraint, empty when ok
};

inline ConstraintReport ddbar_constraints_check(const HodgeDiamond &d,
                                                std::int64_t k) {
  const EulerBranch br = branch_of(k);
  const auto b = constraint_betti(br);
  const auto fail = [](std::string msg) { return ConstraintReport{false, msg}; };

  for (int r = 0; r <= 2 * kHodgeDim; ++r) {
    const int s = d.antidiagonal_sum(r);
    if (s != b[static_cast<std::size_t>(r)])
      return fail("b_" + std::to_string(r) + ": sum of h^{p,q} over p+q=" +
                  std::to_string(r) + " is " + std::to_string(s) +
                  ", expected " + std::to_string(b[static_cast<std::size_t>(r)]));
  }
  if (d(3, 4) + d(4, 3) != 1) return fail("h^{3,4} + h^{4,3} != 1");
  if (d(0, 1) + d(1, 0) != 1) return fail("h^{0,1} + h^{1,0} != 1");
  if (br == EulerBranch::NonUnit) {
    if (2 * d(4, 0) + d(2, 2) + 2 * d(1, 3) != b[4])
      return fail("b_4 != 2h^{4,0} + h^{2,2} + 2h^{1,3}");
    if (d(4, 0) != 0) return fail("h^{4,0} != 0");
    if (d(1, 3) != 0) return fail("h^{1,3} != 0");
    if (d(2, 2) != b[4]) return fail("b_4 != h^{2,2}");
  }
  return {};
}

/// Every Serre-symmetric diamond with h^{p,q} <= b_{p+q} that passes the
/// branch constraints. Cells are scanned as an odometer over one
/// representative of each Serre pair.
inline std::vector<HodgeDiamond> enumerate_admissible_diamonds(EulerBranch br) {
  const auto b = constraint_betti(br);
  std::vector<std::pair<int, int>> cells;
  for (int p = 0; p <= kHodgeDim; ++p)
    for (int q = 0; q <= kHodgeDim; ++q) {
      const std::pair<int, int> cell{p, q}, partner{kHodgeDim - p,
                                                    kHodgeDim - q};
      if (cell <= partner && b[static_cast<std::size_t>(p + q)] > 0)
        cells.push_back(cell);
    }
  const std::int64_t k = br == EulerBranch::Unit ? 1 : 0;

  std::vector<HodgeDiamond> out;
  std::vector<int> values(cells.size(), 0);
  for (;;) {
    HodgeDiamond d;
    for (std::size_t i = 0; i < cells.size(); ++i)
      d.set_pair(cells[i].first, cells[i].second, values[i]);
    if (ddbar_constraints_check(d, k).ok) out.push_back(d);

    std::size_t i = cells.size();
    while (i > 0) {
      const auto [p, q] = cells[i - 1];
      if (values[i - 1] < b[static_cast<std::size_t>(p + q)]) break;
      values[--i] = 0;
    }
    if (i == 0) break;
    ++values[i - 1];
  }
  return out;
}

} // namespace exotic
