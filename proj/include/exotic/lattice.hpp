#pragma once

// Exact integer linear algebra and finitely generated abelian groups.
//
// Everything here works over arbitrary-precision integers (GMP). The Smith
// normal form is the workhorse: cokernels of presentation matrices, torsion
// normalization and the Kunneth formula all reduce to it.

#include "exotic/errors.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace exotic {

using Integer = mpz_class;

inline Integer big_gcd(const Integer &a, const Integer &b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer big_lcm(const Integer &a, const Integer &b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Dense row-major matrix of arbitrary-precision integers. Zero rows or
/// zero columns are allowed; they model maps out of or into the zero group.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : init) {
      if (row.size() != cols_)
        throw DomainError(ErrorKind::InvalidSize, "ragged matrix literal");
      for (long x : row) entries_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix diagonal(std::size_t rows, std::size_t cols,
                            const std::vector<Integer> &diag) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i)
      m(i, i) = diag[i];
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  Integer &operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Integer &operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  [[nodiscard]] const std::vector<Integer> &entries() const noexcept {
    return entries_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer &factor) {
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(dst, j) += factor * (*this)(src, j);
  }
  // col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer &factor) {
    for (std::size_t i = 0; i < rows_; ++i)
      (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  [[nodiscard]] IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && (*this)(i, j) != 0) return false;
    return true;
  }

  [[nodiscard]] bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const IntMatrix &a, const IntMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    if (a.cols_ != b.rows_)
      throw DomainError(ErrorKind::InvalidSize,
                        "matrix product dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer &aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::ostream &operator<<(std::ostream &os, const IntMatrix &m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j)
        os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Fraction-free Gaussian elimination (Bareiss). Exact for any square input.
inline Integer determinant(IntMatrix a) {
  if (!a.is_square())
    throw DomainError(ErrorKind::InvalidSize, "determinant of non-square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

struct SmithForm {
  IntMatrix U; ///< rows x rows, unimodular
  IntMatrix D; ///< rows x cols, diagonal, nonnegative, d1 | d2 | ...
  IntMatrix V; ///< cols x cols, unimodular

  /// Number of nonzero diagonal entries.
  [[nodiscard]] std::size_t rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < D.rows() && i < D.cols(); ++i)
      if (D(i, i) != 0) ++r;
    return r;
  }
  [[nodiscard]] std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < D.rows() && i < D.cols(); ++i)
      d.push_back(D(i, i));
    return d;
  }
};

/// Computes U, D, V with U * M * V == D.
///
/// Pivoting always picks the nonzero entry of least absolute value in the
/// active submatrix. Row and column reductions use truncated division, so
/// every pass either clears the pivot cross or produces a strictly smaller
/// pivot candidate. A pivot that fails to divide the rest of the block has
/// an offending row folded into its own row, which again lowers the pivot.
inline SmithForm smith_normal_form(const IntMatrix &m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm s{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix &D = s.D;

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // locate pivot
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (D(i, j) == 0) continue;
          if (!best || mpz_cmpabs(D(i, j).get_mpz_t(),
                                D(best->first, best->second).get_mpz_t()) < 0)
            best = {i, j};
        }
      if (!best) return s; // remaining block is zero

      D.swap_rows(t, best->first);
      s.U.swap_rows(t, best->first);
      D.swap_cols(t, best->second);
      s.V.swap_cols(t, best->second);

      const Integer pivot = D(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), pivot.get_mpz_t());
        D.add_row(i, t, -q);
        s.U.add_row(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), pivot.get_mpz_t());
        D.add_col(j, t, -q);
        s.V.add_col(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility of the remaining block
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), pivot.get_mpz_t())) {
            offender = i;
            break;
          }
      if (!offender) break;
      D.add_row(t, *offender, 1);
      s.U.add_row(t, *offender, 1);
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

/// Finitely generated abelian group Z^free_rank + Z_{t1} + ... + Z_{tr}
/// with every t >= 2 and t1 | t2 | ... | tr.
class AbelianGroup {
public:
  AbelianGroup() = default;

  /// Normalizes an arbitrary list of cyclic factors. A factor 0 contributes
  /// a free summand, +-1 contributes nothing, negatives are taken by
  /// absolute value.
  AbelianGroup(std::size_t free_rank, const std::vector<Integer> &factors)
    : free_rank_(free_rank) {
    if (factors.empty()) return;
    const auto n = factors.size();
    const SmithForm s =
      smith_normal_form(IntMatrix::diagonal(n, n, factors));
    for (const Integer &d : s.diagonal()) {
      if (d == 0) ++free_rank_;
      else if (d >= 2) torsion_.push_back(d);
    }
    check_invariants();
  }

  static AbelianGroup trivial() { return {}; }
  static AbelianGroup free(std::size_t rank) { return AbelianGroup(rank, {}); }
  /// Z_n, with n == 0 meaning Z.
  static AbelianGroup cyclic(const Integer &n) { return AbelianGroup(0, {n}); }

  [[nodiscard]] std::size_t free_rank() const noexcept { return free_rank_; }
  [[nodiscard]] const std::vector<Integer> &torsion() const noexcept {
    return torsion_;
  }
  [[nodiscard]] bool is_trivial() const noexcept {
    return free_rank_ == 0 && torsion_.empty();
  }
  [[nodiscard]] bool is_finite() const noexcept { return free_rank_ == 0; }

  /// Group order, or nullopt when infinite.
  [[nodiscard]] std::optional<Integer> order() const {
    if (free_rank_ != 0) return std::nullopt;
    Integer o = 1;
    for (const auto &t : torsion_) o *= t;
    return o;
  }

  [[nodiscard]] AbelianGroup direct_sum(const AbelianGroup &other) const {
    std::vector<Integer> factors = torsion_;
    factors.insert(factors.end(), other.torsion_.begin(),
                   other.torsion_.end());
    return AbelianGroup(free_rank_ + other.free_rank_, factors);
  }

  /// Throws if the divisibility-chain invariant is broken.
  void check_invariants() const {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
      if (torsion_[i] < 2)
        throw DomainError(ErrorKind::InvalidInput, "torsion entry below 2");
      if (i + 1 < torsion_.size() &&
          !mpz_divisible_p(torsion_[i + 1].get_mpz_t(),
                           torsion_[i].get_mpz_t()))
        throw DomainError(ErrorKind::InvalidInput,
                          "torsion is not a divisibility chain");
    }
  }

  friend bool operator==(const AbelianGroup &, const AbelianGroup &) = default;

  /// "0", "Z", "Z^2 + Z_2 + Z_12", ...
  [[nodiscard]] std::string to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0) {
      os << 'Z';
      if (free_rank_ > 1) os << '^' << free_rank_;
      first = false;
    }
    for (const auto &t : torsion_) {
      os << (first ? "" : " + ") << "Z_" << t;
      first = false;
    }
    return os.str();
  }

  friend std::ostream &operator<<(std::ostream &os, const AbelianGroup &g) {
    return os << g.to_string();
  }

private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

inline bool group_equal(const AbelianGroup &a, const AbelianGroup &b) {
  return a == b;
}

/// Z^rows / image(M : Z^cols -> Z^rows).
inline AbelianGroup cokernel_group(const IntMatrix &m) {
  const SmithForm s = smith_normal_form(m);
  const std::size_t rank = s.rank();
  std::vector<Integer> torsion;
  for (const Integer &d : s.diagonal())
    if (d >= 2) torsion.push_back(d);
  AbelianGroup g(m.rows() - rank, torsion);
  g.check_invariants();
  return g;
}

/// Rank of ker(M : Z^cols -> Z^rows); the kernel is always free.
inline std::size_t kernel_rank(const IntMatrix &m) {
  return m.cols() - smith_normal_form(m).rank();
}

struct TensorTor {
  AbelianGroup tensor;
  AbelianGroup tor;
};

/// Tensor product and Tor over Z, expanded bilinearly over cyclic summands.
inline TensorTor tensor_and_tor(const AbelianGroup &a, const AbelianGroup &b) {
  const std::size_t free = a.free_rank() * b.free_rank();
  std::vector<Integer> tensor_factors;
  std::vector<Integer> tor_factors;
  for (std::size_t i = 0; i < a.free_rank(); ++i)
    tensor_factors.insert(tensor_factors.end(), b.torsion().begin(),
                          b.torsion().end());
  for (std::size_t i = 0; i < b.free_rank(); ++i)
    tensor_factors.insert(tensor_factors.end(), a.torsion().begin(),
                          a.torsion().end());
  for (const auto &x : a.torsion())
    for (const auto &y : b.torsion()) {
      const Integer g = big_gcd(x, y);
      tensor_factors.push_back(g);
      tor_factors.push_back(g);
    }
  return {AbelianGroup(free, tensor_factors), AbelianGroup(0, tor_factors)};
}

/// Cohomology-style graded group: degree -> group, trivial degrees absent.
class GradedGroups {
public:
  using Map = std::map<int, AbelianGroup>;

  GradedGroups() = default;
  GradedGroups(std::initializer_list<std::pair<const int, AbelianGroup>> init) {
    for (const auto &[deg, g] : init) set(deg, g);
  }

  /// Z in degree 0 only.
  static GradedGroups point() { return {{0, AbelianGroup::free(1)}}; }
  /// Z in degrees 0 and dim.
  static GradedGroups sphere(int dim) {
    if (dim <= 0)
      throw DomainError(ErrorKind::InvalidDimension, "sphere dimension < 1");
    return {{0, AbelianGroup::free(1)}, {dim, AbelianGroup::free(1)}};
  }

  void set(int degree, const AbelianGroup &g) {
    if (degree < 0)
      throw DomainError(ErrorKind::InvalidInput, "negative degree");
    if (g.is_trivial()) groups_.erase(degree);
    else groups_[degree] = g;
  }

  [[nodiscard]] AbelianGroup at(int degree) const {
    auto it = groups_.find(degree);
    return it == groups_.end() ? AbelianGroup::trivial() : it->second;
  }

  [[nodiscard]] std::vector<int> degrees() const {
    std::vector<int> d;
    for (const auto &[deg, g] : groups_) d.push_back(deg);
    return d;
  }

  [[nodiscard]] const Map &groups() const noexcept { return groups_; }
  [[nodiscard]] int top_degree() const {
    return groups_.empty() ? -1 : groups_.rbegin()->first;
  }

  friend bool operator==(const GradedGroups &, const GradedGroups &) = default;

  friend std::ostream &operator<<(std::ostream &os, const GradedGroups &g) {
    os << '{';
    bool first = true;
    for (const auto &[deg, grp] : g.groups_) {
      os << (first ? "" : ", ") << deg << ": " << grp;
      first = false;
    }
    return os << '}';
  }

private:
  Map groups_;
};

enum class Grading { Cohomology, Homology };

/// Kunneth formula for a product of finite CW complexes.
///
///   cohomology: H^n = sum_{p+q=n} A^p (x) B^q + sum_{p+q=n+1} Tor(A^p, B^q)
///   homology:   H_n = sum_{p+q=n} A_p (x) B_q + sum_{p+q=n-1} Tor(A_p, B_q)
///
/// In cohomology the Tor term sits one degree below p + q, so torsion in
/// degree 0 of both factors has no valid target and is rejected.
inline GradedGroups kunneth(const GradedGroups &a, const GradedGroups &b,
                            Grading grading = Grading::Cohomology) {
  const int shift = grading == Grading::Cohomology ? -1 : 1;
  std::map<int, AbelianGroup> acc;
  for (const auto &[p, ga] : a.groups())
    for (const auto &[q, gb] : b.groups()) {
      const TensorTor tt = tensor_and_tor(ga, gb);
      acc[p + q] = acc[p + q].direct_sum(tt.tensor);
      if (tt.tor.is_trivial()) continue;
      if (p + q + shift < 0)
        throw DomainError(ErrorKind::InvalidInput,
                          "torsion in degree 0 is not the cohomology of a "
                          "CW complex");
      acc[p + q + shift] = acc[p + q + shift].direct_sum(tt.tor);
    }
  GradedGroups out;
  for (const auto &[deg, g] : acc) out.set(deg, g);
  return out;
}

/// Degrees of the Kunneth product that receive a nonzero Tor contribution.
inline std::vector<int> kunneth_tor_degrees(const GradedGroups &a,
                                            const GradedGroups &b,
                                            Grading grading = Grading::Cohomology) {
  const int shift = grading == Grading::Cohomology ? -1 : 1;
  std::vector<int> degrees;
  for (const auto &[p, ga] : a.groups())
    for (const auto &[q, gb] : b.groups())
      if (!tensor_and_tor(ga, gb).tor.is_trivial())
        degrees.push_back(p + q + shift);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  return degrees;
}

/// Degrees whose group has nonzero torsion.
inline std::vector<int> torsion_degrees(const GradedGroups &h) {
  std::vector<int> degrees;
  for (const auto &[deg, g] : h.groups())
    if (!g.torsion().empty()) degrees.push_back(deg);
  return degrees;
}

} // namespace exotic
