#include "mediator/simplex.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>

namespace mediator {

namespace {

// Tableau over [A | I] (artificial columns keep B^-1 available for duals).
class Tableau {
 public:
  Tableau(const Matrix& a, std::vector<Rational> b)
      : m_(a.size()), n_(m_ == 0 ? 0 : a.front().size()), rows_(m_), rhs_(std::move(b)), basis_(m_) {
    for (std::size_t r = 0; r < m_; ++r) {
      rows_[r] = a[r];
      rows_[r].resize(n_ + m_);
      rows_[r][n_ + r] = Rational(1);
      basis_[r] = n_ + r;
    }
  }

  // y = c_B B^-1, read off the artificial block.
  std::vector<Rational> duals(const std::vector<Rational>& cost) const {
    std::vector<Rational> y(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t k = 0; k < m_; ++k) y[k] += cb * rows_[r][n_ + k];
    }
    return y;
  }

  // Runs Bland's rule over columns [0, allowed). Returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, std::size_t allowed, const Matrix& original) {
    for (;;) {
      auto y = duals(cost);
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed && !entering; ++j) {
        Rational reduced = cost[j];
        for (std::size_t k = 0; k < m_; ++k) reduced -= y[k] * column_entry(original, k, j);
        if (reduced.sign() < 0) entering = j;
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (rows_[r][*entering].sign() <= 0) continue;
        Rational ratio = rhs_[r] / rows_[r][*entering];
        if (!leaving || ratio < best || (ratio == best && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Rational inv = rows_[row][col].reciprocal();
    for (auto& v : rows_[row]) v *= inv;
    rhs_[row] *= inv;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == row || rows_[r][col].is_zero()) continue;
      Rational factor = rows_[r][col];
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (!rows_[row][j].is_zero()) rows_[r][j] -= factor * rows_[row][j];
      }
      rhs_[r] -= factor * rhs_[row];
    }
    basis_[row] = col;
  }

  // Pivots basic artificials out where a real column allows it; rows that
  // stay artificial are redundant and sit at zero level.
  void expel_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!rows_[r][j].is_zero()) {
          pivot(r, j);
          break;
        }
      }
    }
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_ + m_);
    for (std::size_t r = 0; r < m_; ++r) x[basis_[r]] = rhs_[r];
    return x;
  }

 private:
  // Column j of [A | I] in the original (sign-normalised) system.
  Rational column_entry(const Matrix& original, std::size_t row, std::size_t j) const {
    if (j < n_) return original[row][j];
    return j - n_ == row ? Rational(1) : Rational(0);
  }

  std::size_t m_;
  std::size_t n_;
  Matrix rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LPResult minimize(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("minimize: ragged constraint matrix");
  }
  if (b.size() != m) throw std::invalid_argument("minimize: rhs size mismatch");

  // Flip rows so the right-hand side is non-negative.
  Matrix normalised = a;
  std::vector<Rational> rhs = b;
  std::vector<int> flip(m, 1);
  for (std::size_t r = 0; r < m; ++r) {
    if (rhs[r].sign() < 0) {
      flip[r] = -1;
      rhs[r] = -rhs[r];
      for (auto& v : normalised[r]) v = -v;
    }
  }
  auto unflip = [&](std::vector<Rational> y) {
    for (std::size_t r = 0; r < m; ++r) {
      if (flip[r] < 0) y[r] = -y[r];
    }
    return y;
  };

  Tableau tableau(normalised, rhs);
  std::vector<Rational> phase1(n + m);
  for (std::size_t r = 0; r < m; ++r) phase1[n + r] = Rational(1);
  tableau.optimize(phase1, n + m, normalised);

  LPResult result;
  auto x = tableau.solution();
  Rational infeasibility;
  for (std::size_t r = 0; r < m; ++r) infeasibility += x[n + r];
  if (infeasibility.is_positive()) {
    // Phase-one duals y satisfy A^T y <= 0 and b.y = infeasibility > 0.
    auto y = unflip(tableau.duals(phase1));
    for (auto& v : y) v = -v;
    result.status = LPStatus::Infeasible;
    result.farkas = std::move(y);
    return result;
  }

  tableau.expel_artificials();
  std::vector<Rational> phase2(n + m);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  if (!tableau.optimize(phase2, n, normalised)) {
    result.status = LPStatus::Unbounded;
    return result;
  }
  x = tableau.solution();
  x.resize(n);
  result.status = LPStatus::Optimal;
  for (std::size_t j = 0; j < n; ++j) result.objective += c[j] * x[j];
  result.x = std::move(x);
  result.dual = unflip(tableau.duals(phase2));
  return result;
}

}  // namespace mediator
