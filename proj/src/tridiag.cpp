#include "lvc/tridiag.hpp"

#include <cmath>
#include <stdexcept>

namespace lvc {

TridiagonalSolver::TridiagonalSolver(const std::vector<double>& lower,
                                     const std::vector<double>& diag,
                                     const std::vector<double>& upper)
    : lower_(lower) {
  const std::size_t n = diag.size();
  if (n == 0 || lower.size() != n - 1 || upper.size() != n - 1)
    throw std::invalid_argument("tridiagonal solver: inconsistent band sizes");
  cprime_.resize(n - 1);
  inv_diag_.resize(n);

  double denom = diag[0];
  if (denom == 0.0) throw std::runtime_error("tridiagonal solve failure: zero pivot");
  inv_diag_[0] = 1.0 / denom;
  for (std::size_t i = 1; i < n; ++i) {
    cprime_[i - 1] = upper[i - 1] * inv_diag_[i - 1];
    denom = diag[i] - lower[i - 1] * cprime_[i - 1];
    if (denom == 0.0 || !std::isfinite(denom))
      throw std::runtime_error("tridiagonal solve failure: zero pivot");
    inv_diag_[i] = 1.0 / denom;
  }
}

void TridiagonalSolver::solve(std::span<double> rhs) const {
  const std::size_t n = inv_diag_.size();
  if (rhs.size() != n) throw std::invalid_argument("tridiagonal solve: rhs size mismatch");
  rhs[0] *= inv_diag_[0];
  for (std::size_t i = 1; i < n; ++i)
    rhs[i] = (rhs[i] - lower_[i - 1] * rhs[i - 1]) * inv_diag_[i];
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= cprime_[i] * rhs[i + 1];
}

std::vector<double> solve_tridiagonal(const std::vector<double>& lower,
                                      const std::vector<double>& diag,
                                      const std::vector<double>& upper,
                                      std::vector<double> rhs) {
  TridiagonalSolver solver(lower, diag, upper);
  solver.solve(rhs);
  return rhs;
}

namespace {

inline Mat2 inverse(const Mat2& m) {
  const double det = m.a * m.d - m.b * m.c;
  if (det == 0.0 || !std::isfinite(det))
    throw std::runtime_error("block tridiagonal solve failure: singular pivot");
  const double inv = 1.0 / det;
  return {m.d * inv, -m.b * inv, -m.c * inv, m.a * inv};
}

inline Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline Mat2 sub(const Mat2& x, const Mat2& y) {
  return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

inline void apply(const Mat2& m, double& x, double& y) {
  const double x0 = x, y0 = y;
  x = m.a * x0 + m.b * y0;
  y = m.c * x0 + m.d * y0;
}

}  // namespace

void solve_block_tridiagonal(std::vector<Mat2>& subd, std::vector<Mat2>& diag,
                             std::vector<Mat2>& supd, std::span<double> rhs) {
  const std::size_t n = diag.size();
  if (subd.size() != n - 1 || supd.size() != n - 1 || rhs.size() != 2 * n)
    throw std::invalid_argument("block tridiagonal solve: inconsistent sizes");

  // Forward elimination: diag[i] <- inv(diag[i] - sub[i-1] * supd'[i-1]).
  diag[0] = inverse(diag[0]);
  apply(diag[0], rhs[0], rhs[1]);
  for (std::size_t i = 1; i < n; ++i) {
    supd[i - 1] = mul(diag[i - 1], supd[i - 1]);
    diag[i] = inverse(sub(diag[i], mul(subd[i - 1], supd[i - 1])));
    double rx = subd[i - 1].a * rhs[2 * i - 2] + subd[i - 1].b * rhs[2 * i - 1];
    double ry = subd[i - 1].c * rhs[2 * i - 2] + subd[i - 1].d * rhs[2 * i - 1];
    rhs[2 * i] -= rx;
    rhs[2 * i + 1] -= ry;
    apply(diag[i], rhs[2 * i], rhs[2 * i + 1]);
  }
  for (std::size_t i = n - 1; i-- > 0;) {
    rhs[2 * i] -= supd[i].a * rhs[2 * i + 2] + supd[i].b * rhs[2 * i + 3];
    rhs[2 * i + 1] -= supd[i].c * rhs[2 * i + 2] + supd[i].d * rhs[2 * i + 3];
  }
}

}  // namespace lvc
