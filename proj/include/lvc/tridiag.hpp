#pragma once

#include <span>
#include <vector>

namespace lvc {

/// Thomas algorithm with the elimination factors precomputed, so that many
/// systems with the same matrix cost one forward/backward sweep each.
/// No pivoting; intended for the diagonally dominant matrices produced by
/// implicit diffusion and shifted Helmholtz operators.
class TridiagonalSolver {
 public:
  /// lower/upper have size n-1, diag has size n.
  TridiagonalSolver(const std::vector<double>& lower, const std::vector<double>& diag,
                    const std::vector<double>& upper);

  /// Overwrites rhs with the solution.
  void solve(std::span<double> rhs) const;

  std::size_t size() const { return inv_diag_.size(); }

 private:
  std::vector<double> lower_;
  std::vector<double> cprime_;
  std::vector<double> inv_diag_;
};

/// One-shot solve, for tests and small problems.
std::vector<double> solve_tridiagonal(const std::vector<double>& lower,
                                      const std::vector<double>& diag,
                                      const std::vector<double>& upper,
                                      std::vector<double> rhs);

/// Row-major 2x2 block.
struct Mat2 {
  double a = 0, b = 0, c = 0, d = 0;
};

/// Block Thomas elimination for 2x2-block tridiagonal systems (the Jacobians
/// of the coupled steady and traveling-wave Newton solves). sub/sup have size
/// n-1, diag size n, rhs size 2n interleaved (u_0, v_0, u_1, v_1, ...).
/// All block arrays are consumed as scratch.
void solve_block_tridiagonal(std::vector<Mat2>& sub, std::vector<Mat2>& diag,
                             std::vector<Mat2>& sup, std::span<double> rhs);

}  // namespace lvc
