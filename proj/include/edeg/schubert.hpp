#pragma once

#include <array>
#include <cstdint>

#include <Eigen/Dense>

#include "edeg/numerics/monte_carlo.hpp"
#include "edeg/numerics/rng.hpp"

namespace edeg::schubert {

using Frame = Eigen::Matrix<double, 4, 2>;
using Matrix4 = Eigen::Matrix4d;

/// A line in RP³, stored as an orthonormal 4×2 frame of its 2-plane in R⁴.
class ProjectiveLine {
 public:
  /// Orthonormalizes the columns. Throws DegenerateConfiguration when they
  /// are numerically dependent.
  explicit ProjectiveLine(const Frame& spanning);

  const Frame& frame() const noexcept { return frame_; }
  Eigen::Vector4d point(double s, double t) const { return s * frame_.col(0) + t * frame_.col(1); }

 private:
  Frame frame_;
};

/// O(4)-invariant random line: column span of a 4×2 standard Gaussian matrix.
ProjectiveLine sample_line(numerics::Rng& rng);

/// Symmetric 4×4 matrix Q of the quadric {pᵀQp = 0}, ‖Q‖_F = 1.
struct QuadricSurface {
  Matrix4 q;
  double smallest_singular_ratio = 0.0;  // σ₉/σ₁ of the 9×10 system
  double residual = 0.0;                 // ‖A v‖/σ₁ for the null vector v
};

/// 9×10 system: three points per line (a, a+b, a−b for frame columns a, b)
/// against the monomials x_i x_j, i <= j.
Eigen::Matrix<double, 9, 10> quadric_system(const ProjectiveLine& l1, const ProjectiveLine& l2,
                                            const ProjectiveLine& l3);

/// Unique quadric through three lines in general position (null vector of the
/// 9×10 system by SVD). Throws DegenerateConfiguration when the null space is
/// not one-dimensional.
QuadricSurface quadric_through(const ProjectiveLine& l1, const ProjectiveLine& l2, const ProjectiveLine& l3);

/// Number of real lines meeting all four lines: 2 or 0 according to the sign of
/// the discriminant of Q restricted to l4. Throws DegenerateConfiguration on a
/// (near-)tangent restriction.
int count_real_meets(const ProjectiveLine& l1, const ProjectiveLine& l2, const ProjectiveLine& l3,
                     const ProjectiveLine& l4);

struct Delta13Estimate {
  numerics::MonteCarloEstimate estimate;
  std::uint64_t degenerate = 0;  // resampled configurations
  std::uint64_t zero_count = 0;
  std::uint64_t two_count = 0;
  std::uint64_t other_count = 0;  // never expected; counted rather than hidden
};

/// Mean number of real lines meeting four random lines in RP³. Degenerate
/// configurations are resampled and tallied. Sharded over threads with
/// derived seeds; the result depends on (trials, seed) only.
Delta13Estimate estimate_delta13(std::uint64_t trials, std::uint64_t seed, unsigned threads = 1);

/// Same experiment with every line pre-rotated by a fixed orthogonal matrix.
Delta13Estimate estimate_delta13_rotated(std::uint64_t trials, std::uint64_t seed, const Matrix4& rotation,
                                         unsigned threads = 1);

/// Haar-random orthogonal 4×4 matrix (QR of a Gaussian matrix with sign fix).
Matrix4 random_rotation(numerics::Rng& rng);

/// Intersection of n hyperplanes in RPⁿ given by the rows of an n×(n+1)
/// matrix: the number of projective points (1 for full rank). Throws
/// DegenerateConfiguration on rank deficiency.
int intersect_hyperplanes(const Eigen::MatrixXd& normals);

/// n Gaussian hyperplanes in RPⁿ, intersected; resamples on degeneracy.
int check_delta0(int n, numerics::Rng& rng);

}  // namespace edeg::schubert
