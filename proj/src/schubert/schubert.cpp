#include "edeg/schubert.hpp"

#include <cmath>
#include <sstream>

#include "edeg/errors.hpp"

namespace edeg::schubert {
namespace {

// Monomials x_i x_j, i <= j, in row-major order.
constexpr std::array<std::array<int, 2>, 10> kMonomials{{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1},
                                                         {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}};

Frame gaussian_frame(numerics::Rng& rng) {
  Frame m;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 4; ++i) m(i, j) = rng.normal();
  return m;
}

struct Tally {
  numerics::RunningStats stats;
  std::uint64_t degenerate = 0, zero = 0, two = 0, other = 0;
};

Delta13Estimate run_delta13(std::uint64_t trials, std::uint64_t seed, const Matrix4* rotation, unsigned threads) {
  if (trials < 2) throw std::invalid_argument("estimate_delta13: need at least 2 trials");
  auto shards = numerics::run_shards(trials, seed, threads, [&](std::uint64_t, std::uint64_t count, numerics::Rng& rng) {
    Tally t;
    for (std::uint64_t i = 0; i < count; ++i) {
      for (;;) {
        try {
          std::array<ProjectiveLine, 4> lines{sample_line(rng), sample_line(rng), sample_line(rng),
                                              sample_line(rng)};
          if (rotation)
            for (auto& l : lines) l = ProjectiveLine(*rotation * l.frame());
          const int c = count_real_meets(lines[0], lines[1], lines[2], lines[3]);
          if (c == 0) ++t.zero;
          else if (c == 2) ++t.two;
          else ++t.other;
          t.stats.push(c);
          break;
        } catch (const DegenerateConfiguration&) {
          ++t.degenerate;
        }
      }
    }
    return t;
  });
  Delta13Estimate out;
  numerics::RunningStats total;
  for (const auto& s : shards) {
    total.merge(s.stats);
    out.degenerate += s.degenerate;
    out.zero_count += s.zero;
    out.two_count += s.two;
    out.other_count += s.other;
  }
  out.estimate = numerics::finalize(total, seed);
  return out;
}

}  // namespace

ProjectiveLine::ProjectiveLine(const Frame& spanning) {
  if (!spanning.allFinite()) throw std::invalid_argument("ProjectiveLine: non-finite frame");
  Eigen::Vector4d a = spanning.col(0);
  const double na = a.norm();
  if (!(na > 1e-12)) throw DegenerateConfiguration("ProjectiveLine: first column vanishes");
  a /= na;
  Eigen::Vector4d b = spanning.col(1) - a.dot(spanning.col(1)) * a;
  b -= a.dot(b) * a;  // second Gram–Schmidt pass
  const double nb = b.norm();
  if (!(nb > 1e-12 * spanning.col(1).norm()) || nb == 0.0)
    throw DegenerateConfiguration("ProjectiveLine: frame has rank < 2");
  frame_.col(0) = a;
  frame_.col(1) = b / nb;
}

ProjectiveLine sample_line(numerics::Rng& rng) {
  for (;;) {
    try {
      return ProjectiveLine(gaussian_frame(rng));
    } catch (const DegenerateConfiguration&) {
    }
  }
}

Eigen::Matrix<double, 9, 10> quadric_system(const ProjectiveLine& l1, const ProjectiveLine& l2,
                                            const ProjectiveLine& l3) {
  Eigen::Matrix<double, 9, 10> A;
  int row = 0;
  for (const ProjectiveLine* l : {&l1, &l2, &l3}) {
    for (double t : {0.0, 1.0, -1.0}) {
      const Eigen::Vector4d p = l->point(1.0, t);
      for (int m = 0; m < 10; ++m) A(row, m) = p[kMonomials[m][0]] * p[kMonomials[m][1]];
      ++row;
    }
  }
  return A;
}

QuadricSurface quadric_through(const ProjectiveLine& l1, const ProjectiveLine& l2, const ProjectiveLine& l3) {
  const auto A = quadric_system(l1, l2, l3);
  Eigen::JacobiSVD<Eigen::Matrix<double, 9, 10>> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double s1 = sv[0];
  QuadricSurface out;
  out.smallest_singular_ratio = s1 > 0.0 ? sv[8] / s1 : 0.0;
  if (!(out.smallest_singular_ratio > 1e-10)) {
    std::ostringstream msg;
    msg << "quadric_through: null space is not one-dimensional (sigma_9/sigma_1 = " << out.smallest_singular_ratio
        << ")";
    throw DegenerateConfiguration(msg.str());
  }
  const Eigen::Matrix<double, 10, 1> v = svd.matrixV().col(9);
  out.residual = (A * v).norm() / s1;
  if (out.residual > 1e-10) throw DegenerateConfiguration("quadric_through: null vector residual too large");
  Matrix4 q = Matrix4::Zero();
  for (int m = 0; m < 10; ++m) {
    const int i = kMonomials[m][0], j = kMonomials[m][1];
    if (i == j) q(i, i) = v[m];
    else q(i, j) = q(j, i) = 0.5 * v[m];
  }
  out.q = q / q.norm();
  return out;
}

int count_real_meets(const ProjectiveLine& l1, const ProjectiveLine& l2, const ProjectiveLine& l3,
                     const ProjectiveLine& l4) {
  const Matrix4 q = quadric_through(l1, l2, l3).q;
  const auto a = l4.frame().col(0), b = l4.frame().col(1);
  const double A = a.dot(q * a), B = a.dot(q * b), C = b.dot(q * b);
  const double disc = B * B - A * C;
  // ‖Q‖_F = 1 and the frame is orthonormal, so |A|, |B|, |C| <= 1: an absolute cut is scale-free
  if (std::abs(disc) < 1e-12)
    throw DegenerateConfiguration("count_real_meets: fourth line is (nearly) tangent to the quadric");
  return disc > 0.0 ? 2 : 0;
}

Delta13Estimate estimate_delta13(std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  return run_delta13(trials, seed, nullptr, threads);
}

Delta13Estimate estimate_delta13_rotated(std::uint64_t trials, std::uint64_t seed, const Matrix4& rotation,
                                         unsigned threads) {
  if (!(rotation.transpose() * rotation).isApprox(Matrix4::Identity(), 1e-12))
    throw std::invalid_argument("estimate_delta13_rotated: matrix is not orthogonal");
  return run_delta13(trials, seed, &rotation, threads);
}

Matrix4 random_rotation(numerics::Rng& rng) {
  Matrix4 g;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Matrix4> qr(g);
  Matrix4 q = qr.householderQ();
  const Matrix4 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 4; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  return q;
}

int intersect_hyperplanes(const Eigen::MatrixXd& normals) {
  const Eigen::Index n = normals.rows();
  if (normals.cols() != n + 1) throw std::invalid_argument("intersect_hyperplanes: need an n x (n+1) matrix");
  Eigen::FullPivLU<Eigen::MatrixXd> lu(normals);
  lu.setThreshold(1e-10);
  if (lu.rank() < n) {
    std::ostringstream msg;
    msg << "intersect_hyperplanes: rank " << lu.rank() << " < " << n << ", intersection is not a point";
    throw DegenerateConfiguration(msg.str());
  }
  const Eigen::MatrixXd kernel = lu.kernel();
  return static_cast<int>(kernel.cols());
}

int check_delta0(int n, numerics::Rng& rng) {
  if (n < 1) throw std::invalid_argument("check_delta0: need n >= 1");
  for (;;) {
    Eigen::MatrixXd normals(n, n + 1);
    for (Eigen::Index i = 0; i < normals.rows(); ++i)
      for (Eigen::Index j = 0; j < normals.cols(); ++j) normals(i, j) = rng.normal();
    try {
      return intersect_hyperplanes(normals);
    } catch (const DegenerateConfiguration&) {
    }
  }
}

}  // namespace edeg::schubert
