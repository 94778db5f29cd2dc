#pragma once

// Derivative-free maximization over unit directions and orthonormal frames:
// a deterministic quasi-uniform grid picks starting points, a Nelder-Mead
// simplex in local coordinates refines them.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "rspcorr/random.hpp"
#include "rspcorr/types.hpp"

namespace rspcorr {

struct OptimizerOptions {
  int grid_points = 1000;  // sphere seeding for direction searches
  int frame_grid = 20;     // per-angle cells for frame searches (frame_grid^3 total)
  double refine_tol = 1e-6;
  int iter_cap = 500;      // per local refinement
  int starts = 4;          // best grid points handed to the local refinement
  std::uint64_t seed = 0;  // 0 = unrotated grid
};

template <std::size_t N>
struct SimplexResult {
  std::array<double, N> x{};
  double value = 0;
  int iterations = 0;
  bool converged = false;
};

/// Nelder-Mead maximization of f starting from x0 with initial edge `step`.
/// Converged when the simplex diameter drops below tol; restarts from the best
/// vertex while restarting still helps.
template <std::size_t N, class F>
SimplexResult<N> nelder_mead_max(F&& f, std::array<double, N> x0, double step, double tol, int iter_cap) {
  using Point = std::array<double, N>;
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;

  SimplexResult<N> res;
  res.x = x0;
  res.value = f(x0);

  for (int restart = 0; restart < 4; ++restart) {
    std::array<Point, N + 1> pts;
    std::array<double, N + 1> vals;
    pts[0] = res.x;
    vals[0] = res.value;
    for (std::size_t i = 0; i < N; ++i) {
      pts[i + 1] = res.x;
      pts[i + 1][i] += step;
      vals[i + 1] = f(pts[i + 1]);
    }

    bool done = false;
    while (res.iterations < iter_cap) {
      std::array<std::size_t, N + 1> order;
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](auto l, auto r) { return vals[l] > vals[r]; });
      const std::size_t best = order.front(), worst = order.back(), second = order[N - 1];

      double diameter = 0;
      for (std::size_t i = 0; i <= N; ++i) {
        double d2 = 0;
        for (std::size_t k = 0; k < N; ++k) d2 += (pts[i][k] - pts[best][k]) * (pts[i][k] - pts[best][k]);
        diameter = std::max(diameter, std::sqrt(d2));
      }
      if (diameter < tol) {
        done = true;
        break;
      }
      ++res.iterations;

      Point centroid{};
      for (std::size_t i = 0; i <= N; ++i)
        if (i != worst)
          for (std::size_t k = 0; k < N; ++k) centroid[k] += pts[i][k] / double(N);

      auto along = [&](double t) {
        Point p;
        for (std::size_t k = 0; k < N; ++k) p[k] = centroid[k] + t * (pts[worst][k] - centroid[k]);
        return p;
      };

      const Point xr = along(-kReflect);
      const double fr = f(xr);
      if (fr > vals[best]) {
        const Point xe = along(-kExpand);
        const double fe = f(xe);
        if (fe > fr) pts[worst] = xe, vals[worst] = fe;
        else pts[worst] = xr, vals[worst] = fr;
      } else if (fr > vals[second]) {
        pts[worst] = xr, vals[worst] = fr;
      } else {
        const bool outside = fr > vals[worst];
        const Point xc = along(outside ? -kContract : kContract);
        const double fc = f(xc);
        if (fc > std::max(fr, vals[worst]) || (!outside && fc > vals[worst])) {
          pts[worst] = xc, vals[worst] = fc;
        } else {
          for (std::size_t i = 0; i <= N; ++i) {
            if (i == best) continue;
            for (std::size_t k = 0; k < N; ++k) pts[i][k] = pts[best][k] + kShrink * (pts[i][k] - pts[best][k]);
            vals[i] = f(pts[i]);
          }
        }
      }
    }

    const auto it = std::max_element(vals.begin(), vals.end());
    const double gain = *it - res.value;
    if (*it >= res.value) {
      res.value = *it;
      res.x = pts[std::size_t(it - vals.begin())];
    }
    res.converged = done;
    if (!done || gain <= tol * tol) break;
    step = std::max(step * 0.5, 10 * tol);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Directions

/// Random rotation fixed by seed; identity for seed 0.
inline Mat3 grid_rotation(std::uint64_t seed) {
  if (seed == 0) return Mat3::Identity();
  std::mt19937_64 eng(seed);
  const Vec3 axis = random_unit(eng);
  const double angle = uniform(eng, 0, 2 * std::numbers::pi);
  return Eigen::AngleAxisd(angle, axis).toRotationMatrix();
}

/// Golden-angle spiral; n quasi-uniform points on the unit sphere.
inline std::vector<Vec3> fibonacci_sphere(int n, std::uint64_t seed = 0) {
  const Mat3 rot = grid_rotation(seed);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Vec3> pts;
  pts.reserve(std::size_t(n));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    pts.push_back(rot * Vec3(r * std::cos(phi), r * std::sin(phi), z));
  }
  return pts;
}

struct DirectionSearch {
  Vec3 witness = Vec3::UnitZ();
  double value = 0;
  int iterations = 0;
  bool converged = false;
};

/// Maximizes f(unit vector) over the sphere.
template <class F>
DirectionSearch maximize_over_sphere(F&& f, const OptimizerOptions& opt) {
  const auto grid = fibonacci_sphere(std::max(opt.grid_points, 16), opt.seed);
  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) scored.emplace_back(f(grid[i]), i);
  const std::size_t keep = std::min<std::size_t>(std::size_t(std::max(opt.starts, 1)), scored.size());
  std::partial_sort(scored.begin(), scored.begin() + long(keep), scored.end(),
                    [](const auto& l, const auto& r) { return l.first > r.first || (l.first == r.first && l.second < r.second); });

  // Spacing of the seeding grid sets the first simplex edge.
  const double spacing = std::sqrt(4.0 * std::numbers::pi / double(grid.size()));

  DirectionSearch best;
  best.value = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < keep; ++s) {
    const Vec3 centre = grid[scored[s].second];
    const Vec3 e1 = any_orthogonal(centre);
    const Vec3 e2 = centre.cross(e1);
    auto dir = [&](const std::array<double, 2>& x) { return Vec3(centre + x[0] * e1 + x[1] * e2).normalized(); };
    const auto r = nelder_mead_max([&](const std::array<double, 2>& x) { return f(dir(x)); },
                                   std::array<double, 2>{0.0, 0.0}, spacing, opt.refine_tol, opt.iter_cap);
    best.iterations += r.iterations;
    if (r.value > best.value) {
      best.value = r.value;
      best.witness = dir(r.x);
      best.converged = r.converged;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Frames (columns of a rotation matrix)

inline Mat3 euler_zyz(double a, double b, double c) {
  return (Eigen::AngleAxisd(a, Vec3::UnitZ()) * Eigen::AngleAxisd(b, Vec3::UnitY()) *
          Eigen::AngleAxisd(c, Vec3::UnitZ()))
      .toRotationMatrix();
}

/// Frame perturbed by a rotation vector w applied in the frame's own axes.
inline Mat3 perturb_frame(const Mat3& base, const Vec3& w) {
  const double angle = w.norm();
  if (angle == 0.0) return base;
  return base * Eigen::AngleAxisd(angle, w / angle).toRotationMatrix();
}

struct FrameSearch {
  Mat3 witness = Mat3::Identity();
  double value = 0;
  int iterations = 0;
  bool converged = false;
};

/// Maximizes f(frame) over orthonormal frames, seeded by a frame_grid^3
/// Euler-angle grid.
template <class F>
FrameSearch maximize_over_frames(F&& f, const OptimizerOptions& opt) {
  const int n = std::max(opt.frame_grid, 4);
  const Mat3 rot = grid_rotation(opt.seed);
  const double two_pi = 2 * std::numbers::pi;

  std::vector<Mat3> grid;
  grid.reserve(std::size_t(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        grid.push_back(rot * euler_zyz(two_pi * (i + 0.5) / n, std::numbers::pi * (j + 0.5) / n, two_pi * (k + 0.5) / n));

  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) scored.emplace_back(f(grid[i]), i);
  const std::size_t keep = std::min<std::size_t>(std::size_t(std::max(opt.starts, 1)), scored.size());
  std::partial_sort(scored.begin(), scored.begin() + long(keep), scored.end(),
                    [](const auto& l, const auto& r) { return l.first > r.first || (l.first == r.first && l.second < r.second); });

  const double spacing = std::numbers::pi / n;

  FrameSearch best;
  best.value = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < keep; ++s) {
    const Mat3 base = grid[scored[s].second];
    auto frame = [&](const std::array<double, 3>& w) { return perturb_frame(base, Vec3(w[0], w[1], w[2])); };
    const auto r = nelder_mead_max([&](const std::array<double, 3>& w) { return f(frame(w)); },
                                   std::array<double, 3>{0, 0, 0}, spacing, opt.refine_tol, opt.iter_cap);
    best.iterations += r.iterations;
    if (r.value > best.value) {
      best.value = r.value;
      best.witness = frame(r.x);
      best.converged = r.converged;
    }
  }
  return best;
}

}  // namespace rspcorr
