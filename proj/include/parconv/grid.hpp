#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace parconv {

/// Finite grid standing in for the compact base Y inside an axis box.
///
/// All suprema/minima over Y taken by the library become max/min over
/// the stored points; `spacing` records the resolution so tolerances can
/// scale with it.
class BaseGrid {
 public:
  BaseGrid() = default;

  /// Uniform tensor grid with `points_per_axis` points along every axis.
  static BaseGrid tensor(const std::vector<std::pair<double, double>>& box,
                         std::size_t points_per_axis);

  /// Explicit point list (points must lie inside the box, pairwise distinct).
  static BaseGrid explicit_points(
      const std::vector<std::pair<double, double>>& box,
      std::vector<std::vector<double>> points);

  std::size_t dim() const { return box_.size(); }
  std::size_t size() const { return points_.size(); }
  const std::vector<std::pair<double, double>>& box() const { return box_; }
  const std::vector<std::vector<double>>& points() const { return points_; }
  const std::vector<double>& point(std::size_t i) const { return points_[i]; }

  /// Max distance from any box point to the nearest grid point.
  double spacing() const { return spacing_; }

  bool is_tensor() const { return points_per_axis_ > 0; }
  std::size_t points_per_axis() const { return points_per_axis_; }

  bool in_box(const std::vector<double>& y, double tol = 1e-12) const;

  /// Index of the grid point equal to y within `tol` (inf-norm), if any.
  std::optional<std::size_t> find_point(const std::vector<double>& y,
                                        double tol = 1e-9) const;
  std::size_t nearest_point(const std::vector<double>& y) const;

  /// Adjacent-point pairs: axis neighbors for tensor grids, sorted-order
  /// neighbors for one-dimensional point lists, nearest neighbors otherwise.
  std::vector<std::pair<std::size_t, std::size_t>> neighbor_pairs() const;

  /// Same box, same construction, with roughly `factor` times the points
  /// per axis (keeps the original points for uniform tensor grids).
  BaseGrid refined(std::size_t factor = 2) const;

 private:
  void compute_spacing();

  std::vector<std::pair<double, double>> box_;
  std::vector<std::vector<double>> points_;
  std::size_t points_per_axis_ = 0;  // 0 when not a tensor grid
  double spacing_ = 0.0;
};

double sq_distance(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace parconv
