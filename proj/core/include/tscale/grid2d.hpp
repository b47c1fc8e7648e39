#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "tscale/time_scale.hpp"

namespace tscale {

/// Product of two time scales.
struct TimeScale2D {
  ScalePtr first;
  ScalePtr second;

  TimeScale2D(ScalePtr s1, ScalePtr s2);

  const TimeScale& scale1() const { return *first; }
  const TimeScale& scale2() const { return *second; }
  bool all_exact() const { return first->all_exact() && second->all_exact(); }
};

bool same_domain(const TimeScale2D& a, const TimeScale2D& b);

/// Real samples on a rectangular prefix [0, rows) x [0, cols) of a product
/// scale, stored row-major with the first variable as the row index.
class GridFn2 {
 public:
  GridFn2(TimeScale2D domain, std::size_t rows, std::size_t cols, std::vector<double> values);

  static GridFn2 sample(const TimeScale2D& domain,
                        const std::function<double(double, double)>& fn);
  static GridFn2 constant(const TimeScale2D& domain, double c);
  static GridFn2 zeros(const TimeScale2D& domain, std::size_t rows, std::size_t cols);

  const TimeScale2D& domain() const noexcept { return domain_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const double> values() const noexcept { return values_; }

  double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }
  double at(std::size_t i, std::size_t j) const;

  /// Values on the leading rows x cols block.
  GridFn2 restrict(std::size_t rows, std::size_t cols) const;

 private:
  TimeScale2D domain_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

enum class Axis : int { First = 1, Second = 2 };

/// Forward difference along one axis divided by that axis' graininess; the
/// result drops the last index of that axis. An axis outside {1, 2} is a
/// DomainError.
GridFn2 partial_delta(const GridFn2& f, Axis axis);

/// f^{Delta_1 Delta_2} on kappa x kappa.
GridFn2 mixed_partial(const GridFn2& f);

/// Half-open index rectangle [a1, b1) x [a2, b2).
struct IndexRect {
  std::size_t a1 = 0;
  std::size_t b1 = 0;
  std::size_t a2 = 0;
  std::size_t b2 = 0;
};

enum class SumOrder { RowsOuter, ColumnsOuter };

/// sum_{i in [a1,b1)} sum_{j in [a2,b2)} f(i,j) mu_1(i) mu_2(j), compensated,
/// with the requested nesting of the two sums.
double double_integral(const GridFn2& f, const IndexRect& r,
                       SumOrder order = SumOrder::RowsOuter);

/// Table G(i, j) = double_integral(f, [0,i) x [0,j)) for every i <= min(rows, n1-1)
/// and j <= min(cols, n2-1) (one row and column more than f where the scale allows).
GridFn2 cumulative_double_integral(const GridFn2& f);

/// Table C(i, j) = sum_{s < j} f(i, s) mu_2(s) for i < rows, j up to one past cols.
GridFn2 cumulative_inner_integral(const GridFn2& f);

/// Cut indices per axis. Cells are [cuts[k], cuts[k+1]) and must be nonempty,
/// i.e. cuts are strictly increasing.
struct RectPartition {
  std::vector<std::size_t> cuts1;
  std::vector<std::size_t> cuts2;

  /// Every grid step is its own cell.
  static RectPartition finest(const IndexRect& r);
  /// One cell covering the whole rectangle.
  static RectPartition single(const IndexRect& r);
  IndexRect rect() const;
};

struct DarbouxSums {
  double upper = 0.0;
  double lower = 0.0;
};

/// Upper and lower Darboux Delta-sums. Per-cell sup/inf range over the grid
/// points inside the half-open cell; weights are the cell side lengths.
DarbouxSums darboux_sums(const GridFn2& f, const RectPartition& p);

}  // namespace tscale
