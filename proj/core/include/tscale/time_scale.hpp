#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace tscale {

/// Whether a point is a genuine isolated point of the modelled scale or a
/// mesh sample standing in for a dense interval.
enum class Density : std::uint8_t { Exact, DenseApprox };

/// A finite, strictly increasing computational time scale.
///
/// Every consecutive gap is positive, so the graininess is zero only at the
/// last point (sigma of the maximum is the maximum itself). Closed real
/// intervals of a modelled scale are represented by uniform meshes tagged
/// Density::DenseApprox; on those points the calculus is a first-order
/// approximation rather than exact.
class TimeScale {
 public:
  /// Absolute tolerance used when deduplicating abscissae and looking up points.
  static constexpr double kPointTolerance = 1e-12;

  TimeScale(std::vector<double> points, std::vector<Density> tags);
  explicit TimeScale(std::vector<double> points);  // all Exact

  /// {first, first+1, ..., last}
  static TimeScale integer_segment(long long first, long long last);
  /// {start, start+h, ...} up to end (inclusive within rounding).
  static TimeScale h_grid(double start, double end, double h);
  /// {q^0, q^1, ..., q^n}; requires q > 1 and n >= 1.
  static TimeScale q_grid(double q, int n);
  /// Uniform mesh on [start, end] tagged DenseApprox. The step is adjusted so
  /// that end is hit exactly: n = round((end - start) / h) cells.
  static TimeScale dense_mesh(double start, double end, double h);
  /// Union of two scales; abscissae closer than kPointTolerance are merged
  /// and the merged point keeps the Exact tag if either source was Exact.
  static TimeScale merge(const TimeScale& a, const TimeScale& b);

  std::size_t size() const noexcept { return points_.size(); }
  std::size_t last_index() const noexcept { return points_.size() - 1; }
  std::span<const double> points() const noexcept { return points_; }
  std::span<const Density> tags() const noexcept { return tags_; }
  double operator[](std::size_t i) const { return points_[i]; }
  double point(std::size_t i) const;
  Density density(std::size_t i) const;
  bool all_exact() const noexcept;

  /// Forward jump: next index, or i itself at the maximum.
  std::size_t sigma(std::size_t i) const;
  /// Backward jump: previous index, or 0 at the minimum.
  std::size_t rho(std::size_t i) const;
  /// Graininess points[sigma(i)] - points[i].
  double mu(std::size_t i) const;

  /// Index of the point equal to t within kPointTolerance * max(1, |t|).
  std::optional<std::size_t> find(double t) const;
  /// Like find() but throws DomainError when t is not a point of the scale.
  std::size_t index_of(double t) const;

  /// Sub-scale of points [first, size()); needs at least two points left.
  TimeScale tail(std::size_t first) const;

  friend bool operator==(const TimeScale&, const TimeScale&) = default;

 private:
  void check_index(std::size_t i) const;

  std::vector<double> points_;
  std::vector<Density> tags_;
};

using ScalePtr = std::shared_ptr<const TimeScale>;

inline ScalePtr share(TimeScale ts) {
  return std::make_shared<const TimeScale>(std::move(ts));
}

/// True when both pointers denote the same abscissae (identity or equality).
bool same_scale(const ScalePtr& a, const ScalePtr& b);

/// Real samples on a prefix of a time scale.
///
/// The values cover points 0..size()-1 where size() <= scale().size(). A
/// function on the full scale has size() == scale().size(); the delta
/// derivative of such a function lives on the kappa-restriction and has one
/// value fewer. Keeping the parent scale around keeps sigma and mu available
/// at every covered point.
class GridFn1 {
 public:
  GridFn1(ScalePtr scale, std::vector<double> values);

  /// Samples fn at every point of the scale.
  static GridFn1 sample(ScalePtr scale, const std::function<double(double)>& fn);
  static GridFn1 constant(ScalePtr scale, double c);

  const TimeScale& scale() const noexcept { return *scale_; }
  const ScalePtr& scale_ptr() const noexcept { return scale_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool is_full() const noexcept { return values_.size() == scale_->size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double at(std::size_t i) const;
  double t(std::size_t i) const { return (*scale_)[i]; }

 private:
  ScalePtr scale_;
  std::vector<double> values_;
};

}  // namespace tscale
