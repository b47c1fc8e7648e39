#include "tscale/time_scale.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tscale/error.hpp"

namespace tscale {

namespace {

std::string describe_index(std::size_t i, std::size_t n) {
  std::ostringstream os;
  os << "point index " << i << " out of range for scale of " << n << " points";
  return os.str();
}

}  // namespace

TimeScale::TimeScale(std::vector<double> points, std::vector<Density> tags)
    : points_(std::move(points)), tags_(std::move(tags)) {
  if (points_.size() < 2) {
    throw DomainError("time scale needs at least two points");
  }
  if (tags_.size() != points_.size()) {
    throw DomainError("time scale: one density tag per point required");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i])) {
      throw DomainError("time scale: non-finite abscissa at index " + std::to_string(i));
    }
    if (i > 0 && !(points_[i] > points_[i - 1])) {
      throw DomainError("time scale: points must be strictly increasing (index " +
                        std::to_string(i) + ")");
    }
  }
}

TimeScale::TimeScale(std::vector<double> points)
    : TimeScale(points, std::vector<Density>(points.size(), Density::Exact)) {}

TimeScale TimeScale::integer_segment(long long first, long long last) {
  if (last <= first) {
    throw DomainError("integer segment needs last > first");
  }
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(last - first + 1));
  for (long long k = first; k <= last; ++k) {
    pts.push_back(static_cast<double>(k));
  }
  return TimeScale(std::move(pts));
}

TimeScale TimeScale::h_grid(double start, double end, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw DomainError("h must be positive");
  }
  if (!(end > start)) {
    throw DomainError("h-grid needs end > start");
  }
  const double steps = std::floor((end - start) / h + 1e-9);
  if (steps < 1.0) {
    throw DomainError("h-grid interval shorter than one step");
  }
  std::vector<double> pts;
  const auto n = static_cast<std::size_t>(steps);
  pts.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    pts.push_back(start + static_cast<double>(k) * h);
  }
  return TimeScale(std::move(pts));
}

TimeScale TimeScale::q_grid(double q, int n) {
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw DomainError("q must exceed 1");
  }
  if (n < 1) {
    throw DomainError("q-grid needs N >= 1");
  }
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(n) + 1);
  double v = 1.0;
  for (int k = 0; k <= n; ++k) {
    pts.push_back(v);
    v *= q;
  }
  return TimeScale(std::move(pts));
}

TimeScale TimeScale::dense_mesh(double start, double end, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw DomainError("h must be positive");
  }
  if (!(end > start)) {
    throw DomainError("dense mesh needs end > start");
  }
  const double cells = std::max(1.0, std::round((end - start) / h));
  const auto n = static_cast<std::size_t>(cells);
  std::vector<double> pts(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    pts[k] = start + (end - start) * (static_cast<double>(k) / static_cast<double>(n));
  }
  pts.back() = end;
  return TimeScale(std::move(pts), std::vector<Density>(n + 1, Density::DenseApprox));
}

TimeScale TimeScale::merge(const TimeScale& a, const TimeScale& b) {
  std::vector<std::pair<double, Density>> all;
  all.reserve(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) all.emplace_back(a.points_[i], a.tags_[i]);
  for (std::size_t i = 0; i < b.size(); ++i) all.emplace_back(b.points_[i], b.tags_[i]);
  std::stable_sort(all.begin(), all.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<double> pts;
  std::vector<Density> tags;
  for (const auto& [t, tag] : all) {
    if (!pts.empty() && std::abs(t - pts.back()) <= kPointTolerance) {
      if (tag == Density::Exact) tags.back() = Density::Exact;
      continue;
    }
    pts.push_back(t);
    tags.push_back(tag);
  }
  return TimeScale(std::move(pts), std::move(tags));
}

void TimeScale::check_index(std::size_t i) const {
  if (i >= points_.size()) {
    throw DomainError(describe_index(i, points_.size()));
  }
}

double TimeScale::point(std::size_t i) const {
  check_index(i);
  return points_[i];
}

Density TimeScale::density(std::size_t i) const {
  check_index(i);
  return tags_[i];
}

bool TimeScale::all_exact() const noexcept {
  return std::all_of(tags_.begin(), tags_.end(),
                     [](Density d) { return d == Density::Exact; });
}

std::size_t TimeScale::sigma(std::size_t i) const {
  check_index(i);
  return i + 1 < points_.size() ? i + 1 : i;
}

std::size_t TimeScale::rho(std::size_t i) const {
  check_index(i);
  return i > 0 ? i - 1 : 0;
}

double TimeScale::mu(std::size_t i) const {
  return points_[sigma(i)] - points_[i];
}

std::optional<std::size_t> TimeScale::find(double t) const {
  const double tol = kPointTolerance * std::max(1.0, std::abs(t));
  auto it = std::lower_bound(points_.begin(), points_.end(), t - tol);
  if (it != points_.end() && std::abs(*it - t) <= tol) {
    return static_cast<std::size_t>(it - points_.begin());
  }
  return std::nullopt;
}

std::size_t TimeScale::index_of(double t) const {
  if (auto idx = find(t)) return *idx;
  std::ostringstream os;
  os << "t = " << t << " is not a point of the time scale";
  throw DomainError(os.str());
}

TimeScale TimeScale::tail(std::size_t first) const {
  check_index(first);
  if (points_.size() - first < 2) {
    throw DomainError("tail of a time scale needs at least two points");
  }
  return TimeScale(std::vector<double>(points_.begin() + static_cast<std::ptrdiff_t>(first),
                                       points_.end()),
                   std::vector<Density>(tags_.begin() + static_cast<std::ptrdiff_t>(first),
                                        tags_.end()));
}

bool same_scale(const ScalePtr& a, const ScalePtr& b) {
  return a == b || (a && b && *a == *b);
}

GridFn1::GridFn1(ScalePtr scale, std::vector<double> values)
    : scale_(std::move(scale)), values_(std::move(values)) {
  if (!scale_) {
    throw DomainError("grid function without a time scale");
  }
  if (values_.empty() || values_.size() > scale_->size()) {
    throw DomainError("grid function length " + std::to_string(values_.size()) +
                      " does not fit a scale of " + std::to_string(scale_->size()) +
                      " points");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DomainError("grid function value at index " + std::to_string(i) +
                        " is not finite");
    }
  }
}

GridFn1 GridFn1::sample(ScalePtr scale, const std::function<double(double)>& fn) {
  std::vector<double> v;
  v.reserve(scale->size());
  for (double t : scale->points()) v.push_back(fn(t));
  return GridFn1(std::move(scale), std::move(v));
}

GridFn1 GridFn1::constant(ScalePtr scale, double c) {
  const auto n = scale->size();
  return GridFn1(std::move(scale), std::vector<double>(n, c));
}

double GridFn1::at(std::size_t i) const {
  if (i >= values_.size()) {
    throw DomainError("grid function index " + std::to_string(i) + " out of range");
  }
  return values_[i];
}

}  // namespace tscale
