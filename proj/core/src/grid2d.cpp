#include "tscale/grid2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tscale/error.hpp"
#include "tscale/summation.hpp"

namespace tscale {

TimeScale2D::TimeScale2D(ScalePtr s1, ScalePtr s2) : first(std::move(s1)), second(std::move(s2)) {
  if (!first || !second) {
    throw DomainError("product scale needs two time scales");
  }
}

bool same_domain(const TimeScale2D& a, const TimeScale2D& b) {
  return same_scale(a.first, b.first) && same_scale(a.second, b.second);
}

GridFn2::GridFn2(TimeScale2D domain, std::size_t rows, std::size_t cols,
                 std::vector<double> values)
    : domain_(std::move(domain)), rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ == 0 || cols_ == 0 || rows_ > domain_.scale1().size() ||
      cols_ > domain_.scale2().size()) {
    throw DomainError("grid function extent " + std::to_string(rows_) + "x" +
                      std::to_string(cols_) + " does not fit its product scale");
  }
  if (values_.size() != rows_ * cols_) {
    throw DomainError("grid function value count does not match its extent");
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) {
      throw DomainError("grid function value at (" + std::to_string(k / cols_) + ", " +
                        std::to_string(k % cols_) + ") is not finite");
    }
  }
}

GridFn2 GridFn2::sample(const TimeScale2D& domain,
                        const std::function<double(double, double)>& fn) {
  const auto& s1 = domain.scale1();
  const auto& s2 = domain.scale2();
  std::vector<double> v;
  v.reserve(s1.size() * s2.size());
  for (double t1 : s1.points()) {
    for (double t2 : s2.points()) v.push_back(fn(t1, t2));
  }
  return GridFn2(domain, s1.size(), s2.size(), std::move(v));
}

GridFn2 GridFn2::constant(const TimeScale2D& domain, double c) {
  const auto n1 = domain.scale1().size();
  const auto n2 = domain.scale2().size();
  return GridFn2(domain, n1, n2, std::vector<double>(n1 * n2, c));
}

GridFn2 GridFn2::zeros(const TimeScale2D& domain, std::size_t rows, std::size_t cols) {
  return GridFn2(domain, rows, cols, std::vector<double>(rows * cols, 0.0));
}

double GridFn2::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw DomainError("grid index (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") out of range");
  }
  return (*this)(i, j);
}

GridFn2 GridFn2::restrict(std::size_t rows, std::size_t cols) const {
  if (rows > rows_ || cols > cols_) {
    throw DomainError("cannot restrict a grid function to a larger block");
  }
  std::vector<double> v;
  v.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) v.push_back((*this)(i, j));
  }
  return GridFn2(domain_, rows, cols, std::move(v));
}

GridFn2 partial_delta(const GridFn2& f, Axis axis) {
  const auto& s1 = f.domain().scale1();
  const auto& s2 = f.domain().scale2();
  switch (axis) {
    case Axis::First: {
      if (f.rows() < 2) throw DomainError("partial delta along axis 1 needs two rows");
      const std::size_t rows = f.rows() - 1;
      std::vector<double> v(rows * f.cols());
      for (std::size_t i = 0; i < rows; ++i) {
        const double m = s1.mu(i);
        for (std::size_t j = 0; j < f.cols(); ++j) {
          v[i * f.cols() + j] = (f(i + 1, j) - f(i, j)) / m;
        }
      }
      return GridFn2(f.domain(), rows, f.cols(), std::move(v));
    }
    case Axis::Second: {
      if (f.cols() < 2) throw DomainError("partial delta along axis 2 needs two columns");
      const std::size_t cols = f.cols() - 1;
      std::vector<double> v(f.rows() * cols);
      for (std::size_t i = 0; i < f.rows(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          v[i * cols + j] = (f(i, j + 1) - f(i, j)) / s2.mu(j);
        }
      }
      return GridFn2(f.domain(), f.rows(), cols, std::move(v));
    }
  }
  throw DomainError("axis must be 1 or 2, got " + std::to_string(static_cast<int>(axis)));
}

GridFn2 mixed_partial(const GridFn2& f) {
  return partial_delta(partial_delta(f, Axis::First), Axis::Second);
}

namespace {

void check_rect(const GridFn2& f, const IndexRect& r) {
  if (r.a1 > r.b1 || r.a2 > r.b2) {
    throw DomainError("inverted integration rectangle");
  }
  if (r.b1 >= f.domain().scale1().size() || r.b2 >= f.domain().scale2().size()) {
    throw DomainError("integration rectangle exceeds the product scale");
  }
  if ((r.b1 > r.a1 && r.b1 > f.rows()) || (r.b2 > r.a2 && r.b2 > f.cols())) {
    throw DomainError("integrand undefined on part of the integration rectangle");
  }
}

}  // namespace

double double_integral(const GridFn2& f, const IndexRect& r, SumOrder order) {
  check_rect(f, r);
  const auto& s1 = f.domain().scale1();
  const auto& s2 = f.domain().scale2();
  CompensatedSum outer;
  if (order == SumOrder::RowsOuter) {
    for (std::size_t i = r.a1; i < r.b1; ++i) {
      CompensatedSum inner;
      for (std::size_t j = r.a2; j < r.b2; ++j) inner += f(i, j) * s2.mu(j);
      outer += inner.value() * s1.mu(i);
    }
  } else {
    for (std::size_t j = r.a2; j < r.b2; ++j) {
      CompensatedSum inner;
      for (std::size_t i = r.a1; i < r.b1; ++i) inner += f(i, j) * s1.mu(i);
      outer += inner.value() * s2.mu(j);
    }
  }
  return outer.value();
}

GridFn2 cumulative_inner_integral(const GridFn2& f) {
  const auto& s2 = f.domain().scale2();
  const std::size_t cols = std::min(f.cols() + 1, s2.size());
  std::vector<double> v(f.rows() * cols);
  for (std::size_t i = 0; i < f.rows(); ++i) {
    CompensatedSum acc;
    v[i * cols] = 0.0;
    for (std::size_t j = 1; j < cols; ++j) {
      acc += f(i, j - 1) * s2.mu(j - 1);
      v[i * cols + j] = acc.value();
    }
  }
  return GridFn2(f.domain(), f.rows(), cols, std::move(v));
}

GridFn2 cumulative_double_integral(const GridFn2& f) {
  const auto& s1 = f.domain().scale1();
  const GridFn2 inner = cumulative_inner_integral(f);
  const std::size_t rows = std::min(f.rows() + 1, s1.size());
  const std::size_t cols = inner.cols();
  std::vector<double> v(rows * cols, 0.0);
  std::vector<CompensatedSum> column(cols);
  for (std::size_t i = 1; i < rows; ++i) {
    const double m = s1.mu(i - 1);
    for (std::size_t j = 0; j < cols; ++j) {
      column[j] += inner(i - 1, j) * m;
      v[i * cols + j] = column[j].value();
    }
  }
  return GridFn2(f.domain(), rows, cols, std::move(v));
}

RectPartition RectPartition::finest(const IndexRect& r) {
  RectPartition p;
  for (std::size_t i = r.a1; i <= r.b1; ++i) p.cuts1.push_back(i);
  for (std::size_t j = r.a2; j <= r.b2; ++j) p.cuts2.push_back(j);
  return p;
}

RectPartition RectPartition::single(const IndexRect& r) {
  return RectPartition{{r.a1, r.b1}, {r.a2, r.b2}};
}

IndexRect RectPartition::rect() const {
  if (cuts1.empty() || cuts2.empty()) return {};
  return IndexRect{cuts1.front(), cuts1.back(), cuts2.front(), cuts2.back()};
}

namespace {

void check_cuts(const std::vector<std::size_t>& cuts, std::size_t scale_size,
                std::size_t extent, int axis) {
  const std::string name = "partition axis " + std::to_string(axis);
  if (cuts.size() < 2) {
    throw DomainError(name + ": needs at least one cell");
  }
  for (std::size_t k = 1; k < cuts.size(); ++k) {
    if (cuts[k] <= cuts[k - 1]) {
      throw DomainError(name + ": empty cell between cuts " + std::to_string(cuts[k - 1]) +
                        " and " + std::to_string(cuts[k]));
    }
  }
  if (cuts.back() >= scale_size) {
    throw DomainError(name + ": cut index beyond the scale");
  }
  if (cuts.back() > extent) {
    throw DomainError(name + ": function undefined inside the partition");
  }
}

}  // namespace

DarbouxSums darboux_sums(const GridFn2& f, const RectPartition& p) {
  const auto& s1 = f.domain().scale1();
  const auto& s2 = f.domain().scale2();
  check_cuts(p.cuts1, s1.size(), f.rows(), 1);
  check_cuts(p.cuts2, s2.size(), f.cols(), 2);

  CompensatedSum upper;
  CompensatedSum lower;
  for (std::size_t a = 0; a + 1 < p.cuts1.size(); ++a) {
    const std::size_t i0 = p.cuts1[a];
    const std::size_t i1 = p.cuts1[a + 1];
    const double w1 = s1[i1] - s1[i0];
    for (std::size_t b = 0; b + 1 < p.cuts2.size(); ++b) {
      const std::size_t j0 = p.cuts2[b];
      const std::size_t j1 = p.cuts2[b + 1];
      const double w2 = s2[j1] - s2[j0];
      double sup = -std::numeric_limits<double>::infinity();
      double inf = std::numeric_limits<double>::infinity();
      for (std::size_t i = i0; i < i1; ++i) {
        for (std::size_t j = j0; j < j1; ++j) {
          sup = std::max(sup, f(i, j));
          inf = std::min(inf, f(i, j));
        }
      }
      upper += sup * w1 * w2;
      lower += inf * w1 * w2;
    }
  }
  return DarbouxSums{upper.value(), lower.value()};
}

}  // namespace tscale
