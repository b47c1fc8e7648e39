#include "tscale/witness.hpp"

#include <algorithm>
#include <vector>

#include "tscale/error.hpp"
#include "tscale/regressive.hpp"
#include "tscale/summation.hpp"

namespace tscale {

namespace {

struct Extent {
  std::size_t rows;
  std::size_t cols;
};

Extent common_extent(std::initializer_list<const GridFn2*> fs) {
  const GridFn2& first = **fs.begin();
  Extent e{first.rows(), first.cols()};
  for (const GridFn2* f : fs) {
    if (!same_domain(f->domain(), first.domain())) {
      throw InputError("witness inputs live on different product scales");
    }
    e.rows = std::min(e.rows, f->rows());
    e.cols = std::min(e.cols, f->cols());
  }
  return e;
}

double factor(const Feedback& fb, std::size_t i, std::size_t j) {
  return fb ? (*fb)(i, j) : 1.0;
}

void check_feedback(const Feedback& fb, Extent e) {
  if (fb && (fb->rows() < e.rows || fb->cols() < e.cols)) {
    throw InputError("feedback factors do not cover the witness grid");
  }
}

// Running table G(i, j) = sum_{a<i} sum_{b<j} g(a, b) mu1(a) mu2(b), advanced
// one row at a time with compensated column accumulators.
class LowerLeftSums {
 public:
  LowerLeftSums(const TimeScale2D& d, std::size_t cols) : d_(d), columns_(cols) {}

  double operator()(std::size_t j) const { return columns_[j].value(); }

  // Folds row i of g into the table; g_row(j) gives g(i, j).
  template <typename RowFn>
  void add_row(std::size_t i, RowFn g_row) {
    const double m1 = d_.scale1().mu(i);
    CompensatedSum inner;
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      columns_[j] += inner.value() * m1;
      inner += g_row(j) * d_.scale2().mu(j);
    }
  }

 private:
  const TimeScale2D& d_;
  std::vector<CompensatedSum> columns_;
};

}  // namespace

GridFn2 witness_corollary(const GridFn2& p, const GridFn2& q, const GridFn2& k,
                          const Feedback& feedback) {
  const Extent e = common_extent({&p, &q, &k});
  check_feedback(feedback, e);
  const TimeScale2D& d = p.domain();
  std::vector<double> u(e.rows * e.cols);
  LowerLeftSums G(d, e.cols);
  for (std::size_t i = 0; i < e.rows; ++i) {
    for (std::size_t j = 0; j < e.cols; ++j) {
      u[i * e.cols + j] = p(i, j) + factor(feedback, i, j) * q(i, j) * G(j);
    }
    G.add_row(i, [&](std::size_t j) { return k(i, j) * u[i * e.cols + j]; });
  }
  return GridFn2(d, e.rows, e.cols, std::move(u));
}

GridFn2 witness_kernel(const GridFn2& p, const GridFn2& q, const KernelOracle& k,
                       const Feedback& feedback) {
  const Extent e = common_extent({&p, &q});
  if (!same_domain(k.domain(), p.domain())) {
    throw InputError("kernel lives on a different product scale");
  }
  check_feedback(feedback, e);
  const auto& s1 = p.domain().scale1();
  const auto& s2 = p.domain().scale2();
  std::vector<double> u(e.rows * e.cols);
  for (std::size_t i = 0; i < e.rows; ++i) {
    for (std::size_t j = 0; j < e.cols; ++j) {
      CompensatedSum outer;
      for (std::size_t a = 0; a < i; ++a) {
        CompensatedSum inner;
        for (std::size_t b = 0; b < j; ++b) {
          inner += k(i, j, a, b) * u[a * e.cols + b] * s2.mu(b);
        }
        outer += inner.value() * s1.mu(a);
      }
      u[i * e.cols + j] = p(i, j) + factor(feedback, i, j) * q(i, j) * outer.value();
    }
  }
  return GridFn2(p.domain(), e.rows, e.cols, std::move(u));
}

SystemWitness witness_system(double c1, double c2, const std::array<GridFn2, 4>& h,
                             const Feedback& feedback_u, const Feedback& feedback_v) {
  if (c1 < 0.0 || c2 < 0.0) {
    throw InputError("system witness: c1 and c2 must be nonnegative");
  }
  const Extent e = common_extent({&h[0], &h[1], &h[2], &h[3]});
  check_feedback(feedback_u, e);
  check_feedback(feedback_v, e);
  const TimeScale2D& d = h[0].domain();
  std::vector<double> u(e.rows * e.cols);
  std::vector<double> v(e.rows * e.cols);
  LowerLeftSums Gu(d, e.cols);
  LowerLeftSums Gv(d, e.cols);
  for (std::size_t i = 0; i < e.rows; ++i) {
    for (std::size_t j = 0; j < e.cols; ++j) {
      u[i * e.cols + j] = c1 + factor(feedback_u, i, j) * Gu(j);
      v[i * e.cols + j] = c2 + factor(feedback_v, i, j) * Gv(j);
    }
    Gu.add_row(i, [&](std::size_t j) {
      return h[0](i, j) * u[i * e.cols + j] + h[1](i, j) * v[i * e.cols + j];
    });
    Gv.add_row(i, [&](std::size_t j) {
      return h[2](i, j) * u[i * e.cols + j] + h[3](i, j) * v[i * e.cols + j];
    });
  }
  return SystemWitness{GridFn2(d, e.rows, e.cols, std::move(u)),
                       GridFn2(d, e.rows, e.cols, std::move(v))};
}

IntegroWitness witness_integrodynamic(const GridFn1& a, const GridFn1& b, const GridFn2& c,
                                      const Feedback& feedback) {
  const TimeScale2D& d = c.domain();
  if (!same_scale(a.scale_ptr(), d.first) || !same_scale(b.scale_ptr(), d.second)) {
    throw InputError("a and b must live on the two component scales of c");
  }
  const Extent e{std::min(c.rows(), a.size()), std::min(c.cols(), b.size())};
  check_feedback(feedback, e);
  std::vector<double> u(e.rows * e.cols);
  std::vector<double> w(e.rows * e.cols);
  LowerLeftSums Gw(d, e.cols);   // int int w
  LowerLeftSums Gcw(d, e.cols);  // int int c (u + w)
  for (std::size_t i = 0; i < e.rows; ++i) {
    for (std::size_t j = 0; j < e.cols; ++j) {
      u[i * e.cols + j] = Gw(j);
      w[i * e.cols + j] = a[i] + b[j] + factor(feedback, i, j) * Gcw(j);
    }
    Gw.add_row(i, [&](std::size_t j) { return w[i * e.cols + j]; });
    Gcw.add_row(i, [&](std::size_t j) {
      return c(i, j) * (u[i * e.cols + j] + w[i * e.cols + j]);
    });
  }
  return IntegroWitness{GridFn2(d, e.rows, e.cols, std::move(u)),
                        GridFn2(d, e.rows, e.cols, std::move(w))};
}

GridFn1 witness_comparison(const GridFn1& f, const GridFn1& g, double x_a, std::size_t a,
                           double slack) {
  if (slack < 0.0) throw DomainError("comparison witness: slack must be nonnegative");
  if (!same_scale(f.scale_ptr(), g.scale_ptr())) {
    throw DomainError("grid functions live on different time scales");
  }
  const TimeScale& ts = f.scale();
  if (f.size() + 1 < ts.size() || g.size() + 1 < ts.size()) {
    throw DomainError("comparison witness: f and g must cover every point but the last");
  }
  for (std::size_t i = a; i + 1 < ts.size(); ++i) {
    const double factor = 1.0 + ts.mu(i) * g[i];
    if (!(factor > 0.0)) {
      throw RegressivityError("g is not positively regressive at index " + std::to_string(i), i);
    }
  }
  auto tail = share(ts.tail(a));
  std::vector<double> x(ts.size() - a);
  x[0] = x_a;
  for (std::size_t t = a; t + 1 < ts.size(); ++t) {
    const double cur = x[t - a];
    x[t - a + 1] = cur + ts.mu(t) * (f[t] + g[t] * cur - slack);
  }
  return GridFn1(std::move(tail), std::move(x));
}

}  // namespace tscale
