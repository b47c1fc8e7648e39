#include "tscale/pachpatte.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tscale/error.hpp"
#include "tscale/regressive.hpp"
#include "tscale/summation.hpp"

namespace tscale {

namespace {

constexpr double kSignSlack = -1e-12;

std::string at_point(const TimeScale2D& d, std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << " at (t1, t2) = (" << d.scale1()[i] << ", " << d.scale2()[j] << ")";
  return os.str();
}

struct Extent {
  std::size_t rows;
  std::size_t cols;
};

Extent kappa_extent(const TimeScale2D& d) {
  return {d.scale1().size() - 1, d.scale2().size() - 1};
}

void require_cover(const GridFn2& f, const TimeScale2D& d, Extent e, const char* name) {
  if (!same_domain(f.domain(), d)) {
    throw InputError(std::string(name) + " lives on a different product scale");
  }
  if (f.rows() < e.rows || f.cols() < e.cols) {
    throw InputError(std::string(name) + " does not cover the kappa x kappa evaluation domain");
  }
}

void check_nonnegative(const GridFn2& f, const char* name, std::vector<std::string>& diag) {
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (f(i, j) < kSignSlack) {
        diag.push_back(std::string(name) + " negative" + at_point(f.domain(), i, j));
        return;
      }
    }
  }
}

void check_nonnegative(const GridFn1& f, const char* name, std::vector<std::string>& diag) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < kSignSlack) {
      std::ostringstream os;
      os << name << " negative at t = " << f.t(i);
      diag.push_back(os.str());
      return;
    }
  }
}

// Dense 4-index table when it fits under the cache cap, otherwise passthrough.
class KernelTable {
 public:
  explicit KernelTable(const KernelOracle& k)
      : k_(k), n1_(k.domain().scale1().size()), n2_(k.domain().scale2().size()) {
    const double entries = static_cast<double>(n1_) * n1_ * n2_ * n2_;
    if (entries <= static_cast<double>(kMaxKernelCacheEntries)) {
      table_.resize(n1_ * n2_ * n1_ * n2_);
      for (std::size_t i1 = 0; i1 < n1_; ++i1)
        for (std::size_t i2 = 0; i2 < n2_; ++i2)
          for (std::size_t j1 = 0; j1 < n1_; ++j1)
            for (std::size_t j2 = 0; j2 < n2_; ++j2)
              table_[index(i1, i2, j1, j2)] = k(i1, i2, j1, j2);
    }
  }

  double operator()(std::size_t i1, std::size_t i2, std::size_t j1, std::size_t j2) const {
    return table_.empty() ? k_(i1, i2, j1, j2) : table_[index(i1, i2, j1, j2)];
  }

 private:
  std::size_t index(std::size_t i1, std::size_t i2, std::size_t j1, std::size_t j2) const {
    return ((i1 * n2_ + i2) * n1_ + j1) * n2_ + j2;
  }

  const KernelOracle& k_;
  std::size_t n1_;
  std::size_t n2_;
  std::vector<double> table_;
};

BoundReport make_report(Theorem th, ExponentVariant v, GridFn2 bound,
                        std::vector<std::string> diagnostics) {
  return BoundReport{th, v, std::move(bound), std::nullopt, 0.0, 0.0, 0.0, {},
                     std::move(diagnostics)};
}

}  // namespace

std::string_view to_string(ExponentVariant v) {
  return v == ExponentVariant::FirstVariable ? "first" : "second";
}

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::Kernel: return "kernel";
    case Theorem::Corollary: return "corollary";
    case Theorem::System: return "system";
    case Theorem::IntegroDynamic: return "integrodynamic";
  }
  return "unknown";
}

KernelOracle::KernelOracle(TimeScale2D domain, IndexFn fn)
    : domain_(std::move(domain)), fn_(std::move(fn)) {
  if (!fn_) throw InputError("kernel oracle without an evaluation function");
}

KernelOracle KernelOracle::from_values(const TimeScale2D& domain, ValueFn fn) {
  const ScalePtr s1 = domain.first;
  const ScalePtr s2 = domain.second;
  return KernelOracle(domain, [s1, s2, fn = std::move(fn)](std::size_t i1, std::size_t i2,
                                                           std::size_t j1, std::size_t j2) {
    return fn((*s1)[i1], (*s2)[i2], (*s1)[j1], (*s2)[j2]);
  });
}

KernelOracle KernelOracle::from_grid(const GridFn2& g) {
  return KernelOracle(g.domain(), [g](std::size_t, std::size_t, std::size_t j1, std::size_t j2) {
    return g(j1, j2);
  });
}

Theorem theorem_of(const BoundInputs& in) {
  struct {
    Theorem operator()(const KernelInputs&) const { return Theorem::Kernel; }
    Theorem operator()(const CorollaryInputs&) const { return Theorem::Corollary; }
    Theorem operator()(const SystemInputs&) const { return Theorem::System; }
    Theorem operator()(const IntegroInputs&) const { return Theorem::IntegroDynamic; }
  } visitor;
  return std::visit(visitor, in);
}

// ---------------------------------------------------------------------------
// Hypotheses

namespace {

void kernel_hypotheses(const KernelInputs& in, std::vector<std::string>& diag) {
  check_nonnegative(in.p, "p", diag);
  check_nonnegative(in.q, "q", diag);
  const TimeScale2D& d = in.k.domain();
  const auto& s1 = d.scale1();
  const auto& s2 = d.scale2();
  const std::size_t n1 = s1.size();
  const std::size_t n2 = s2.size();
  const KernelTable K(in.k);

  bool neg = false, neg_d1 = false, neg_d2 = false, neg_d12 = false;
  auto flag = [&](bool& seen, const char* what, std::size_t t1, std::size_t t2,
                  std::size_t j1, std::size_t j2) {
    if (seen) return;
    seen = true;
    std::ostringstream os;
    os << what << " at (t1, t2, s1, s2) = (" << s1[t1] << ", " << s2[t2] << ", " << s1[j1]
       << ", " << s2[j2] << ")";
    diag.push_back(os.str());
  };

  for (std::size_t t1 = 0; t1 < n1; ++t1) {
    for (std::size_t t2 = 0; t2 < n2; ++t2) {
      for (std::size_t j1 = 0; j1 < n1; ++j1) {
        for (std::size_t j2 = 0; j2 < n2; ++j2) {
          const double k00 = K(t1, t2, j1, j2);
          if (k00 < kSignSlack) flag(neg, "kernel negative", t1, t2, j1, j2);
          if (t1 + 1 < n1) {
            const double d1 = (K(t1 + 1, t2, j1, j2) - k00) / s1.mu(t1);
            if (d1 < kSignSlack) flag(neg_d1, "kernel Delta_1 difference negative", t1, t2, j1, j2);
          }
          if (t2 + 1 < n2) {
            const double d2 = (K(t1, t2 + 1, j1, j2) - k00) / s2.mu(t2);
            if (d2 < kSignSlack) flag(neg_d2, "kernel Delta_2 difference negative", t1, t2, j1, j2);
          }
          if (t1 + 1 < n1 && t2 + 1 < n2) {
            const double m1 = s1.mu(t1);
            const double lo = (K(t1 + 1, t2, j1, j2) - k00) / m1;
            const double hi = (K(t1 + 1, t2 + 1, j1, j2) - K(t1, t2 + 1, j1, j2)) / m1;
            if ((hi - lo) / s2.mu(t2) < kSignSlack) {
              flag(neg_d12, "kernel mixed Delta_1 Delta_2 difference negative", t1, t2, j1, j2);
            }
          }
        }
      }
    }
  }
}

void integro_hypotheses(const IntegroInputs& in, std::vector<std::string>& diag) {
  check_nonnegative(in.a, "a", diag);
  check_nonnegative(in.b, "b", diag);
  check_nonnegative(in.c, "c", diag);
  const auto& s1 = in.a.scale();
  const auto& s2 = in.b.scale();
  for (std::size_t i = 0; i + 1 < in.a.size(); ++i) {
    if ((in.a[i + 1] - in.a[i]) / s1.mu(i) < kSignSlack) {
      std::ostringstream os;
      os << "a^Delta_1 negative at t1 = " << s1[i];
      diag.push_back(os.str());
      break;
    }
  }
  for (std::size_t j = 0; j + 1 < in.b.size(); ++j) {
    if ((in.b[j + 1] - in.b[j]) / s2.mu(j) < kSignSlack) {
      std::ostringstream os;
      os << "b^Delta_2 negative at t2 = " << s2[j];
      diag.push_back(os.str());
      break;
    }
  }
  if (in.u) {
    const GridFn2& u = *in.u;
    bool boundary = true;
    for (std::size_t i = 0; i < u.rows() && boundary; ++i) boundary = std::abs(u(i, 0)) <= 1e-12;
    for (std::size_t j = 0; j < u.cols() && boundary; ++j) boundary = std::abs(u(0, j)) <= 1e-12;
    if (!boundary) diag.emplace_back("witness violates u(0, t2) = u(t1, 0) = 0");
    if (u.rows() >= 2 && u.cols() >= 2) {
      check_nonnegative(mixed_partial(u), "witness u^Delta_1 Delta_2", diag);
    }
    check_nonnegative(u, "witness u", diag);
  }
}

// exp_fn_scaled along one lattice line, with errors naming the 2-D point.
std::vector<ScaledReal> exp_along(const GridFn1& line, const char* name, Axis axis,
                                  double fixed) {
  try {
    return exp_fn_scaled(line, 0);
  } catch (const RegressivityError& e) {
    const std::size_t k = e.index();
    std::ostringstream os;
    os << name << " is not regressive at (t1, t2) = (";
    if (axis == Axis::First) os << line.t(k) << ", " << fixed;
    else os << fixed << ", " << line.t(k);
    os << "): 1 + mu*" << name << " = " << 1.0 + line.scale().mu(k) * line[k];
    throw RegressivityError(os.str(), k);
  }
}

}  // namespace

std::vector<std::string> check_hypotheses(const BoundInputs& in) {
  std::vector<std::string> diag;
  std::visit(
      [&diag](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, KernelInputs>) {
          kernel_hypotheses(x, diag);
        } else if constexpr (std::is_same_v<T, CorollaryInputs>) {
          check_nonnegative(x.p, "p", diag);
          check_nonnegative(x.q, "q", diag);
          check_nonnegative(x.k, "k", diag);
        } else if constexpr (std::is_same_v<T, SystemInputs>) {
          if (x.c1 < 0.0) diag.emplace_back("c1 negative");
          if (x.c2 < 0.0) diag.emplace_back("c2 negative");
          static constexpr const char* names[] = {"h1", "h2", "h3", "h4"};
          for (std::size_t m = 0; m < 4; ++m) check_nonnegative(x.h[m], names[m], diag);
        } else {
          integro_hypotheses(x, diag);
        }
        if constexpr (!std::is_same_v<T, IntegroInputs>) {
          if (x.u) check_nonnegative(*x.u, "witness u", diag);
        }
      },
      in);
  return diag;
}

// ---------------------------------------------------------------------------
// Gronwall step

GronwallBound gronwall_2d(const GridFn2& A, const GridFn2& b, ExponentVariant variant) {
  if (!same_domain(A.domain(), b.domain())) {
    throw InputError("gronwall_2d: A and b live on different product scales");
  }
  if (b.rows() < A.rows() || b.cols() < A.cols()) {
    throw InputError("gronwall_2d: b must cover the extent of A");
  }
  std::vector<std::string> diag;
  check_nonnegative(A, "A", diag);
  check_nonnegative(b, "b", diag);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (i > 0 && A(i, j) < A(i - 1, j)) {
        diag.push_back("A not nondecreasing in t1" + at_point(A.domain(), i, j));
        i = A.rows() - 1;
        break;
      }
      if (j > 0 && A(i, j) < A(i, j - 1)) {
        diag.push_back("A not nondecreasing in t2" + at_point(A.domain(), i, j));
        i = A.rows() - 1;
        break;
      }
    }
  }

  const std::size_t rows = A.rows();
  const std::size_t cols = A.cols();
  const GridFn2 c = cumulative_inner_integral(b.restrict(rows, cols)).restrict(rows, cols);
  const TimeScale2D& d = A.domain();

  std::vector<double> z(rows * cols);
  if (variant == ExponentVariant::FirstVariable) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<double> column(rows);
      for (std::size_t i = 0; i < rows; ++i) column[i] = c(i, j);
      const auto e = exp_along(GridFn1(d.first, std::move(column)), "c", Axis::First, d.scale2()[j]);
      for (std::size_t i = 0; i < rows; ++i) {
        ScaledReal v = e[i];
        v *= A(i, j);
        z[i * cols + j] = v.to_double();
      }
    }
  } else {
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<double> row(cols);
      for (std::size_t j = 0; j < cols; ++j) row[j] = c(i, j);
      const auto e = exp_along(GridFn1(d.second, std::move(row)), "c", Axis::Second, d.scale1()[i]);
      for (std::size_t j = 0; j < cols; ++j) {
        ScaledReal v = e[j];
        v *= A(i, j);
        z[i * cols + j] = v.to_double();
      }
    }
  }
  return GronwallBound{GridFn2(d, rows, cols, std::move(z)), c, std::move(diag)};
}

// ---------------------------------------------------------------------------
// Bounds

void compare_witness(BoundReport& report, const GridFn2& witness) {
  const GridFn2& bound = report.bound;
  if (!same_domain(witness.domain(), bound.domain()) || witness.rows() < bound.rows() ||
      witness.cols() < bound.cols()) {
    throw InputError("witness does not cover the evaluation domain of the bound");
  }
  GridFn2 w = witness.restrict(bound.rows(), bound.cols());
  report.max_violation = 0.0;
  report.relative_violation = 0.0;
  report.min_slack = std::numeric_limits<double>::infinity();
  report.violations.clear();
  for (std::size_t i = 0; i < bound.rows(); ++i) {
    for (std::size_t j = 0; j < bound.cols(); ++j) {
      const double diff = w(i, j) - bound(i, j);
      const double scale = 1.0 + std::abs(bound(i, j));
      report.min_slack = std::min(report.min_slack, -diff);
      report.max_violation = std::max(report.max_violation, diff);
      report.relative_violation = std::max(report.relative_violation, diff / scale);
      if (diff > kViolationTolerance * scale) {
        report.violations.push_back(Violation{i, j, w(i, j), bound(i, j)});
      }
    }
  }
  report.witness = std::move(w);
}

BoundReport bound_corollary(const CorollaryInputs& in, ExponentVariant variant) {
  const TimeScale2D& d = in.p.domain();
  const Extent e = kappa_extent(d);
  require_cover(in.p, d, e, "p");
  require_cover(in.q, d, e, "q");
  require_cover(in.k, d, e, "k");
  auto diag = check_hypotheses(BoundInputs{in});

  std::vector<double> a(e.rows * e.cols);
  std::vector<double> b(e.rows * e.cols);
  for (std::size_t i = 0; i < e.rows; ++i) {
    for (std::size_t j = 0; j < e.cols; ++j) {
      a[i * e.cols + j] = in.k(i, j) * in.p(i, j);
      b[i * e.cols + j] = in.k(i, j) * in.q(i, j);
    }
  }
  const GridFn2 A =
      cumulative_double_integral(GridFn2(d, e.rows, e.cols, std::move(a))).restrict(e.rows, e.cols);
  auto g = gronwall_2d(A, GridFn2(d, e.rows, e.cols, std::move(b)), variant);
  diag.insert(diag.end(), g.diagnostics.begin(), g.diagnostics.end());

  std::vector<double> bound(e.rows * e.cols);
  for (std::size_t i = 0; i < e.rows; ++i) {
    for (std::size_t j = 0; j < e.cols; ++j) {
      bound[i * e.cols + j] = in.p(i, j) + in.q(i, j) * g.z(i, j);
    }
  }
  BoundReport r = make_report(Theorem::Corollary, variant,
                              GridFn2(d, e.rows, e.cols, std::move(bound)), std::move(diag));
  if (in.u) compare_witness(r, *in.u);
  return r;
}

BoundReport bound_theorem_kernel(const KernelInputs& in, ExponentVariant variant) {
  const TimeScale2D& d = in.p.domain();
  if (!same_domain(in.k.domain(), d)) {
    throw InputError("kernel lives on a different product scale");
  }
  const Extent e = kappa_extent(d);
  require_cover(in.p, d, e, "p");
  require_cover(in.q, d, e, "q");
  auto diag = check_hypotheses(BoundInputs{in});

  const auto& s1 = d.scale1();
  const auto& s2 = d.scale2();
  const KernelTable K(in.k);

  // a and b share every kernel term; only the coefficient (p or q) differs.
  std::vector<double> a(e.rows * e.cols);
  std::vector<double> b(e.rows * e.cols);
  for (std::size_t i = 0; i < e.rows; ++i) {
    const double m1 = s1.mu(i);
    for (std::size_t j = 0; j < e.cols; ++j) {
      const double m2 = s2.mu(j);
      const double k_sigma = K(i + 1, j + 1, i, j);

      // int_0^{t2} k^{Delta_2}(sigma_1(t1), t2, t1, s2) (.)(t1, s2) Delta s2
      CompensatedSum ap2, bq2;
      for (std::size_t s = 0; s < j; ++s) {
        const double dk = (K(i + 1, j + 1, i, s) - K(i + 1, j, i, s)) / m2;
        ap2 += dk * in.p(i, s) * s2.mu(s);
        bq2 += dk * in.q(i, s) * s2.mu(s);
      }
      // int_0^{t1} k^{Delta_1}(t1, sigma_2(t2), s1, t2) (.)(s1, t2) Delta s1
      CompensatedSum ap1, bq1;
      for (std::size_t s = 0; s < i; ++s) {
        const double dk = (K(i + 1, j + 1, s, j) - K(i, j + 1, s, j)) / m1;
        ap1 += dk * in.p(s, j) * s1.mu(s);
        bq1 += dk * in.q(s, j) * s1.mu(s);
      }
      // int int k^{Delta_1 Delta_2}(t1, t2, s1, s2) (.)(s1, s2)
      CompensatedSum ap12, bq12;
      for (std::size_t x = 0; x < i; ++x) {
        CompensatedSum ai, bi;
        for (std::size_t y = 0; y < j; ++y) {
          const double lo = (K(i + 1, j, x, y) - K(i, j, x, y)) / m1;
          const double hi = (K(i + 1, j + 1, x, y) - K(i, j + 1, x, y)) / m1;
          const double dk = (hi - lo) / m2;
          ai += dk * in.p(x, y) * s2.mu(y);
          bi += dk * in.q(x, y) * s2.mu(y);
        }
        ap12 += ai.value() * s1.mu(x);
        bq12 += bi.value() * s1.mu(x);
      }

      CompensatedSum av(k_sigma * in.p(i, j));
      av += ap2.value();
      av += ap1.value();
      av += ap12.value();
      CompensatedSum bv(k_sigma * in.q(i, j));
      bv += bq2.value();
      bv += bq1.value();
      bv += bq12.value();
      a[i * e.cols + j] = av.value();
      b[i * e.cols + j] = bv.value();
    }
  }

  const GridFn2 A =
      cumulative_double_integral(GridFn2(d, e.rows, e.cols, std::move(a))).restrict(e.rows, e.cols);
  auto g = gronwall_2d(A, GridFn2(d, e.rows, e.cols, std::move(b)), variant);
  diag.insert(diag.end(), g.diagnostics.begin(), g.diagnostics.end());

  std::vector<double> bound(e.rows * e.cols);
  for (std::size_t i = 0; i < e.rows; ++i) {
    for (std::size_t j = 0; j < e.cols; ++j) {
      bound[i * e.cols + j] = in.p(i, j) + in.q(i, j) * g.z(i, j);
    }
  }
  BoundReport r = make_report(Theorem::Kernel, variant,
                              GridFn2(d, e.rows, e.cols, std::move(bound)), std::move(diag));
  if (in.u) compare_witness(r, *in.u);
  return r;
}

BoundReport bound_system(const SystemInputs& in, ExponentVariant variant) {
  if (in.c1 < 0.0 || in.c2 < 0.0 || !std::isfinite(in.c1) || !std::isfinite(in.c2)) {
    throw InputError("system bound: c1 and c2 must be nonnegative constants");
  }
  const TimeScale2D& d = in.h[0].domain();
  const Extent e = kappa_extent(d);
  static constexpr const char* names[] = {"h1", "h2", "h3", "h4"};
  for (std::size_t m = 0; m < 4; ++m) require_cover(in.h[m], d, e, names[m]);
  auto diag = check_hypotheses(BoundInputs{in});

  const double c3 = in.c1 + in.c2;
  std::vector<double> H(e.rows * e.cols);
  for (std::size_t i = 0; i < e.rows; ++i) {
    for (std::size_t j = 0; j < e.cols; ++j) {
      H[i * e.cols + j] = std::max(in.h[0](i, j) + in.h[2](i, j), in.h[1](i, j) + in.h[3](i, j));
    }
  }
  const GridFn2 Hg(d, e.rows, e.cols, std::move(H));
  const GridFn2 intH = cumulative_double_integral(Hg);
  std::vector<double> A(e.rows * e.cols);
  for (std::size_t i = 0; i < e.rows; ++i) {
    for (std::size_t j = 0; j < e.cols; ++j) A[i * e.cols + j] = c3 * intH(i, j);
  }
  auto g = gronwall_2d(GridFn2(d, e.rows, e.cols, std::move(A)), Hg, variant);
  diag.insert(diag.end(), g.diagnostics.begin(), g.diagnostics.end());

  std::vector<double> bound(e.rows * e.cols);
  for (std::size_t k = 0; k < bound.size(); ++k) bound[k] = c3 + g.z.values()[k];
  BoundReport r = make_report(Theorem::System, variant,
                              GridFn2(d, e.rows, e.cols, std::move(bound)), std::move(diag));
  if (in.u.has_value() != in.v.has_value()) {
    throw InputError("system bound: supply both witnesses u and v or neither");
  }
  if (in.u) {
    if (!same_domain(in.u->domain(), in.v->domain()) || in.u->rows() != in.v->rows() ||
        in.u->cols() != in.v->cols()) {
      throw InputError("system bound: witnesses u and v differ in extent");
    }
    std::vector<double> sum(in.u->values().size());
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = in.u->values()[k] + in.v->values()[k];
    compare_witness(r, GridFn2(in.u->domain(), in.u->rows(), in.u->cols(), std::move(sum)));
  }
  return r;
}

BoundReport bound_integrodynamic(const IntegroInputs& in) {
  const TimeScale2D& d = in.c.domain();
  if (!same_scale(in.a.scale_ptr(), d.first) || !same_scale(in.b.scale_ptr(), d.second)) {
    throw InputError("a and b must live on the two component scales of c");
  }
  if (!in.a.is_full() || !in.b.is_full()) {
    throw InputError("a and b must be sampled on their whole scales");
  }
  const Extent e = kappa_extent(d);
  require_cover(in.c, d, e, "c");
  for (std::size_t i = 0; i < in.a.size(); ++i) {
    if (!(in.a[i] > 0.0)) throw InputError("a must be positive (t1 = " + std::to_string(in.a.t(i)) + ")");
  }
  for (std::size_t j = 0; j < in.b.size(); ++j) {
    if (!(in.b[j] > 0.0)) throw InputError("b must be positive (t2 = " + std::to_string(in.b.t(j)) + ")");
  }
  auto diag = check_hypotheses(BoundInputs{in});

  const auto& s1 = d.scale1();
  const auto& s2 = d.scale2();
  const double b0 = in.b[0];

  // p(t1, t2) = a^Delta(t1) / (a(t1) + b(0)) + int_0^{t2} (1 + c(t1, s2)) Delta s2
  std::vector<double> p(e.rows * e.cols);
  for (std::size_t i = 0; i < e.rows; ++i) {
    const double a_delta = (in.a[i + 1] - in.a[i]) / s1.mu(i);
    CompensatedSum acc;
    for (std::size_t j = 0; j < e.cols; ++j) {
      p[i * e.cols + j] = a_delta / (in.a[i] + b0) + acc.value();
      acc += (1.0 + in.c(i, j)) * s2.mu(j);
    }
  }

  // q(t1, t2) = (a(0) + b(t2)) e_p(t1, 0) c(t1, t2), e_p in the first variable.
  std::vector<double> q(e.rows * e.cols);
  for (std::size_t j = 0; j < e.cols; ++j) {
    std::vector<double> column(e.rows);
    for (std::size_t i = 0; i < e.rows; ++i) column[i] = p[i * e.cols + j];
    const auto ep = exp_along(GridFn1(d.first, std::move(column)), "p", Axis::First, d.scale2()[j]);
    for (std::size_t i = 0; i < e.rows; ++i) {
      ScaledReal v = ep[i];
      v *= (in.a[0] + in.b[j]) * in.c(i, j);
      q[i * e.cols + j] = v.to_double();
    }
  }

  const GridFn2 Q = cumulative_double_integral(GridFn2(d, e.rows, e.cols, std::move(q)));
  std::vector<double> h(e.rows * e.cols);
  for (std::size_t i = 0; i < e.rows; ++i) {
    for (std::size_t j = 0; j < e.cols; ++j) {
      h[i * e.cols + j] = in.a[i] + in.b[j] + Q(i, j);
    }
  }
  const GridFn2 bound =
      cumulative_double_integral(GridFn2(d, e.rows, e.cols, std::move(h))).restrict(e.rows, e.cols);

  BoundReport r =
      make_report(Theorem::IntegroDynamic, ExponentVariant::FirstVariable, bound, std::move(diag));
  if (in.u) compare_witness(r, *in.u);
  return r;
}

BoundReport compute_bound(const BoundInputs& in, ExponentVariant variant) {
  return std::visit(
      [variant](const auto& x) -> BoundReport {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, KernelInputs>) return bound_theorem_kernel(x, variant);
        else if constexpr (std::is_same_v<T, CorollaryInputs>) return bound_corollary(x, variant);
        else if constexpr (std::is_same_v<T, SystemInputs>) return bound_system(x, variant);
        else return bound_integrodynamic(x);
      },
      in);
}

}  // namespace tscale
