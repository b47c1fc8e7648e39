// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>
#include <variant>

#include "oracles.hpp"
#include "tscale/calculus.hpp"
#include "tscale/grid2d.hpp"
#include "tscale/pachpatte.hpp"
#include "tscale/regressive.hpp"
#include "tscale/verify.hpp"
#include "tscale/witness.hpp"

using namespace tscale;
namespace fs = std::filesystem;

namespace {

constexpr double kCalculusTol = 1e-12;
constexpr double kBoundTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void report(int n, const char* title, Outcome& o) {
  std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title;
  const std::string d = o.detail.str();
  if (!d.empty()) std::cout << "  [" << d << "]";
  std::cout << std::endl;
  if (!o.pass) ++failures;
}

double rel(long double x, long double y) {
  return static_cast<double>(std::fabs(x - y) / std::max(1.0L, std::fabs(y)));
}

oracle::Points points_of(const TimeScale& ts) {
  return oracle::Points(ts.points().begin(), ts.points().end());
}

oracle::Grid to_grid(const GridFn2& f) {
  oracle::Grid g = oracle::make_grid(f.rows(), f.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) g[i][j] = f(i, j);
  return g;
}

GridFn2 random_grid(const TimeScale2D& d, InstanceRng& rng, double lo, double hi) {
  const std::size_t R = d.scale1().size(), C = d.scale2().size();
  std::vector<double> v(R * C);
  for (double& x : v) x = lo + (hi - lo) * rng.uniform();
  return GridFn2(d, R, C, std::move(v));
}

// Largest relative gap between a library grid and an oracle grid on the library's extent.
double grid_gap(const GridFn2& f, const oracle::Grid& ref) {
  double worst = 0.0;
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) worst = std::max(worst, rel(f(i, j), ref[i][j]));
  return worst;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// ---------------------------------------------------------------------------

void calculus_round_trips() {
  Outcome o;
  InstanceRng rng(20240501, 0);
  double worst = 0.0;
  for (int n = 0; n < 50; ++n) {
    const int degree = 1 + static_cast<int>(rng.below(4));
    std::vector<double> c(degree + 1);
    for (double& x : c) x = 2.0 * rng.uniform() - 1.0;
    auto poly = [&](long double t) {
      long double s = 0.0L;
      for (int k = degree; k >= 0; --k) s = s * t + c[k];
      return s;
    };
    auto magnitude = [&](long double t) { return std::max(1.0L, std::fabs(poly(t))); };
    const int N = 4 + static_cast<int>(rng.below(9));
    for (const TimeScale& built : {TimeScale::integer_segment(-N, N), TimeScale::q_grid(2.0, N)}) {
      const ScalePtr ts = share(built);
      const auto f = GridFn1::sample(ts, [&](double t) { return static_cast<double>(poly(t)); });
      const auto df = delta_derivative(f);
      for (std::size_t b = 1; b < ts->size(); ++b) {
        // Oracle: telescoping f(t_b) - f(t_0) straight from the polynomial.
        const long double ref = poly((*ts)[b]) - poly((*ts)[0]);
        const long double scale = std::max(magnitude((*ts)[b]), magnitude((*ts)[0]));
        const double e = static_cast<double>(std::fabs(cauchy_integral(df, 0, b) - ref) / scale);
        worst = std::max(worst, e);
        o.require(e <= kCalculusTol, "integral of derivative, N=" + std::to_string(N));
      }
      const auto F = antiderivative(f, ts->find(0.0).value_or(0), 0.0);
      const auto dF = delta_derivative(F);
      for (std::size_t i = 0; i < dF.size(); ++i) {
        const double e = static_cast<double>(std::fabs(dF[i] - poly((*ts)[i])) / magnitude((*ts)[i]));
        worst = std::max(worst, e);
        o.require(e <= kCalculusTol, "derivative of antiderivative, N=" + std::to_string(N));
      }
    }
  }
  o.detail << "worst relative error " << fmt(worst);
  report(1, "fundamental theorem round-trips on Z and q-grids", o);
}

void exponential_closed_forms() {
  Outcome o;
  const ScalePtr z = share(TimeScale::integer_segment(0, 40));
  double worst = 0.0;
  for (double alpha : {0.5, 1.0, 2.0}) {
    const auto e = exp_fn(GridFn1::constant(z, alpha), 0);
    for (std::size_t t = 0; t < e.size(); ++t) {
      const double r = rel(e[t], std::pow(1.0L + alpha, static_cast<long double>(t)));
      worst = std::max(worst, r);
      o.require(r <= kCalculusTol, "(1+alpha)^t for alpha=" + fmt(alpha));
    }
  }
  std::vector<double> errors;
  for (double h = 0.1; errors.size() < 4; h /= 2.0) {
    const ScalePtr mesh = share(TimeScale::dense_mesh(0.0, 1.0, h));
    const auto e = exp_fn(GridFn1::constant(mesh, 1.0), 0);
    const double err = std::fabs(e[e.size() - 1] - std::exp(1.0));
    o.require(err <= 3.0 * h, "|e_1(1,0) - e| <= 3h at h=" + fmt(h));
    errors.push_back(err);
  }
  o.detail << "worst closed-form error " << fmt(worst) << ", orders";
  for (std::size_t k = 1; k < errors.size(); ++k) {
    const double order = std::log2(errors[k - 1] / errors[k]);
    o.detail << ' ' << fmt(order);
    o.require(order >= 0.9 && order <= 1.1, "observed order " + fmt(order));
  }
  report(2, "exponential closed forms and dense-mesh convergence", o);
}

void comparison_lemma() {
  Outcome o;
  InstanceRng rng(777, 0);
  double worst_eq = 0.0;
  std::size_t exceed = 0;
  for (int n = 0; n < 100; ++n) {
    const int len = 2 + static_cast<int>(rng.below(49));
    const ScalePtr ts = share(TimeScale::integer_segment(0, len));
    std::vector<double> fv(ts->size()), gv(ts->size());
    for (std::size_t i = 0; i < ts->size(); ++i) {
      fv[i] = 2.0 * rng.uniform() - 1.0;
      gv[i] = 0.2 * rng.uniform();
    }
    const GridFn1 f(ts, fv), g(ts, gv);
    const double xa = rng.uniform();
    const std::size_t a = rng.below(ts->size() - 1);
    const auto B = comparison_bound(xa, f, g, a);
    const auto ref = oracle::comparison(points_of(*ts), fv, gv, xa, a);
    const auto eq = witness_comparison(f, g, xa, a, 0.0);
    const auto slack = witness_comparison(f, g, xa, a, 0.05 + rng.uniform());
    for (std::size_t k = 0; k < B.size(); ++k) {
      const double e = std::max(rel(eq[k], ref[k]), rel(B[k], ref[k]));
      worst_eq = std::max(worst_eq, e);
      o.require(e <= kBoundTol, "equality witness at length " + std::to_string(len));
      if (slack[k] > B[k] + kBoundTol * (1.0 + std::fabs(B[k]))) ++exceed;
    }
  }
  o.require(exceed == 0, std::to_string(exceed) + " slack witness points above the bound");
  o.detail << "worst equality mismatch " << fmt(worst_eq) << ", slack exceedances " << exceed;
  report(3, "comparison lemma", o);
}

InstanceSpec single(Theorem t, const std::string& s1, const std::string& s2, std::uint64_t seed) {
  InstanceSpec s;
  s.theorem = t;
  s.scale1 = ScaleSpec::parse(s1);
  s.scale2 = ScaleSpec::parse(s2);
  s.seed = seed;
  s.count = 1;
  return s;
}

TimeScale2D domain_of(const InstanceSpec& s) {
  return TimeScale2D(share(s.scale1.build()), share(s.scale2.build()));
}

void corollary_dominance() {
  Outcome o;
  std::size_t violated = 0, rechecks = 0;
  double worst_oracle = 0.0;
  for (int n = 0; n < 100; ++n) {
    InstanceSpec s;
    if (n % 2 == 0) {
      const std::string a = "integer:0.." + std::to_string(3 + n % 17);
      const std::string b = "integer:0.." + std::to_string(3 + (n * 7) % 17);
      s = single(Theorem::Corollary, a, b, 1000 + n);
    } else {
      const std::string a = "q:2," + std::to_string(3 + n % 7);
      const std::string b = "q:3," + std::to_string(3 + (n * 5) % 7);
      s = single(Theorem::Corollary, a, b, 1000 + n);
    }
    const auto summary = run_verification(s);
    violated += summary.instances_with_violation;
    rechecks += summary.witness_check_failures;

    const TimeScale2D d = domain_of(s);
    const auto inst = generate_instance(s, d, 0);
    const auto& in = std::get<CorollaryInputs>(inst.inputs);
    const auto rep = bound_corollary(in);
    const oracle::Grid kg = to_grid(in.k);
    const auto ref = oracle::kernel_bound(points_of(d.scale1()), points_of(d.scale2()), to_grid(in.p),
                                          to_grid(in.q),
                                          [&](std::size_t, std::size_t, std::size_t a, std::size_t b) {
                                            return kg[a][b];
                                          });
    const double gap = grid_gap(rep.bound, ref);
    worst_oracle = std::max(worst_oracle, gap);
    o.require(gap <= kBoundTol, "bound disagrees with the oracle on instance " + std::to_string(n));
  }
  o.require(violated == 0, std::to_string(violated) + " instances with violations");
  o.require(rechecks == 0, std::to_string(rechecks) + " witness recheck failures");

  const TimeScale2D z(share(TimeScale::integer_segment(0, 3)), share(TimeScale::integer_segment(0, 3)));
  CorollaryInputs one{GridFn2::constant(z, 1.0), GridFn2::constant(z, 1.0), GridFn2::constant(z, 1.0),
                      std::nullopt};
  one.u = witness_corollary(one.p, one.q, one.k);
  const auto closed = bound_corollary(one);
  o.require(closed.bound(2, 2) == 37.0, "bound(2,2) = " + fmt(closed.bound(2, 2)));
  o.require(closed.witness && (*closed.witness)(2, 2) == 6.0, "witness(2,2) is not 6");
  o.detail << "violations " << violated << ", worst oracle gap " << fmt(worst_oracle)
           << ", bound(2,2)=" << closed.bound(2, 2);
  report(4, "corollary dominance and closed form", o);
}

void kernel_case() {
  Outcome o;
  InstanceRng rng(4242, 0);
  double worst_reduction = 0.0;
  for (int n = 0; n < 20; ++n) {
    const TimeScale2D d(share(TimeScale::integer_segment(0, 3 + n % 8)),
                        share(TimeScale::q_grid(2.0, 2 + n % 6)));
    CorollaryInputs c{random_grid(d, rng, 0.0, 2.0), random_grid(d, rng, 0.0, 2.0),
                      random_grid(d, rng, 0.0, 1.0), std::nullopt};
    const KernelInputs k{c.p, c.q, KernelOracle::from_grid(c.k), std::nullopt};
    const auto a = bound_corollary(c);
    const auto b = bound_theorem_kernel(k);
    o.require(a.bound.rows() == b.bound.rows() && a.bound.cols() == b.bound.cols(), "extent mismatch");
    for (std::size_t i = 0; i < a.bound.rows(); ++i) {
      for (std::size_t j = 0; j < a.bound.cols(); ++j) {
        const double e = rel(b.bound(i, j), a.bound(i, j));
        worst_reduction = std::max(worst_reduction, e);
        o.require(e <= kCalculusTol, "constant-kernel reduction");
      }
    }
  }

  InstanceSpec s = single(Theorem::Kernel, "integer:0..7", "q:2,6", 9);
  s.count = 50;
  s.coefficients["k"] = CoefficientSpec{"separable", {}};
  s.variants = VariantSelection::Both;
  const auto summary = run_verification(s);
  const auto& first = summary.variant_results.at("first");
  const auto& second = summary.variant_results.at("second");
  o.require(summary.instances_run == 50, "instance count");
  o.require(first.instances_with_violation == 0,
            std::to_string(first.instances_with_violation) + " FirstVariable violations");
  o.require(summary.witness_check_failures == 0, "witness recheck failures");
  std::size_t hyp = 0;
  for (const auto& dg : summary.digests) hyp += dg.hypothesis_issues;
  o.require(hyp == 0, "kernel instances break the hypotheses");

  const TimeScale2D d = domain_of(s);
  double worst_oracle = 0.0;
  for (std::size_t n = 0; n < 10; ++n) {
    const auto inst = generate_instance(s, d, n);
    const auto& in = std::get<KernelInputs>(inst.inputs);
    const auto rep = bound_theorem_kernel(in);
    const auto ref = oracle::kernel_bound(points_of(d.scale1()), points_of(d.scale2()), to_grid(in.p),
                                          to_grid(in.q),
                                          [&](std::size_t i1, std::size_t i2, std::size_t j1, std::size_t j2) {
                                            return static_cast<long double>(in.k(i1, i2, j1, j2));
                                          });
    worst_oracle = std::max(worst_oracle, grid_gap(rep.bound, ref));
  }
  o.require(worst_oracle <= kBoundTol, "kernel bound disagrees with the oracle");

  o.detail << "reduction gap " << fmt(worst_reduction) << ", oracle gap " << fmt(worst_oracle)
           << ", FirstVariable violations " << first.instances_with_violation
           << "; informational: SecondVariable violated in " << second.instances_with_violation
           << "/50, worst relative " << fmt(second.worst_relative_violation);
  report(5, "kernel theorem", o);
  std::cout << "  SecondVariable per instance:";
  for (const auto& dg : summary.digests) {
    std::cout << ' ' << (dg.second_variant_dominated.value_or(true) ? '.' : 'x');
  }
  std::cout << std::endl;
}

void system_case() {
  Outcome o;
  std::size_t violated = 0;
  double worst_oracle = 0.0;
  for (int n = 0; n < 100; ++n) {
    const auto s = single(Theorem::System, "integer:0.." + std::to_string(3 + n % 10),
                          n % 2 ? "q:2," + std::to_string(2 + n % 6) : "h:0.5,0..4", 5000 + n);
    const auto summary = run_verification(s);
    violated += summary.instances_with_violation;
    o.require(summary.witness_check_failures == 0, "witness recheck failures");

    const TimeScale2D d = domain_of(s);
    const auto inst = generate_instance(s, d, 0);
    const auto& in = std::get<SystemInputs>(inst.inputs);
    const auto rep = bound_system(in);
    std::vector<oracle::Grid> h;
    for (const auto& g : in.h) h.push_back(to_grid(g));
    const auto ref = oracle::system_bound(points_of(d.scale1()), points_of(d.scale2()), in.c1, in.c2, h);
    worst_oracle = std::max(worst_oracle, grid_gap(rep.bound, ref));
  }
  o.require(violated == 0, std::to_string(violated) + " instances where u+v exceeds the bound");
  o.require(worst_oracle <= kBoundTol, "system bound disagrees with the oracle");

  const TimeScale2D d(share(TimeScale::integer_segment(0, 9)), share(TimeScale::q_grid(2.0, 5)));
  const GridFn2 zero = GridFn2::constant(d, 0.0);
  const SystemInputs collapse{0.75, 1.5, {zero, zero, zero, zero}, std::nullopt, std::nullopt};
  const auto rep = bound_system(collapse);
  bool exact = true;
  for (double v : rep.bound.values()) exact = exact && v == 2.25;
  o.require(exact, "h = 0 does not collapse to c3");
  o.detail << "violations " << violated << ", oracle gap " << fmt(worst_oracle)
           << ", h=0 collapse exact " << (exact ? "yes" : "no");
  report(6, "coupled system", o);
}

void integrodynamic_case() {
  Outcome o;
  std::size_t violated = 0;
  double worst_oracle = 0.0;
  for (int n = 0; n < 100; ++n) {
    const auto s = single(Theorem::IntegroDynamic, n % 2 ? "q:2," + std::to_string(2 + n % 6)
                                                         : "integer:0.." + std::to_string(3 + n % 9),
                          "integer:0.." + std::to_string(2 + n % 7), 9000 + n);
    const auto summary = run_verification(s);
    violated += summary.instances_with_violation;
    o.require(summary.witness_check_failures == 0, "witness recheck failures");
    for (const auto& dg : summary.digests) o.require(dg.hypothesis_issues == 0, "a, b or c off-hypothesis");

    const TimeScale2D d = domain_of(s);
    const auto inst = generate_instance(s, d, 0);
    const auto& in = std::get<IntegroInputs>(inst.inputs);
    const auto rep = bound_integrodynamic(in);
    const auto av = in.a.values();
    const auto bv = in.b.values();
    const auto ref = oracle::integro_bound(points_of(d.scale1()), points_of(d.scale2()),
                                           std::vector<double>(av.begin(), av.end()),
                                           std::vector<double>(bv.begin(), bv.end()), to_grid(in.c));
    worst_oracle = std::max(worst_oracle, grid_gap(rep.bound, ref));
  }
  o.require(violated == 0, std::to_string(violated) + " instances where u exceeds the bound");
  o.require(worst_oracle <= kBoundTol, "integro-dynamic bound disagrees with the oracle");

  const TimeScale2D d(share(TimeScale::q_grid(2.0, 6)), share(TimeScale::integer_segment(0, 8)));
  const auto a = GridFn1::sample(d.first, [](double t) { return 1.0 + 0.25 * t; });
  const auto b = GridFn1::sample(d.second, [](double t) { return 2.0 + t * t; });
  const GridFn2 c = GridFn2::constant(d, 0.0);
  IntegroInputs in{a, b, c, witness_integrodynamic(a, b, c).u};
  const auto rep = bound_integrodynamic(in);
  double tight = 0.0;
  for (std::size_t i = 0; i < rep.bound.rows(); ++i)
    for (std::size_t j = 0; j < rep.bound.cols(); ++j)
      tight = std::max(tight, rel((*in.u)(i, j), rep.bound(i, j)));
  o.require(tight <= kCalculusTol, "c = 0 case is not tight");
  o.detail << "violations " << violated << ", oracle gap " << fmt(worst_oracle) << ", c=0 gap "
           << fmt(tight);
  report(7, "integro-dynamic inequality", o);
}

std::vector<std::size_t> random_cuts(InstanceRng& rng, std::size_t n) {
  std::vector<std::size_t> cuts{0};
  for (std::size_t k = 1; k < n; ++k)
    if (rng.uniform() < 0.3) cuts.push_back(k);
  cuts.push_back(n);
  return cuts;
}

std::vector<std::size_t> refine(InstanceRng& rng, const std::vector<std::size_t>& cuts) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    out.push_back(cuts[k]);
    for (std::size_t m = cuts[k] + 1; m < cuts[k + 1]; ++m)
      if (rng.uniform() < 0.4) out.push_back(m);
  }
  out.push_back(cuts.back());
  return out;
}

void darboux_machinery() {
  Outcome o;
  InstanceRng rng(31337, 0);
  double worst_identity = 0.0, worst_fubini = 0.0;
  for (int n = 0; n < 50; ++n) {
    const TimeScale2D d(share(n % 2 ? TimeScale::q_grid(1.5, 3 + n % 8)
                                    : TimeScale::integer_segment(-2, 4 + n % 10)),
                        share(TimeScale::h_grid(0.0, 3.0, 0.25 + 0.25 * (n % 3))));
    const GridFn2 f = random_grid(d, rng, -3.0, 3.0);
    const IndexRect r{0, d.scale1().size() - 1, 0, d.scale2().size() - 1};
    const double I = double_integral(f, r);

    long double nested = 0.0L;
    const auto t1 = points_of(d.scale1()), t2 = points_of(d.scale2());
    for (std::size_t i = r.a1; i < r.b1; ++i)
      for (std::size_t j = r.a2; j < r.b2; ++j) nested += f(i, j) * oracle::mu(t1, i) * oracle::mu(t2, j);
    o.require(rel(I, nested) <= kCalculusTol, "double integral disagrees with nested sums");

    const RectPartition coarse{random_cuts(rng, r.b1), random_cuts(rng, r.b2)};
    const RectPartition fine{refine(rng, coarse.cuts1), refine(rng, coarse.cuts2)};
    const auto sc = darboux_sums(f, coarse);
    const auto sf = darboux_sums(f, fine);
    const double tol = kCalculusTol * std::max(1.0, std::fabs(I));
    o.require(sf.upper <= sc.upper + tol && sf.lower >= sc.lower - tol, "refinement monotonicity");
    o.require(sc.lower <= I + tol && I <= sc.upper + tol, "L <= integral <= U");
    o.require(sf.lower <= I + tol && I <= sf.upper + tol, "L <= integral <= U after refinement");

    const auto finest = darboux_sums(f, RectPartition::finest(r));
    const double id = std::max(rel(finest.upper, I), rel(finest.lower, I));
    worst_identity = std::max(worst_identity, id);
    o.require(id <= kCalculusTol, "finest-partition identity");

    const double swapped = double_integral(f, r, SumOrder::ColumnsOuter);
    worst_fubini = std::max(worst_fubini, rel(swapped, I));
    o.require(rel(swapped, I) <= kCalculusTol, "Fubini order swap");
  }
  o.detail << "finest identity gap " << fmt(worst_identity) << ", Fubini gap " << fmt(worst_fubini);
  report(8, "Darboux sums", o);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_binary(const fs::path& config) {
  const std::string cmd = std::string("\"") + TSCALE_BINARY + "\" verify \"" + config.string() + "\" >/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void determinism() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / ("tscale_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::array<std::string, 3> bodies{
      R"("theorem": "kernel", "scale1": "integer:0..6", "scale2": "q:2,5", "functions": {"k": "separable"}, "seed": 11, "count": 12, "exponent_variant": "both")",
      R"("theorem": "system", "scale1": "h:0.5,0..3", "scale2": "integer:0..5", "seed": 3, "count": 15, "witness_mode": "strict_slack")",
      R"("theorem": "integrodynamic", "scale1": "q:2,5", "scale2": "integer:0..6", "seed": 5, "count": 15)"};
  int runs = 0;
  for (std::size_t k = 0; k < bodies.size(); ++k) {
    const fs::path cfg = dir / ("scenario" + std::to_string(k) + ".json");
    const fs::path base = dir / ("report" + std::to_string(k));
    std::ofstream(cfg) << "{" << bodies[k] << R"(, "output": ")" << base.string() << "\"}\n";
    std::array<std::string, 2> csv, json;
    for (int rep = 0; rep < 2; ++rep) {
      const int code = run_binary(cfg);
      o.require(code == 0 || code == 1, "verify exited with " + std::to_string(code));
      csv[rep] = slurp(base.string() + ".csv");
      json[rep] = slurp(base.string() + ".json");
      fs::remove(base.string() + ".csv");
      fs::remove(base.string() + ".json");
      ++runs;
    }
    o.require(!csv[0].empty() && !json[0].empty(), "empty report");
    o.require(csv[0] == csv[1], "CSV differs between runs of scenario " + std::to_string(k));
    o.require(json[0] == json[1], "JSON differs between runs of scenario " + std::to_string(k));
  }
  fs::remove_all(dir);
  o.detail << runs << " runs over " << bodies.size() << " scenarios";
  report(9, "byte-identical verify reports", o);
}

}  // namespace

int main() {
  const std::array<void (*)(), 9> criteria{calculus_round_trips, exponential_closed_forms, comparison_lemma,
                                           corollary_dominance,  kernel_case,              system_case,
                                           integrodynamic_case,  darboux_machinery,        determinism};
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    try {
      criteria[n]();
    } catch (const std::exception& e) {
      Outcome o;
      o.require(false, std::string("exception: ") + e.what());
      report(static_cast<int>(n + 1), "aborted", o);
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
