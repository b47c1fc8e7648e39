#include "tscale/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tscale/error.hpp"
#include "tscale/format.hpp"
#include "tscale/witness.hpp"

namespace tscale {

std::string_view to_string(WitnessMode m) {
  return m == WitnessMode::Equality ? "equality" : "strict_slack";
}

std::string_view to_string(VariantSelection v) {
  switch (v) {
    case VariantSelection::First: return "first";
    case VariantSelection::Second: return "second";
    case VariantSelection::Both: return "both";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// RNG

std::uint64_t InstanceRng::splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

InstanceRng::InstanceRng(std::uint64_t seed, std::size_t instance) {
  std::uint64_t state = seed;
  std::uint64_t s = 0;
  for (std::size_t k = 0; k <= instance; ++k) s = splitmix64(state);
  engine_.seed(s);
}

double InstanceRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double InstanceRng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t InstanceRng::below(std::size_t bound) {
  return static_cast<std::size_t>(uniform() * static_cast<double>(bound));
}

// ---------------------------------------------------------------------------
// InstanceSpec

void InstanceSpec::validate() const {
  if (count < 1) throw ConfigError("count must be at least 1");
  scale1.validate();
  scale2.validate();
  static const std::map<Theorem, std::vector<std::string>> allowed = {
      {Theorem::Corollary, {"p", "q", "k"}},
      {Theorem::Kernel, {"p", "q", "k"}},
      {Theorem::System, {"c1", "c2", "h1", "h2", "h3", "h4"}},
      {Theorem::IntegroDynamic, {"a", "b", "c"}},
  };
  const auto& names = allowed.at(theorem);
  for (const auto& [name, c] : coefficients) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw ConfigError("coefficient '" + name + "' is not used by the " +
                        std::string(to_string(theorem)) + " theorem");
    }
    if (c.family == "random" || c.family == "separable") continue;
    parse_family(c.family);
  }
}

namespace {

constexpr double kMaxCoefficient = 10.0;

// Tabulated draws are reproducible from the seed; only their size is listed.
template <typename F>
std::string brief(const F& f) {
  if (f.family == Family::Tabulated) {
    return "tabulated[" + std::to_string(f.params.size()) + " values]";
  }
  return f.describe();
}

// ---------------------------------------------------------------------------
// Coefficient generation

Family draw_family(InstanceRng& rng) {
  static constexpr Family families[] = {Family::Constant, Family::Polynomial,
                                        Family::Exponential, Family::Tabulated};
  return families[rng.below(4)];
}

double grid_max(const GridFn2& g) {
  double m = 0.0;
  for (double v : g.values()) m = std::max(m, std::abs(v));
  return m;
}

double grid_max(const GridFn1& g) {
  double m = 0.0;
  for (double v : g.values()) m = std::max(m, std::abs(v));
  return m;
}

// Scales the parameters so the sampled maximum is at most cap.
void cap_params(std::vector<double>& params, Family family, double max_value, double cap) {
  if (!(max_value > cap)) return;
  const double s = cap / max_value;
  if (family == Family::Exponential) {
    params[0] *= s;
  } else {
    for (double& x : params) x *= s;
  }
}

// Nonnegative 2-D function, sampled maximum <= cap.
Function2D draw_2d(InstanceRng& rng, Family family, const TimeScale2D& d, double cap) {
  Function2D f;
  f.family = family;
  f.origin1 = d.scale1()[0];
  f.origin2 = d.scale2()[0];
  const double span1 = d.scale1().points().back() - f.origin1;
  const double span2 = d.scale2().points().back() - f.origin2;
  switch (family) {
    case Family::Constant:
      f.params = {std::abs(rng.normal())};
      break;
    case Family::Polynomial: {
      const std::size_t degree = rng.below(4);
      const std::size_t terms = (degree + 1) * (degree + 2) / 2;
      f.params.clear();
      for (std::size_t k = 0; k < terms; ++k) f.params.push_back(std::abs(rng.normal()));
      break;
    }
    case Family::Exponential:
      f.params = {std::abs(rng.normal()), std::abs(rng.normal()) / span1,
                  std::abs(rng.normal()) / span2};
      break;
    case Family::Tabulated: {
      f.params.resize(d.scale1().size() * d.scale2().size());
      for (double& x : f.params) x = std::abs(rng.normal());
      break;
    }
    case Family::Sine:
      throw ConfigError("sine is not a nonnegative coefficient family");
  }
  cap_params(f.params, family, grid_max(f.sample(d)), cap);
  return f;
}

// Nonnegative nondecreasing 1-D function, sampled maximum <= cap.
Function1D draw_monotone_1d(InstanceRng& rng, Family family, const ScalePtr& s, double cap) {
  Function1D f;
  f.family = family;
  f.origin = (*s)[0];
  const double span = s->points().back() - f.origin;
  switch (family) {
    case Family::Constant:
      f.params = {std::abs(rng.normal())};
      break;
    case Family::Polynomial: {
      const std::size_t degree = rng.below(4);
      f.params.clear();
      for (std::size_t k = 0; k <= degree; ++k) f.params.push_back(std::abs(rng.normal()));
      break;
    }
    case Family::Exponential:
      f.params = {std::abs(rng.normal()), std::abs(rng.normal()) / span};
      break;
    case Family::Tabulated: {
      f.params.resize(s->size());
      double acc = std::abs(rng.normal());
      for (double& x : f.params) {
        x = acc;
        acc += std::abs(rng.normal()) / static_cast<double>(s->size());
      }
      break;
    }
    case Family::Sine:
      throw ConfigError("sine is not a monotone coefficient family");
  }
  cap_params(f.params, family, grid_max(f.sample(s)), cap);
  return f;
}

Function2D fixed_2d(const CoefficientSpec& c, const TimeScale2D& d) {
  Function2D f;
  f.family = parse_family(c.family);
  f.params = c.params;
  f.origin1 = d.scale1()[0];
  f.origin2 = d.scale2()[0];
  return f;
}

Function1D fixed_1d(const CoefficientSpec& c, const ScalePtr& s) {
  Function1D f;
  f.family = parse_family(c.family);
  f.params = c.params;
  f.origin = (*s)[0];
  return f;
}

struct Drawer {
  const InstanceSpec& spec;
  const TimeScale2D& d;
  InstanceRng& rng;
  std::vector<std::string>& described;

  const CoefficientSpec* find(const std::string& name) const {
    auto it = spec.coefficients.find(name);
    return it == spec.coefficients.end() ? nullptr : &it->second;
  }

  Family family_for(const CoefficientSpec* c) {
    if (!c || c->family == "random") return draw_family(rng);
    return parse_family(c->family);
  }

  GridFn2 grid(const std::string& name, double cap = kMaxCoefficient) {
    const CoefficientSpec* c = find(name);
    Function2D f = (c && !c->sampled()) ? fixed_2d(*c, d) : draw_2d(rng, family_for(c), d, cap);
    described.push_back(name + "=" + brief(f));
    return f.sample(d);
  }

  GridFn1 monotone(const std::string& name, const ScalePtr& s, double floor) {
    const CoefficientSpec* c = find(name);
    Function1D f;
    if (c && !c->sampled()) {
      f = fixed_1d(*c, s);
      described.push_back(name + "=" + brief(f));
      return f.sample(s);
    }
    f = draw_monotone_1d(rng, family_for(c), s, kMaxCoefficient - floor);
    described.push_back(name + "=" + format_double(floor) + "+" + brief(f));
    GridFn1 g = f.sample(s);
    std::vector<double> v(g.values().begin(), g.values().end());
    for (double& x : v) x += floor;
    return GridFn1(s, std::move(v));
  }

  double scalar(const std::string& name) {
    const CoefficientSpec* c = find(name);
    double value = 0.0;
    if (c && !c->sampled()) {
      if (c->family != "constant" || c->params.size() != 1) {
        throw ConfigError(name + " must be a constant");
      }
      value = c->params[0];
    } else {
      value = std::min(kMaxCoefficient, std::abs(rng.normal()));
    }
    described.push_back(name + "=" + format_double(value));
    return value;
  }

  KernelOracle kernel(const std::string& name) {
    const CoefficientSpec* c = find(name);
    if (c && c->family == "constant") {
      if (c->params.size() != 1) throw ConfigError("constant kernel takes one parameter");
      const double value = c->params[0];
      described.push_back(name + "=constant:" + format_double(value));
      return KernelOracle(d, [value](std::size_t, std::size_t, std::size_t, std::size_t) {
        return value;
      });
    }
    if (c && c->family != "random" && c->family != "separable") {
      throw ConfigError("kernel family must be constant or separable");
    }
    // k = sum_m phi_m(s1, s2) g_m(t1) h_m(t2) with phi >= 0 and g, h
    // nonnegative nondecreasing: every forward difference in t is >= 0.
    struct Term {
      GridFn2 phi;
      GridFn1 g;
      GridFn1 h;
    };
    std::vector<Term> terms;
    for (int m = 0; m < 2; ++m) {
      Function2D phi = draw_2d(rng, draw_family(rng), d, 1.0);
      Function1D g = draw_monotone_1d(rng, draw_family(rng), d.first, 2.2);
      Function1D h = draw_monotone_1d(rng, draw_family(rng), d.second, 2.2);
      described.push_back(name + "[" + std::to_string(m) + "]=" + brief(phi) + "*" +
                          brief(g) + "*" + brief(h));
      terms.push_back(Term{phi.sample(d), g.sample(d.first), h.sample(d.second)});
    }
    return KernelOracle(d, [terms = std::move(terms)](std::size_t i1, std::size_t i2,
                                                      std::size_t j1, std::size_t j2) {
      double acc = 0.0;
      for (const auto& t : terms) acc += t.phi(j1, j2) * t.g[i1] * t.h[i2];
      return acc;
    });
  }

  Feedback feedback() {
    if (spec.witness_mode == WitnessMode::Equality) return std::nullopt;
    std::vector<double> v(d.scale1().size() * d.scale2().size());
    for (double& x : v) x = rng.uniform();
    return GridFn2(d, d.scale1().size(), d.scale2().size(), std::move(v));
  }
};

bool exceeds(double lhs, double rhs) {
  return lhs - rhs > 1e-10 * std::max(1.0, std::abs(rhs));
}

}  // namespace

GeneratedInstance generate_instance(const InstanceSpec& spec, const TimeScale2D& d,
                                    std::size_t index) {
  InstanceRng rng(spec.seed, index);
  std::vector<std::string> described;
  Drawer draw{spec, d, rng, described};

  switch (spec.theorem) {
    case Theorem::Corollary: {
      GridFn2 p = draw.grid("p");
      GridFn2 q = draw.grid("q");
      GridFn2 k = draw.grid("k");
      GridFn2 u = witness_corollary(p, q, k, draw.feedback());
      return {CorollaryInputs{std::move(p), std::move(q), std::move(k), std::move(u)},
              std::move(described), std::nullopt};
    }
    case Theorem::Kernel: {
      GridFn2 p = draw.grid("p");
      GridFn2 q = draw.grid("q");
      KernelOracle k = draw.kernel("k");
      GridFn2 u = witness_kernel(p, q, k, draw.feedback());
      return {KernelInputs{std::move(p), std::move(q), std::move(k), std::move(u)},
              std::move(described), std::nullopt};
    }
    case Theorem::System: {
      const double c1 = draw.scalar("c1");
      const double c2 = draw.scalar("c2");
      std::array<GridFn2, 4> h{draw.grid("h1"), draw.grid("h2"), draw.grid("h3"), draw.grid("h4")};
      Feedback fu = draw.feedback();
      Feedback fv = draw.feedback();
      SystemWitness w = witness_system(c1, c2, h, fu, fv);
      GridFn2 v = w.v;
      return {SystemInputs{c1, c2, std::move(h), std::move(w.u), std::move(w.v)},
              std::move(described), std::move(v)};
    }
    case Theorem::IntegroDynamic: {
      GridFn1 a = draw.monotone("a", d.first, 0.1);
      GridFn1 b = draw.monotone("b", d.second, 0.1);
      GridFn2 c = draw.grid("c");
      IntegroWitness w = witness_integrodynamic(a, b, c, draw.feedback());
      return {IntegroInputs{std::move(a), std::move(b), std::move(c), std::move(w.u)},
              std::move(described), std::nullopt};
    }
  }
  throw ConfigError("unknown theorem");
}

std::size_t recheck_witness(const BoundInputs& in) {
  return std::visit(
      [](const auto& x) -> std::size_t {
        using T = std::decay_t<decltype(x)>;
        std::size_t failures = 0;
        if constexpr (std::is_same_v<T, CorollaryInputs> || std::is_same_v<T, KernelInputs>) {
          if (!x.u) return 0;
          const GridFn2& u = *x.u;
          const auto& s1 = u.domain().scale1();
          const auto& s2 = u.domain().scale2();
          for (std::size_t i = 0; i < u.rows(); ++i) {
            for (std::size_t j = 0; j < u.cols(); ++j) {
              double acc = 0.0;
              for (std::size_t a = 0; a < i; ++a) {
                for (std::size_t b = 0; b < j; ++b) {
                  double kv = 0.0;
                  if constexpr (std::is_same_v<T, KernelInputs>) kv = x.k(i, j, a, b);
                  else kv = x.k(a, b);
                  acc += kv * u(a, b) * s1.mu(a) * s2.mu(b);
                }
              }
              if (exceeds(u(i, j), x.p(i, j) + x.q(i, j) * acc)) ++failures;
            }
          }
        } else if constexpr (std::is_same_v<T, SystemInputs>) {
          if (!x.u || !x.v) return 0;
          const GridFn2& u = *x.u;
          const GridFn2& v = *x.v;
          const auto& s1 = u.domain().scale1();
          const auto& s2 = u.domain().scale2();
          for (std::size_t i = 0; i < u.rows(); ++i) {
            for (std::size_t j = 0; j < u.cols(); ++j) {
              double au = 0.0, av = 0.0;
              for (std::size_t a = 0; a < i; ++a) {
                for (std::size_t b = 0; b < j; ++b) {
                  const double m = s1.mu(a) * s2.mu(b);
                  au += (x.h[0](a, b) * u(a, b) + x.h[1](a, b) * v(a, b)) * m;
                  av += (x.h[2](a, b) * u(a, b) + x.h[3](a, b) * v(a, b)) * m;
                }
              }
              if (exceeds(u(i, j), x.c1 + au)) ++failures;
              if (exceeds(v(i, j), x.c2 + av)) ++failures;
            }
          }
        } else {
          if (!x.u) return 0;
          const GridFn2& u = *x.u;
          const auto& s1 = u.domain().scale1();
          const auto& s2 = u.domain().scale2();
          // The hypothesis involves u^{Delta_1 Delta_2}, taken from u itself.
          const GridFn2 w = mixed_partial(u);
          for (std::size_t i = 0; i < w.rows(); ++i) {
            for (std::size_t j = 0; j < w.cols(); ++j) {
              double acc = 0.0;
              for (std::size_t a = 0; a < i; ++a) {
                for (std::size_t b = 0; b < j; ++b) {
                  acc += x.c(a, b) * (u(a, b) + w(a, b)) * s1.mu(a) * s2.mu(b);
                }
              }
              if (exceeds(w(i, j), x.a[i] + x.b[j] + acc)) ++failures;
              if (w(i, j) < -1e-10 * std::max(1.0, std::abs(x.a[i] + x.b[j] + acc))) ++failures;
            }
          }
          for (std::size_t i = 0; i < u.rows(); ++i) {
            if (u(i, 0) != 0.0) ++failures;
          }
          for (std::size_t j = 1; j < u.cols(); ++j) {
            if (u(0, j) != 0.0) ++failures;
          }
        }
        return failures;
      },
      in);
}

VerifySummary run_verification(const InstanceSpec& spec) {
  spec.validate();
  const TimeScale2D d(share(spec.scale1.build()), share(spec.scale2.build()));

  VerifySummary s;
  s.theorem = spec.theorem;
  s.witness_mode = spec.witness_mode;
  s.seed = spec.seed;
  s.primary_variant = spec.variants == VariantSelection::Second ? ExponentVariant::SecondVariable
                                                                : ExponentVariant::FirstVariable;
  // The integro-dynamic bound has a single exponential form.
  const bool has_variants = spec.theorem != Theorem::IntegroDynamic;
  const bool run_second =
      has_variants && (spec.variants != VariantSelection::First);
  const bool run_first = !has_variants || spec.variants != VariantSelection::Second;
  if (run_first) s.variant_results["first"] = {};
  if (run_second) s.variant_results["second"] = {};

  for (std::size_t index = 0; index < spec.count; ++index) {
    GeneratedInstance inst = generate_instance(spec, d, index);
    InstanceDigest dg;
    dg.index = index;
    dg.coefficients = std::move(inst.coefficients);
    dg.witness_check_failures = recheck_witness(inst.inputs);

    std::optional<BoundReport> primary;
    auto tally = [&](const std::string& key, const BoundReport& r) {
      VariantTally& t = s.variant_results[key];
      if (!r.dominated()) ++t.instances_with_violation;
      t.worst_relative_violation = std::max(t.worst_relative_violation, r.relative_violation);
    };
    if (run_first) {
      BoundReport r = compute_bound(inst.inputs, ExponentVariant::FirstVariable);
      tally("first", r);
      if (s.primary_variant == ExponentVariant::FirstVariable) primary = std::move(r);
    }
    if (run_second) {
      BoundReport r = compute_bound(inst.inputs, ExponentVariant::SecondVariable);
      tally("second", r);
      dg.second_variant_dominated = r.dominated();
      dg.second_variant_relative_violation = r.relative_violation;
      if (s.primary_variant == ExponentVariant::SecondVariable) primary = std::move(r);
    }

    dg.dominated = primary->dominated();
    dg.max_violation = primary->max_violation;
    dg.relative_violation = primary->relative_violation;
    dg.min_slack = primary->min_slack + 0.0;  // no -0 in reports
    dg.max_bound = grid_max(primary->bound);
    dg.violation_count = primary->violations.size();
    dg.hypothesis_issues = primary->hypothesis_diagnostics.size();

    ++s.instances_run;
    if (!dg.dominated) ++s.instances_with_violation;
    s.witness_check_failures += dg.witness_check_failures;
    s.worst_relative_violation = std::max(s.worst_relative_violation, dg.relative_violation);
    s.digests.push_back(std::move(dg));
    if (spec.keep_reports) s.reports.push_back(std::move(*primary));
  }
  return s;
}

}  // namespace tscale
