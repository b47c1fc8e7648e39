#include "tscale/functions.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "tscale/error.hpp"
#include "tscale/format.hpp"

namespace tscale {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Constant: return "constant";
    case Family::Polynomial: return "polynomial";
    case Family::Exponential: return "exponential";
    case Family::Sine: return "sine";
    case Family::Tabulated: return "tabulated";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "constant" || name == "const") return Family::Constant;
  if (name == "polynomial" || name == "poly") return Family::Polynomial;
  if (name == "exponential" || name == "exp") return Family::Exponential;
  if (name == "sine" || name == "sin") return Family::Sine;
  if (name == "tabulated" || name == "table") return Family::Tabulated;
  throw ConfigError("unknown function family '" + std::string(name) + "'");
}

namespace {

void require_params(const std::vector<double>& p, std::size_t n, Family f) {
  if (p.size() != n) {
    std::ostringstream os;
    os << to_string(f) << " function needs " << n << " parameter(s), got " << p.size();
    throw ConfigError(os.str());
  }
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    double v = 0.0;
    const auto* first = item.data();
    const auto* last = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || item.empty()) {
      throw ConfigError("malformed number '" + std::string(item) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format_double(v[i]);
  }
  return s;
}

}  // namespace

double Function1D::operator()(double t) const {
  const double tau = t - origin;
  switch (family) {
    case Family::Constant:
      require_params(params, 1, family);
      return params[0];
    case Family::Polynomial: {
      double acc = 0.0;
      for (auto it = params.rbegin(); it != params.rend(); ++it) acc = acc * tau + *it;
      return acc;
    }
    case Family::Exponential:
      require_params(params, 2, family);
      return params[0] * std::exp(params[1] * tau);
    case Family::Sine:
      require_params(params, 2, family);
      return params[0] * std::sin(params[1] * tau);
    case Family::Tabulated:
      throw ConfigError("tabulated functions can only be sampled on their scale");
  }
  return 0.0;
}

double Function1D::derivative(double t) const {
  const double tau = t - origin;
  switch (family) {
    case Family::Constant:
      return 0.0;
    case Family::Polynomial: {
      double acc = 0.0;
      for (std::size_t k = params.size(); k-- > 1;) acc = acc * tau + static_cast<double>(k) * params[k];
      return acc;
    }
    case Family::Exponential:
      require_params(params, 2, family);
      return params[0] * params[1] * std::exp(params[1] * tau);
    case Family::Sine:
      require_params(params, 2, family);
      return params[0] * params[1] * std::cos(params[1] * tau);
    case Family::Tabulated:
      break;
  }
  throw ConfigError("tabulated functions have no closed-form derivative");
}

double Function1D::integral(double lo, double hi) const {
  const double a = lo - origin;
  const double b = hi - origin;
  switch (family) {
    case Family::Constant:
      require_params(params, 1, family);
      return params[0] * (b - a);
    case Family::Polynomial: {
      auto prim = [this](double x) {
        double acc = 0.0;
        for (std::size_t k = params.size(); k-- > 0;) acc = acc * x + params[k] / static_cast<double>(k + 1);
        return acc * x;
      };
      return prim(b) - prim(a);
    }
    case Family::Exponential:
      require_params(params, 2, family);
      if (params[1] == 0.0) return params[0] * (b - a);
      return params[0] / params[1] * (std::exp(params[1] * b) - std::exp(params[1] * a));
    case Family::Sine:
      require_params(params, 2, family);
      if (params[1] == 0.0) return 0.0;
      return params[0] / params[1] * (std::cos(params[1] * a) - std::cos(params[1] * b));
    case Family::Tabulated:
      break;
  }
  throw ConfigError("tabulated functions have no closed-form integral");
}

GridFn1 Function1D::sample(const ScalePtr& scale) const {
  if (family == Family::Tabulated) {
    if (params.size() != scale->size()) {
      throw ConfigError("tabulated function has " + std::to_string(params.size()) +
                        " values for a scale of " + std::to_string(scale->size()) + " points");
    }
    return GridFn1(scale, params);
  }
  return GridFn1::sample(scale, [this](double t) { return (*this)(t); });
}

Function1D Function1D::parse(std::string_view descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string_view::npos) {
    throw ConfigError("function descriptor '" + std::string(descriptor) +
                      "' must look like family:params");
  }
  Function1D f;
  f.family = parse_family(descriptor.substr(0, colon));
  f.params = parse_number_list(descriptor.substr(colon + 1));
  switch (f.family) {
    case Family::Constant: require_params(f.params, 1, f.family); break;
    case Family::Exponential:
    case Family::Sine: require_params(f.params, 2, f.family); break;
    case Family::Polynomial:
    case Family::Tabulated:
      if (f.params.empty()) throw ConfigError("function descriptor without parameters");
      break;
  }
  return f;
}

std::string Function1D::describe() const {
  std::string s(to_string(family));
  s += ':';
  s += join(params);
  if (origin != 0.0) s += "@" + format_double(origin);
  return s;
}

double Function2D::operator()(double t1, double t2) const {
  const double x = t1 - origin1;
  const double y = t2 - origin2;
  switch (family) {
    case Family::Constant:
      require_params(params, 1, family);
      return params[0];
    case Family::Polynomial: {
      // graded order: degree 0, then (1,0),(0,1), then (2,0),(1,1),(0,2), ...
      double acc = 0.0;
      std::size_t k = 0;
      for (int deg = 0; k < params.size(); ++deg) {
        for (int a = deg; a >= 0 && k < params.size(); --a, ++k) {
          acc += params[k] * std::pow(x, a) * std::pow(y, deg - a);
        }
      }
      return acc;
    }
    case Family::Exponential:
      require_params(params, 3, family);
      return params[0] * std::exp(params[1] * x + params[2] * y);
    case Family::Sine:
      require_params(params, 2, family);
      return params[0] * std::sin(params[1] * (x + y));
    case Family::Tabulated:
      break;
  }
  throw ConfigError("tabulated functions can only be sampled on their grid");
}

GridFn2 Function2D::sample(const TimeScale2D& domain) const {
  if (family == Family::Tabulated) {
    const std::size_t n1 = domain.scale1().size();
    const std::size_t n2 = domain.scale2().size();
    if (params.size() != n1 * n2) {
      throw ConfigError("tabulated 2-D function has " + std::to_string(params.size()) +
                        " values for a " + std::to_string(n1) + "x" + std::to_string(n2) + " grid");
    }
    return GridFn2(domain, n1, n2, params);
  }
  return GridFn2::sample(domain, [this](double t1, double t2) { return (*this)(t1, t2); });
}

std::string Function2D::describe() const {
  std::string s(to_string(family));
  s += ':';
  s += join(params);
  return s;
}

}  // namespace tscale
