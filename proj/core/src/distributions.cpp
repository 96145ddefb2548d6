#include "svcov/distributions.hpp"

#include <cmath>
#include <limits>

#include "svcov/errors.hpp"

namespace svcov {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* message) {
  if (!ok) throw parameter_error(message);
}

}  // namespace

LawSpec::LawSpec(Kind kind, double a, double b, double c, double d)
    : kind_(kind), p_{a, b, c, d} {}

LawSpec LawSpec::pareto(double alpha, double x_min) {
  require(alpha > 0, "pareto: alpha must be > 0");
  require(x_min > 0, "pareto: x_min must be > 0");
  return {Kind::pareto, alpha, x_min, 0, 0};
}

LawSpec LawSpec::student_t(double nu) {
  require(nu > 0, "student_t: nu must be > 0");
  return {Kind::student_t, nu, 0, 0, 0};
}

LawSpec LawSpec::gaussian(double mean, double sd) {
  require(std::isfinite(mean), "gaussian: mean must be finite");
  require(sd > 0, "gaussian: sd must be > 0");
  return {Kind::gaussian, mean, sd, 0, 0};
}

LawSpec LawSpec::exponential(double rate) {
  require(rate > 0, "exponential: rate must be > 0");
  return {Kind::exponential, rate, 0, 0, 0};
}

LawSpec LawSpec::conv_equiv_eta() { return {Kind::conv_equiv_eta, 0, 0, 0, 0}; }

LawSpec LawSpec::stable(double alpha, double beta, double scale, double location) {
  require(alpha > 0 && alpha <= 2, "stable: alpha must be in (0,2]");
  require(beta >= -1 && beta <= 1, "stable: beta must be in [-1,1]");
  require(scale > 0, "stable: scale must be > 0");
  require(std::isfinite(location), "stable: location must be finite");
  return {Kind::stable, alpha, beta, scale, location};
}

LawSpec LawSpec::constant(double value) {
  require(std::isfinite(value), "constant: value must be finite");
  return {Kind::constant, value, 0, 0, 0};
}

LawSpec LawSpec::uniform(double lo, double hi) {
  require(lo < hi, "uniform: lo must be < hi");
  return {Kind::uniform, lo, hi, 0, 0};
}

LawSpec LawSpec::exp_conv_equiv_eta() { return {Kind::exp_conv_equiv_eta, 0, 0, 0, 0}; }

std::string LawSpec::name() const {
  switch (kind_) {
    case Kind::pareto: return "pareto";
    case Kind::student_t: return "student_t";
    case Kind::gaussian: return "gaussian";
    case Kind::exponential: return "exponential";
    case Kind::conv_equiv_eta: return "conv_equiv_eta";
    case Kind::stable: return "stable";
    case Kind::constant: return "constant";
    case Kind::uniform: return "uniform";
    case Kind::exp_conv_equiv_eta: return "exp_conv_equiv_eta";
  }
  return "?";
}

double LawSpec::tail_index() const {
  switch (kind_) {
    case Kind::pareto: return p_[0];
    case Kind::student_t: return p_[0];
    case Kind::stable:
      if (p_[0] < 2) return p_[0];
      throw numeric_error("tail_index: stable alpha=2 is Gaussian, not regularly varying");
    case Kind::exp_conv_equiv_eta: return 3.0;
    default:
      throw numeric_error("tail_index: law " + name() + " is not regularly varying");
  }
}

double LawSpec::log_tail_index() const {
  switch (kind_) {
    case Kind::exponential: return p_[0];
    case Kind::conv_equiv_eta: return 3.0;
    default:
      throw numeric_error("log_tail_index: exp(" + name() + ") is not regularly varying");
  }
}

namespace detail {

// Wichura's algorithm AS 241, PPND16. Relative error below 1e-15 over (0,1).
double inverse_normal_cdf(double u) {
  if (!(u > 0.0 && u < 1.0))
    throw numeric_error("inverse_normal_cdf: u must be in (0,1)");
  const double q = u - 0.5;
  double r;
  if (std::fabs(q) <= 0.425) {
    r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                 6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
               1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
             1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
           (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                 3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
               5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
             4.2313330701600911252e1) * r + 1.0);
  }
  r = q < 0 ? u : 1.0 - u;
  r = std::sqrt(-std::log(r));
  double v;
  if (r <= 5.0) {
    r -= 1.6;
    v = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
            3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
          4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
            6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
          2.05319162663775882187e0) * r + 1.0);
  } else {
    r -= 5.0;
    v = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
            2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
          5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
              1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
            1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
          5.99832206555887937690e-1) * r + 1.0);
  }
  return q < 0 ? -v : v;
}

namespace {

// Modified Lentz continued fraction for the incomplete beta function.
double beta_cf(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 3e-16) return h;
  }
  throw numeric_error("regularized_incomplete_beta: continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

}  // namespace detail

namespace {

// Survival of a standard CMS stable variate in the closed-form cases.
double stable_survival(const LawSpec& law, double x) {
  const double alpha = law.param(0), beta = law.param(1);
  const double scale = law.param(2), location = law.param(3);
  if (alpha == 2.0) {
    // S(2, beta, scale, loc) = N(loc, 2 scale^2) regardless of beta.
    return 0.5 * std::erfc((x - location) / (scale * 2.0));
  }
  if (alpha == 1.0 && beta == 0.0) {
    return 0.5 - std::atan((x - location) / scale) / kPi;
  }
  throw numeric_error(
      "survival: stable law has closed form only for alpha=2 or (alpha=1, beta=0)");
}

double cms_standard(double alpha, double beta, double u1, double u2) {
  const double V = kPi * (u1 - 0.5);
  const double W = -std::log(u2);
  if (alpha == 1.0) {
    const double h = kPi / 2 + beta * V;
    return (2.0 / kPi) *
           (h * std::tan(V) - beta * std::log((kPi / 2) * W * std::cos(V) / h));
  }
  const double tb = beta * std::tan(kPi * alpha / 2);
  const double B = std::atan(tb) / alpha;
  const double S = std::pow(1.0 + tb * tb, 1.0 / (2.0 * alpha));
  return S * std::sin(alpha * (V + B)) / std::pow(std::cos(V), 1.0 / alpha) *
         std::pow(std::cos(V - alpha * (V + B)) / W, (1.0 - alpha) / alpha);
}

double conv_equiv_eta_survival(double x) {
  if (x < 0) return 1.0;
  const double one_plus = 1.0 + x;
  return std::exp(-3.0 * x) / (one_plus * one_plus);
}

// Lower end of the support, used to seed quantile brackets.
double support_lo(const LawSpec& law) {
  switch (law.kind()) {
    case LawSpec::Kind::pareto: return law.param(1);
    case LawSpec::Kind::exponential: return 0.0;
    case LawSpec::Kind::conv_equiv_eta: return 0.0;
    case LawSpec::Kind::exp_conv_equiv_eta: return 1.0;
    case LawSpec::Kind::uniform: return law.param(0);
    case LawSpec::Kind::constant: return law.param(0);
    default: return -kInf;
  }
}

// Bisection inverse of a non-increasing survival-type function. Finds x with
// f(x) = target given f decreasing from 1 toward 0.
template <typename F>
double invert_decreasing(F f, double target, double lo_hint) {
  double lo, hi;
  if (std::isfinite(lo_hint)) {
    lo = lo_hint;
    hi = lo_hint == 0.0 ? 1.0 : std::fabs(lo_hint) * 2.0 + 1.0;
  } else {
    lo = -1.0;
    hi = 1.0;
    for (int i = 0; i < 1100 && f(lo) < target; ++i) lo *= 2.0;
    if (f(lo) < target) throw numeric_error("quantile: bracket expansion failed (low side)");
  }
  for (int i = 0; i < 1100 && f(hi) > target; ++i) hi *= 2.0;
  if (f(hi) > target) throw numeric_error("quantile: bracket expansion failed (high side)");
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (f(mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double survival(const LawSpec& law, double x) {
  using Kind = LawSpec::Kind;
  switch (law.kind()) {
    case Kind::pareto: {
      const double alpha = law.param(0), x_min = law.param(1);
      if (x <= x_min) return 1.0;
      return std::pow(x / x_min, -alpha);
    }
    case Kind::student_t: {
      const double nu = law.param(0);
      const double ax = std::fabs(x);
      const double half_two_sided =
          0.5 * detail::regularized_incomplete_beta(nu / 2.0, 0.5, nu / (nu + ax * ax));
      return x >= 0 ? half_two_sided : 1.0 - half_two_sided;
    }
    case Kind::gaussian:
      return 0.5 * std::erfc((x - law.param(0)) / (law.param(1) * std::sqrt(2.0)));
    case Kind::exponential:
      return x < 0 ? 1.0 : std::exp(-law.param(0) * x);
    case Kind::conv_equiv_eta:
      return conv_equiv_eta_survival(x);
    case Kind::stable:
      return stable_survival(law, x);
    case Kind::constant:
      return x < law.param(0) ? 1.0 : 0.0;
    case Kind::uniform: {
      const double lo = law.param(0), hi = law.param(1);
      if (x <= lo) return 1.0;
      if (x >= hi) return 0.0;
      return (hi - x) / (hi - lo);
    }
    case Kind::exp_conv_equiv_eta: {
      if (x < 1.0) return 1.0;
      const double l = 1.0 + std::log(x);
      return 1.0 / (l * l * x * x * x);
    }
  }
  throw numeric_error("survival: unknown law kind");
}

double survival_abs(const LawSpec& law, double x) {
  if (x < 0) return 1.0;
  if (law.kind() == LawSpec::Kind::constant)
    return x < std::fabs(law.param(0)) ? 1.0 : 0.0;
  if (support_lo(law) >= 0) return survival(law, x);
  // P(|X|>x) = P(X>x) + P(X<-x); continuous below zero for the laws here.
  return survival(law, x) + (1.0 - survival(law, -x));
}

double quantile(const LawSpec& law, double u) {
  if (!(u > 0.0 && u < 1.0)) throw parameter_error("quantile: u must be in (0,1)");
  if (law.kind() == LawSpec::Kind::constant) return law.param(0);
  const double target = 1.0 - u;
  return invert_decreasing([&](double x) { return survival(law, x); }, target,
                           support_lo(law));
}

double quantile_abs(const LawSpec& law, double u) {
  if (!(u > 0.0 && u < 1.0)) throw parameter_error("quantile_abs: u must be in (0,1)");
  if (law.kind() == LawSpec::Kind::constant) return std::fabs(law.param(0));
  const double target = 1.0 - u;
  return invert_decreasing([&](double x) { return survival_abs(law, x); }, target, 0.0);
}

double sample_one(const LawSpec& law, Rng& rng) {
  using Kind = LawSpec::Kind;
  switch (law.kind()) {
    case Kind::pareto:
      return law.param(1) * std::pow(rng.uniform(), -1.0 / law.param(0));
    case Kind::student_t: {
      // Bailey's polar method, trigonometric form: exact, two uniforms.
      const double nu = law.param(0);
      const double u1 = rng.uniform(), u2 = rng.uniform();
      return std::sqrt(nu * (std::pow(u1, -2.0 / nu) - 1.0)) * std::cos(2.0 * kPi * u2);
    }
    case Kind::gaussian:
      return law.param(0) + law.param(1) * detail::inverse_normal_cdf(rng.uniform());
    case Kind::exponential:
      return -std::log(rng.uniform()) / law.param(0);
    case Kind::conv_equiv_eta: {
      const double u = rng.uniform();
      return invert_decreasing(conv_equiv_eta_survival, u, 0.0);
    }
    case Kind::stable: {
      const double u1 = rng.uniform(), u2 = rng.uniform();
      const double alpha = law.param(0), beta = law.param(1);
      const double scale = law.param(2), location = law.param(3);
      double x = scale * cms_standard(alpha, beta, u1, u2) + location;
      if (alpha == 1.0) x += beta * (2.0 / kPi) * scale * std::log(scale);
      return x;
    }
    case Kind::constant:
      return law.param(0);
    case Kind::uniform:
      return law.param(0) + (law.param(1) - law.param(0)) * rng.uniform();
    case Kind::exp_conv_equiv_eta: {
      const double u = rng.uniform();
      return std::exp(invert_decreasing(conv_equiv_eta_survival, u, 0.0));
    }
  }
  throw numeric_error("sample: unknown law kind");
}

std::vector<double> sample(const LawSpec& law, RngStream stream, std::size_t count) {
  Rng rng(stream);
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_one(law, rng));
  return out;
}

std::vector<double> stable_sample(double alpha, double beta, double scale,
                                  double location, RngStream stream,
                                  std::size_t count) {
  return sample(LawSpec::stable(alpha, beta, scale, location), stream, count);
}

}  // namespace svcov
