#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <algorithm>
#include <numbers>
#include <string>

#include "lininv/errors.hpp"
#include "lininv/trig.hpp"

namespace lininv {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kEta = 1e-4;
constexpr double kPanelTolerance = 1e-13;
constexpr int kMaxDepth = 40;
constexpr std::size_t kEvaluationBudget = 200'000'000;
constexpr std::size_t kGaussOrder = 20;
constexpr std::int64_t kMaxQuadratureFrequency = 20'000;

struct GaussRule {
  std::array<double, kGaussOrder> nodes{};
  std::array<double, kGaussOrder> weights{};
};

// Gauss-Legendre nodes on [-1, 1] by Newton iteration on P_n.
GaussRule make_gauss_rule() {
  GaussRule rule;
  const int n = static_cast<int>(kGaussOrder);
  for (int k = 0; k < n; ++k) {
    double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[k] = x;
    rule.weights[k] = 2 / ((1 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& gauss_rule() {
  static const GaussRule rule = make_gauss_rule();
  return rule;
}

class AdaptiveSimpson {
 public:
  explicit AdaptiveSimpson(const std::function<double(double)>& f) : f_(f) {}

  double integrate(double a, double b, double tolerance) {
    const double fa = eval(a);
    const double fb = eval(b);
    const double m = 0.5 * (a + b);
    const double fm = eval(m);
    return refine(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tolerance, 0);
  }

 private:
  static double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6 * (fa + 4 * fm + fb);
  }

  double eval(double x) {
    if (++evaluations_ > kEvaluationBudget) throw NumericalError("quadrature evaluation budget exhausted");
    return f_(x);
  }

  double refine(double a, double b, double fa, double fm, double fb, double whole, double tolerance, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    // Below a few ulps of the estimate the difference is rounding noise.
    const double floor = 8 * std::numeric_limits<double>::epsilon() * (std::abs(left) + std::abs(right));
    if (std::abs(delta) <= std::max(15 * tolerance, floor)) return left + right + delta / 15;
    if (depth >= kMaxDepth) throw NumericalError("adaptive Simpson did not converge");
    return refine(a, m, fa, flm, fm, left, tolerance / 2, depth + 1) +
           refine(m, b, fm, frm, fb, right, tolerance / 2, depth + 1);
  }

  const std::function<double(double)>& f_;
  std::size_t evaluations_ = 0;
};

// integral of f over [eta, 2pi - eta], split into panels short enough to
// resolve the highest frequency present. By periodicity the right half is
// integrated as f(-u) over u in [eta, pi], which keeps the arguments exact
// near 2pi.
double integrate_interior(const std::function<double(double)>& f, std::int64_t max_frequency) {
  const std::function<double(double)> mirrored = [&](double u) { return f(-u); };
  const std::size_t panels = 8 + 4 * static_cast<std::size_t>(max_frequency);
  const double width = (std::numbers::pi - kEta) / static_cast<double>(panels);
  AdaptiveSimpson left(f);
  AdaptiveSimpson right(mirrored);
  double total = 0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double a = kEta + width * static_cast<double>(p);
    const double b = p + 1 == panels ? std::numbers::pi : a + width;
    total += left.integrate(a, b, kPanelTolerance) + right.integrate(a, b, kPanelTolerance);
  }
  return total;
}

// integral of f over [0, eta] and [2pi - eta, 2pi]; f must be bounded there.
// Both windows are written in terms of the distance from the endpoint.
double integrate_windows(const std::function<double(double)>& f) {
  const GaussRule& rule = gauss_rule();
  double total = 0;
  for (std::size_t k = 0; k < kGaussOrder; ++k) {
    const double d = 0.5 * kEta * (rule.nodes[k] + 1);
    total += 0.5 * kEta * rule.weights[k] * (f(d) + f(-d));
  }
  return total;
}

double cot_half(double x) { return 1 / std::tan(0.5 * x); }

}  // namespace

double numeric_kernel_pairing(std::int64_t s, bool cosine) {
  const double freq = static_cast<double>(s);
  std::function<double(double)> f = [&](double x) {
    return cot_half(x) * (cosine ? std::cos(freq * x) : std::sin(freq * x));
  };
  const std::int64_t reach = s < 0 ? -s : s;
  if (reach > kMaxQuadratureFrequency) throw PreconditionError("frequency above the quadrature limit");
  double total = integrate_interior(f, reach);
  // The cosine integrand has a pole; its principal value keeps only the
  // symmetric interior. The sine integrand is bounded at the endpoints.
  if (!cosine) total += integrate_windows(f);
  return total / kTwoPi;
}

QuadratureResult quadrature_check(Formula formula, std::span<const std::int64_t> beta, std::size_t index,
                                  double tolerance) {
  if (!(tolerance > 0)) throw PreconditionError("tolerance must be positive");
  const mpq_class exact_bare = bare_integral(formula, beta, index);
  const mpq_class prefactor = formula_prefactor(formula, beta.size());

  std::int64_t max_frequency = 0;
  for (std::int64_t b : beta) max_frequency += b;
  if (max_frequency > kMaxQuadratureFrequency) {
    throw PreconditionError("beta entries sum to " + std::to_string(max_frequency) + ", above the quadrature limit " +
                            std::to_string(kMaxQuadratureFrequency));
  }

  std::function<double(double)> f = [&](double x) {
    double product = 1;
    for (std::size_t k = 0; k < beta.size(); ++k) {
      const double arg = static_cast<double>(beta[k]) * x;
      const bool special = k + 1 == index;
      switch (formula) {
        case Formula::kResult: product *= std::sin(arg); break;
        case Formula::kResult1: product *= special ? std::cos(arg) : std::sin(arg); break;
        case Formula::kResult2: product *= special ? std::sin(arg) : std::cos(arg); break;
      }
    }
    return cot_half(x) * product;
  };

  const double integral = (integrate_interior(f, max_frequency) + integrate_windows(f)) / kTwoPi;
  QuadratureResult out;
  out.numeric = prefactor.get_d() * integral;
  out.exact = prefactor * exact_bare;
  out.agree = std::abs(out.numeric - out.exact.get_d()) < tolerance;
  return out;
}

}  // namespace lininv
