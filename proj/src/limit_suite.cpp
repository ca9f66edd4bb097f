// Copyright 2026 The ndpo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Each entry transcribes one special-case formula on its own and compares
// it with the general closed forms over a parameter family.

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ndpo/cross_validation.hpp"

namespace ndpo::validation {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

class Tracker {
 public:
  explicit Tracker(double tolerance) : tolerance_(tolerance) {}

  /// Relative deviation |got - want| / max(1, |want|).
  void compare(double got, double want, const std::string& where) {
    const double dev = std::abs(got - want) / std::max(1.0, std::abs(want));
    record(std::isfinite(dev) ? dev : std::numeric_limits<double>::infinity(), where);
  }
  /// A condition that must hold; a violation counts as deviation 1.
  void require(bool ok, const std::string& where) { record(ok ? 0.0 : 1.0, where); }

  Check finish(const std::string& tag, const std::string& description) const {
    Check c;
    c.tag = tag;
    c.description = description;
    c.tolerance = tolerance_;
    c.deviation = worst_;
    c.worst_input = where_;
    c.passed = count_ > 0 && worst_ <= tolerance_;
    if (count_ == 0) c.worst_input = "no parameter point in the family applies";
    return c;
  }

 private:
  void record(double dev, const std::string& where) {
    if (count_ == 0 || dev > worst_) {
      worst_ = dev;
      where_ = where;
    }
    ++count_;
  }

  double tolerance_;
  double worst_ = 0.0;
  std::string where_;
  std::size_t count_ = 0;
};

std::string at(double gamma, double k, double r, double t = -1.0) {
  std::ostringstream os;
  os.precision(12);
  os << "gamma=" << gamma << " kappa_gamma0=" << k << " r=" << r;
  if (t >= 0.0) os << " t=" << t;
  return os.str();
}

std::string at_amp(const std::string& base, Complex alpha, Complex beta) {
  std::ostringstream os;
  os << base << " alpha=" << alpha << " beta=" << beta;
  return os.str();
}

// Width coefficients as printed: [l (e^{l5 t} - 1) + l5] / (l5 e^{l5 t}) and
// [l (e^{-l6 t} - 1) + l6] / (l6 e^{-l6 t}).
double printed_width_x(double l, double l5, double t) {
  return (l * (std::exp(l5 * t) - 1.0) + l5) / (l5 * std::exp(l5 * t));
}
double printed_width_u(double l, double l6, double t) {
  return (l * (std::exp(-l6 * t) - 1.0) + l6) / (l6 * std::exp(-l6 * t));
}

struct Entry {
  std::string tag;
  std::string description;
  std::function<void(const LimitFamily&, Tracker&)> run;
};

std::vector<double> pumps(const LimitFamily& f) {
  std::vector<double> out;
  for (double q : f.pump_ratios) out.push_back(0.5 * q * f.gamma);
  return out;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {"q-vacuum-bath",
       "ordinary-vacuum reservoirs: two-mode Q in terms of a1, a3",
       [](const LimitFamily& f, Tracker& tr) {
         const auto grid = default_amplitude_grid();
         for (double k : pumps(f)) {
           const auto p = ModelParams::symmetric(f.gamma, k, 0.0);
           const LambdaCoeffs l = lambda_coeffs(p);
           for (double t : f.times) {
             const double a1 = printed_width_x(l.l1, l.l5, t);
             const double a3 = printed_width_u(l.l3, l.l6, t);
             const auto c = q_coefficients(gaussian_widths(p, t));
             for (const auto& al : grid) {
               for (const auto& be : grid) {
                 const double want =
                     1.0 / (kPi * kPi * a1 * a3) *
                     std::exp(-0.5 * (a1 + a3) / (a1 * a3) * (std::norm(al) + std::norm(be)) +
                              0.5 * (a1 - a3) / (a1 * a3) * 2.0 * (al * be).real());
                 tr.compare(q_two_mode(c, al, be), want, at_amp(at(f.gamma, k, 0.0, t), al, be));
               }
             }
           }
         }
       }},
      {"q-amplifier",
       "no damping: two-mode Q = sech^2(kt)/pi^2 exp[-|a|^2-|b|^2 - tanh(kt)(ab + cc)]",
       [](const LimitFamily& f, Tracker& tr) {
         const auto grid = default_amplitude_grid();
         for (double k : {0.1, 0.3, 0.5}) {
           const auto p = ModelParams::symmetric(0.0, k, 0.0);
           for (double t : f.times) {
             const double s = 1.0 / std::cosh(k * t);
             const auto c = q_coefficients(gaussian_widths(p, t));
             for (const auto& al : grid) {
               for (const auto& be : grid) {
                 const double want =
                     s * s / (kPi * kPi) *
                     std::exp(-std::norm(al) - std::norm(be) -
                              std::tanh(k * t) * 2.0 * (al * be).real());
                 tr.compare(q_two_mode(c, al, be), want, at_amp(at(0.0, k, 0.0, t), al, be));
               }
             }
           }
         }
       }},
      {"q-vacuum-bath-single-mode",
       "ordinary-vacuum reservoir: single-mode Q = 2/(pi(a1+a3)) exp[-2|a|^2/(a1+a3)]",
       [](const LimitFamily& f, Tracker& tr) {
         const auto grid = default_amplitude_grid();
         for (double k : pumps(f)) {
           const auto p = ModelParams::symmetric(f.gamma, k, 0.0);
           const LambdaCoeffs l = lambda_coeffs(p);
           for (double t : f.times) {
             const double s = printed_width_x(l.l1, l.l5, t) + printed_width_u(l.l3, l.l6, t);
             const auto q = q_single_mode(q_coefficients(gaussian_widths(p, t)));
             for (const auto& al : grid) {
               const double want = 2.0 / (kPi * s) * std::exp(-2.0 / s * std::norm(al));
               tr.compare(q_single_mode_density(q, al), want,
                          at_amp(at(f.gamma, k, 0.0, t), al, 0.0));
             }
           }
         }
       }},
      {"q-amplifier-single-mode",
       "no damping: single-mode Q = sech^2(kt)/pi exp[-sech^2(kt)|a|^2]",
       [](const LimitFamily& f, Tracker& tr) {
         const auto grid = default_amplitude_grid();
         for (double k : {0.1, 0.3, 0.5}) {
           const auto p = ModelParams::symmetric(0.0, k, 0.0);
           for (double t : f.times) {
             const double s2 = std::pow(1.0 / std::cosh(k * t), 2);
             const auto q = q_single_mode(q_coefficients(gaussian_widths(p, t)));
             for (const auto& al : grid) {
               tr.compare(q_single_mode_density(q, al),
                          s2 / kPi * std::exp(-s2 * std::norm(al)),
                          at_amp(at(0.0, k, 0.0, t), al, 0.0));
             }
           }
         }
       }},
      {"single-mode-steady-lambda",
       "steady single-mode variances: l_{1,2}/l5 + l_{3,4}/l6 - 1 = (2(N -+ M) + 1)/(1 - (2k/g)^2)",
       [](const LimitFamily& f, Tracker& tr) {
         for (double k : pumps(f)) {
           for (double r : f.r_values) {
             const auto p = ModelParams::symmetric(f.gamma, k, r);
             const auto [n, m] = reservoir_stats(r);
             const LambdaCoeffs l = lambda_coeffs(p);
             const double q = 2.0 * k / f.gamma;
             const auto v = variance_single_mode(p, kSteadyState);
             const double w1 = (2.0 * (n - m) + 1.0) / (1.0 - q * q);
             const double w2 = (2.0 * (n + m) + 1.0) / (1.0 - q * q);
             tr.compare(v.v1.value(), w1, at(f.gamma, k, r) + " v1");
             tr.compare(v.v2.value(), w2, at(f.gamma, k, r) + " v2");
             tr.compare(l.l1 / l.l5 + l.l3 / l.l6 - 1.0, w1, at(f.gamma, k, r) + " lambda v1");
             tr.compare(l.l2 / l.l5 + l.l4 / l.l6 - 1.0, w2, at(f.gamma, k, r) + " lambda v2");
           }
         }
       }},
      {"single-mode-steady-squeezed-bath",
       "steady single-mode variances e^{-+2r}/(1 - (2k/g)^2) from the stationary widths",
       [](const LimitFamily& f, Tracker& tr) {
         for (double k : pumps(f)) {
           for (double r : f.r_values) {
             const auto p = ModelParams::symmetric(f.gamma, k, r);
             const auto w = gaussian_widths(p, kSteadyState);
             const double q = 2.0 * k / f.gamma;
             tr.compare(w.a1 + w.a3 - 1.0, std::exp(-2.0 * r) / (1.0 - q * q),
                        at(f.gamma, k, r) + " v1");
             tr.compare(w.a2 + w.a4 - 1.0, std::exp(2.0 * r) / (1.0 - q * q),
                        at(f.gamma, k, r) + " v2");
           }
         }
       }},
      {"single-mode-squeezing-onset",
       "steady single-mode v1 = 1 at r* = -ln[1 - (2k/g)^2]/2, below 1 above it",
       [](const LimitFamily& f, Tracker& tr) {
         for (double k : pumps(f)) {
           if (k == 0.0) continue;
           const auto p = ModelParams::symmetric(f.gamma, k, 0.0);
           const double q = 2.0 * k / f.gamma;
           const double r_star = squeezing_onset_r(p);
           tr.compare(r_star, -0.5 * std::log(1.0 - q * q), at(f.gamma, k, 0.0) + " r*");
           const auto w = gaussian_widths(p.with_r(r_star), kSteadyState);
           tr.compare(w.a1 + w.a3 - 1.0, 1.0, at(f.gamma, k, r_star) + " v1(r*)");
           const auto above = variance_single_mode(p.with_r(r_star + 0.01), kSteadyState);
           const auto below = variance_single_mode(p.with_r(0.99 * r_star), kSteadyState);
           tr.require(above.v1.value() < 1.0 && below.v1.value() > 1.0,
                      at(f.gamma, k, r_star) + " sign change");
           tr.require(above.v2.value() > 1.0, at(f.gamma, k, r_star) + " v2 > 1");
         }
       }},
      {"single-mode-bath-only-steady",
       "no pump: steady single-mode variances e^{-+2r}",
       [](const LimitFamily& f, Tracker& tr) {
         for (double r : f.r_values) {
           const auto p = ModelParams::symmetric(f.gamma, 0.0, r);
           const auto w = gaussian_widths(p, kSteadyState);
           tr.compare(w.a1 + w.a3 - 1.0, std::exp(-2.0 * r), at(f.gamma, 0.0, r) + " v1");
           tr.compare(w.a2 + w.a4 - 1.0, std::exp(2.0 * r), at(f.gamma, 0.0, r) + " v2");
         }
       }},
      {"single-mode-amplifier",
       "no damping: single-mode variances 2 sinh^2(kt) + 1",
       [](const LimitFamily& f, Tracker& tr) {
         for (double k : {0.1, 0.3, 0.5}) {
           const auto p = ModelParams::symmetric(0.0, k, 0.0);
           for (double t : f.times) {
             const double want = 2.0 * std::pow(std::sinh(k * t), 2) + 1.0;
             const auto v = variance_single_mode(p, t);
             tr.compare(v.v1.value(), want, at(0.0, k, 0.0, t) + " v1");
             tr.compare(v.v2.value(), want, at(0.0, k, 0.0, t) + " v2");
           }
         }
       }},
      {"single-mode-bath-only-dynamics",
       "no pump: single-mode variances 1 - (1 - e^{-gt})(1 - e^{-+2r})",
       [](const LimitFamily& f, Tracker& tr) {
         for (double r : f.r_values) {
           const auto p = ModelParams::symmetric(f.gamma, 0.0, r);
           for (double t : f.times) {
             const double decay = 1.0 - std::exp(-f.gamma * t);
             const auto v = variance_single_mode(p, t);
             tr.compare(v.v1.value(), 1.0 - decay * (1.0 - std::exp(-2.0 * r)),
                        at(f.gamma, 0.0, r, t) + " v1");
             tr.compare(v.v2.value(), 1.0 - decay * (1.0 - std::exp(2.0 * r)),
                        at(f.gamma, 0.0, r, t) + " v2");
           }
         }
       }},
      {"two-mode-dynamics",
       "two-mode variances 1 - [1 - e^{-(g +- 2k)t}][1 - g e^{-+2r}/(g +- 2k)]",
       [](const LimitFamily& f, Tracker& tr) {
         for (double k : pumps(f)) {
           for (double r : f.r_values) {
             const auto p = ModelParams::symmetric(f.gamma, k, r);
             for (double t : f.times) {
               const double g = f.gamma;
               const double w1 = 1.0 - (1.0 - std::exp(-(g + 2 * k) * t)) *
                                           (1.0 - g * std::exp(-2 * r) / (g + 2 * k));
               const double w2 = 1.0 - (1.0 - std::exp(-(g - 2 * k) * t)) *
                                           (1.0 - g * std::exp(2 * r) / (g - 2 * k));
               const auto v = variance_two_mode(p, t);
               tr.compare(v.v1.value(), w1, at(g, k, r, t) + " v1");
               tr.compare(v.v2.value(), w2, at(g, k, r, t) + " v2");
               const auto wd = gaussian_widths(p, t);
               tr.compare(2.0 * wd.a1 - 1.0, w1, at(g, k, r, t) + " 2a1-1");
               tr.compare(2.0 * wd.a4 - 1.0, w2, at(g, k, r, t) + " 2a4-1");
             }
           }
         }
       }},
      {"two-mode-steady",
       "steady two-mode variances g e^{-+2r}/(g +- 2k) from the stationary widths",
       [](const LimitFamily& f, Tracker& tr) {
         for (double k : pumps(f)) {
           for (double r : f.r_values) {
             const double g = f.gamma;
             const auto p = ModelParams::symmetric(g, k, r);
             const auto w = gaussian_widths(p, kSteadyState);
             tr.compare(2.0 * w.a1 - 1.0, g / (g + 2 * k) * std::exp(-2 * r), at(g, k, r) + " v1");
             tr.compare(2.0 * w.a4 - 1.0, g / (g - 2 * k) * std::exp(2 * r), at(g, k, r) + " v2");
           }
         }
       }},
      {"two-mode-threshold",
       "threshold: steady two-mode v1 = e^{-2r}/2 and v2 divergent",
       [](const LimitFamily& f, Tracker& tr) {
         const double k = 0.5 * f.gamma;
         for (double r : f.r_values) {
           const auto p = ModelParams::symmetric(f.gamma, k, r);
           const auto v = variance_two_mode(p, kSteadyState);
           tr.compare(v.v1.value(), 0.5 * std::exp(-2.0 * r), at(f.gamma, k, r) + " v1");
           tr.require(v.v2.is_divergent(), at(f.gamma, k, r) + " v2 divergent");
           // The time-dependent form approaches the same limit.
           const auto late = variance_two_mode(p, 40.0 / f.gamma);
           tr.compare(late.v1.value(), 0.5 * std::exp(-2.0 * r), at(f.gamma, k, r, 40.0) + " v1");
         }
       }},
      {"two-mode-vacuum-bath-dynamics",
       "ordinary vacuum: two-mode variances (g +- 2k e^{-(g +- 2k)t})/(g +- 2k)",
       [](const LimitFamily& f, Tracker& tr) {
         for (double k : pumps(f)) {
           const double g = f.gamma;
           const auto p = ModelParams::symmetric(g, k, 0.0);
           for (double t : f.times) {
             const auto v = variance_two_mode(p, t);
             tr.compare(v.v1.value(), (g + 2 * k * std::exp(-(g + 2 * k) * t)) / (g + 2 * k),
                        at(g, k, 0.0, t) + " v1");
             tr.compare(v.v2.value(), (g - 2 * k * std::exp(-(g - 2 * k) * t)) / (g - 2 * k),
                        at(g, k, 0.0, t) + " v2");
           }
         }
       }},
      {"two-mode-threshold-vacuum-bath",
       "threshold with ordinary vacuum: steady v1 = 1/2 (50% noise reduction), v2 divergent",
       [](const LimitFamily& f, Tracker& tr) {
         const double k = 0.5 * f.gamma;
         const auto p = ModelParams::symmetric(f.gamma, k, 0.0);
         const auto v = variance_two_mode(p, kSteadyState);
         tr.compare(v.v1.value(), 0.5, at(f.gamma, k, 0.0) + " v1");
         tr.compare(squeezing_percent(v.v1.value()), 50.0, at(f.gamma, k, 0.0) + " percent");
         tr.require(v.v2.is_divergent(), at(f.gamma, k, 0.0) + " v2 divergent");
       }},
      {"two-mode-amplifier",
       "no damping: two-mode variances e^{-+2kt}",
       [](const LimitFamily& f, Tracker& tr) {
         for (double k : {0.1, 0.3, 0.5}) {
           const auto p = ModelParams::symmetric(0.0, k, 0.0);
           for (double t : f.times) {
             const auto v = variance_two_mode(p, t);
             tr.compare(v.v1.value(), std::exp(-2 * k * t), at(0.0, k, 0.0, t) + " v1");
             tr.compare(v.v2.value(), std::exp(2 * k * t), at(0.0, k, 0.0, t) + " v2");
           }
         }
       }},
      {"two-mode-bath-only-dynamics",
       "no pump: two-mode variances 1 - (1 - e^{-gt})(1 - e^{-+2r})",
       [](const LimitFamily& f, Tracker& tr) {
         for (double r : f.r_values) {
           const auto p = ModelParams::symmetric(f.gamma, 0.0, r);
           for (double t : f.times) {
             const double decay = 1.0 - std::exp(-f.gamma * t);
             const auto v = variance_two_mode(p, t);
             tr.compare(v.v1.value(), 1.0 - decay * (1.0 - std::exp(-2.0 * r)),
                        at(f.gamma, 0.0, r, t) + " v1");
             tr.compare(v.v2.value(), 1.0 - decay * (1.0 - std::exp(2.0 * r)),
                        at(f.gamma, 0.0, r, t) + " v2");
           }
         }
       }},
      {"two-mode-bath-only-steady",
       "no pump: steady two-mode variances e^{-+2r}",
       [](const LimitFamily& f, Tracker& tr) {
         for (double r : f.r_values) {
           const auto p = ModelParams::symmetric(f.gamma, 0.0, r);
           const auto v = variance_two_mode(p, kSteadyState);
           tr.compare(v.v1.value(), std::exp(-2.0 * r), at(f.gamma, 0.0, r) + " v1");
           tr.compare(v.v2.value(), std::exp(2.0 * r), at(f.gamma, 0.0, r) + " v2");
         }
       }},
      {"bath-only-single-vs-two-mode",
       "no pump: steady single-mode and two-mode variances coincide",
       [](const LimitFamily& f, Tracker& tr) {
         for (double r : f.r_values) {
           const auto p = ModelParams::symmetric(f.gamma, 0.0, r);
           const auto s = variance_single_mode(p, kSteadyState);
           const auto m = variance_two_mode(p, kSteadyState);
           tr.compare(s.v1.value(), m.v1.value(), at(f.gamma, 0.0, r) + " v1");
           tr.compare(s.v2.value(), m.v2.value(), at(f.gamma, 0.0, r) + " v2");
         }
       }},
  };
  return list;
}

}  // namespace

const std::vector<std::string>& limit_tags() {
  static const std::vector<std::string> tags = [] {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.tag);
    return out;
  }();
  return tags;
}

ValidationReport limit_suite(const LimitFamily& family) {
  const auto t0 = std::chrono::steady_clock::now();
  if (family.only) {
    bool known = false;
    for (const auto& e : entries()) known = known || e.tag == *family.only;
    if (!known) throw std::invalid_argument("unknown limit-suite tag: " + *family.only);
  }
  for (double q : family.pump_ratios) {
    if (!(q >= 0.0 && q < 1.0)) {
      throw std::invalid_argument("limit-suite pump ratios must lie in [0, 1)");
    }
  }
  ValidationReport rep;
  for (const auto& e : entries()) {
    if (family.only && e.tag != *family.only) continue;
    Tracker tr(family.tolerance);
    try {
      e.run(family, tr);
      rep.checks.push_back(tr.finish(e.tag, e.description));
    } catch (const std::exception& ex) {
      Check c = tr.finish(e.tag, e.description);
      c.passed = false;
      c.worst_input = std::string("error: ") + ex.what();
      rep.checks.push_back(c);
    }
  }
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

ValidationReport property_suite(const std::vector<ModelParams>& points,
                                const std::vector<double>& times) {
  const auto t0 = std::chrono::steady_clock::now();
  constexpr double tol = 1e-12;
  Tracker lam(tol), res(tol), vac(tol), unc(tol), init(tol);
  for (const auto& p : points) {
    const double g = p.gamma();
    const double k = p.kappa_gamma0();
    const std::string where = at(g, k, p.r());

    const LambdaCoeffs l = lambda_coeffs(p);
    lam.compare(l.l1 + l.l3, 2.0 * k, where + " l1+l3");
    lam.compare(l.l2 + l.l4, 2.0 * k, where + " l2+l4");
    lam.compare(l.l5, 2.0 * k + g, where + " l5");
    lam.compare(l.l6, 2.0 * k - g, where + " l6");
    lam.require(l.l2 >= l.l1 && l.l4 <= l.l3, where + " ordering");

    const auto [n, m] = reservoir_stats(p.r());
    res.compare(m * m, n * (n + 1.0), where + " m^2 = n(n+1)");

    const auto w0 = gaussian_widths(p, 0.0);
    for (double a : {w0.a1, w0.a2, w0.a3, w0.a4}) vac.compare(a, 1.0, where + " widths");
    const auto c0 = q_coefficients(w0);
    vac.compare(c0.d, 1.0, where + " d");
    vac.compare(c0.b1, 1.0, where + " b1");
    for (double b : {c0.b2, c0.b3, c0.b4}) vac.compare(b, 0.0, where + " b2..b4");
    const auto s0 = q_single_mode(c0);
    vac.compare(s0.y, 1.0, where + " y");
    vac.compare(s0.a, 1.0, where + " a");
    vac.compare(s0.a_cap, 0.0, where + " A");
    vac.compare(q_normalization(c0), 1.0, where + " normalization");

    for (const auto& v : {variance_two_mode(p, 0.0), variance_single_mode(p, 0.0)}) {
      init.compare(v.v1.value(), 1.0, where + " v1(0)");
      init.compare(v.v2.value(), 1.0, where + " v2(0)");
    }
    for (double t : times) {
      for (const auto& v : {variance_two_mode(p, t), variance_single_mode(p, t)}) {
        unc.compare(std::max(1.0, v.v1.value() * v.v2.value()), v.v1.value() * v.v2.value(),
                    where + " t=" + std::to_string(t));
      }
    }
    if (classify_regime(p).tag == RegimeTag::BelowThreshold && g > 0.0) {
      for (const auto& v : {variance_two_mode(p, kSteadyState),
                            variance_single_mode(p, kSteadyState)}) {
        unc.compare(std::max(1.0, v.v1.value() * v.v2.value()), v.v1.value() * v.v2.value(),
                    where + " steady");
      }
    }
  }
  ValidationReport rep;
  rep.checks.push_back(lam.finish("lambda-identities",
                                  "l1+l3 = l2+l4 = 2k, l5 = 2k+g, l6 = 2k-g, l2 >= l1, l4 <= l3"));
  rep.checks.push_back(res.finish("reservoir-identity", "M^2 = N(N+1)"));
  rep.checks.push_back(vac.finish("q-vacuum-reduction",
                                  "t = 0 widths and Q coefficients reduce to the vacuum"));
  rep.checks.push_back(init.finish("initial-vacuum-analytic", "closed-form v1 = v2 = 1 at t = 0"));
  rep.checks.push_back(unc.finish("uncertainty-product", "closed-form v1 v2 >= 1"));
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace ndpo::validation
