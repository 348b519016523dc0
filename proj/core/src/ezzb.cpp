#include "regbounds/ezzb.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "regbounds/quadrature.hpp"
#include "regbounds/special.hpp"

namespace regbounds {

namespace {

constexpr double kPi = std::numbers::pi;

double log_pe_factor(double a, double b) {
  // log of exp(a+b) Phi(sqrt(2b)); a is very negative at high SNR.
  return a + b + log_normal_tail(std::sqrt(2.0 * b));
}

struct SolveSpec {
  int n_p;
  int k;
  // Returns f(snr) whose sign change locates the threshold.
  double (*fn)(const EzzbConstants&, int n_p, double d);
  double d;
};

// Descending scan over [-60, 60] dB, bisect the first sign change.
double solve_threshold(const SolveSpec& spec, const char* what) {
  const double hi_db = 60.0, lo_db = -60.0, scan_step = 0.5;
  const auto eval = [&](double db) {
    EzzbFlatInput in;
    in.n_p = spec.n_p;
    in.k = spec.k;
    in.snr_w = db_to_snr(db);
    in.d = spec.d > 0 ? spec.d : 1.0;
    return spec.fn(ezzb_flat_constants(in), spec.n_p, spec.d);
  };

  double prev_db = hi_db;
  double prev = eval(prev_db);
  double lo = 0.0, hi = 0.0;
  bool found = false;
  for (double db = hi_db - scan_step; db >= lo_db - 1e-9; db -= scan_step) {
    const double v = eval(db);
    if ((prev > 0.0) != (v > 0.0)) {
      lo = db;
      hi = prev_db;
      found = true;
      break;
    }
    prev_db = db;
    prev = v;
  }
  if (!found) {
    std::ostringstream msg;
    msg << what << ": no sign change in [-60, 60] dB; f(-60)=" << eval(lo_db)
        << " f(60)=" << eval(hi_db);
    throw NoTransition(msg.str());
  }
  // Bisection to 0.01 dB.
  double flo = eval(lo);
  while (hi - lo > 0.01) {
    const double mid = 0.5 * (lo + hi);
    const double fm = eval(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return db_to_snr(0.5 * (lo + hi));
}

}  // namespace

double overlap_factor(const DeltaHypothesis& delta, double d) {
  if (!(d > 0.0)) throw InvalidSnr("prior width must be > 0");
  double a = 1.0;
  for (const Shift& s : delta.offsets) {
    a *= std::max(1.0 - std::abs(s.x) / d, 0.0);
    a *= std::max(1.0 - std::abs(s.y) / d, 0.0);
  }
  return a;
}

double pmin(const DeltaHypothesis& delta, const FrequencyGrid& grid,
            const SpectrumModel& model, const NoiseSpectrum& noise, int k) {
  if (static_cast<int>(delta.offsets.size()) != k) {
    throw InvalidSnr("delta must carry K 2D offsets");
  }
  const double n = noise.level;
  const double kp1 = k + 1;
  double a = 0.0, b = 0.0;
  for (const auto& bin : grid.bins) {
    const double s = eval_spectrum(model, bin.wx, bin.wy);
    if (s <= 0.0) continue;
    std::complex<double> sum(1.0, 0.0);
    for (const Shift& off : delta.offsets) {
      const double phase = off.x * bin.wx + off.y * bin.wy;
      sum += std::complex<double>(std::cos(phase), -std::sin(phase));
    }
    const double t = std::norm(sum);
    const double gamma = s * s * (kp1 * kp1 - t) / (4.0 * (n * n + kp1 * n * s));
    const double w = 0.5 * bin.weight;  // conjugate pairs counted once
    a -= w * std::log1p(gamma);
    b += w * gamma / (1.0 + gamma);
  }
  return 0.5 * std::exp(log_pe_factor(a, b));
}

EzzbConstants ezzb_flat_constants(const EzzbFlatInput& input) {
  input.validate();
  const double snr = input.snr_w;
  const double kp1 = input.k + 1;
  const double pi2 = kPi * kPi;
  const double pi4 = pi2 * pi2;

  EzzbConstants c;
  c.kappa1 = 9.0 * snr * snr * kp1 / (8.0 * pi4 + 12.0 * pi2 * snr * kp1);
  c.kappa2 = 9.0 * snr * snr * input.k / (4.0 * pi4 + 6.0 * pi2 * snr * kp1);
  const double root = std::sqrt(c.kappa2 + 1.0);
  c.a = -input.n_p * std::log(0.5 * (root + 1.0));
  c.b = 0.5 * input.n_p * (root - 1.0) / root;
  c.c2 = input.n_p * pi2 * c.kappa1 / 12.0;
  return c;
}

std::pair<double, double> ezzb_terms(const EzzbFlatInput& input) {
  const EzzbConstants c = ezzb_flat_constants(input);
  const double h_max = std::sqrt(2.0 * c.b);
  // Phi(h) underflows past ~38.6; the tail is exactly zero in doubles.
  const double h_cap = std::min(h_max, 42.0);
  const double decay = 9.0 / (20.0 * input.n_p);
  const auto f = [decay](double h) {
    return h * std::exp(-decay * h * h * h * h) * normal_tail(h);
  };
  // Coarse pass fixes the tolerance scale; the bulk of the integrand can sit
  // in a narrow slice of [0, h_cap] at high SNR.
  const double coarse = integrate_simpson_fixed(f, 0.0, h_cap, 256);
  const double integral =
      integrate_adaptive(f, 0.0, h_cap, 1e-8, std::max(coarse, 1e-300));
  const double term1 = c.c2 > 0.0 ? integral / c.c2 : 0.0;
  const double term2 =
      input.d * input.d / 6.0 * std::exp(log_pe_factor(c.a, c.b));
  return {term1, term2};
}

double ezzb_flat(const EzzbFlatInput& input) {
  const auto [t1, t2] = ezzb_terms(input);
  return t1 + t2;
}

double snr2(int n_p, int k, double d) {
  SolveSpec spec;
  spec.n_p = n_p;
  spec.k = k;
  spec.d = d;
  spec.fn = [](const EzzbConstants& c, int, double dd) {
    return -std::log(4.0 * c.c2) -
           (std::log(dd * dd / 6.0) + log_pe_factor(c.a, c.b));
  };
  return solve_threshold(spec, "snr2");
}

double snr3(int n_p, int k) {
  SolveSpec spec;
  spec.n_p = n_p;
  spec.k = k;
  spec.d = -1.0;
  spec.fn = [](const EzzbConstants& c, int, double) {
    return log_pe_factor(c.a, c.b) - std::log(0.25);
  };
  return solve_threshold(spec, "snr3");
}

}  // namespace regbounds
