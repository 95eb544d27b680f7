#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentrig/params.hpp"

namespace gentrig {

enum class Family { trig, hyp };

struct Margin {
  double value;
  double err_est;
};

// Two-sided Mitrinovic-Adamovic margins.  trig: lower = sin/x - cos^(1/(q+1)),
// upper = 1 - sin/x.  hyp: lower = sinh/x - cosh^(1/(q+1)),
// upper = cosh^(p/q) - sinh/x.  Both must be positive on the open branch.
struct MaMargins {
  Margin lower, upper;
};
MaMargins ma_margin(const ParamPair& pair, double x, Family family);

// Wilker margin (sin/x)^p + (tam/x)^r - 2, hyperbolic twin with sinh/tamh.
Margin wilker_margin(const ParamPair& pair, double x, Family family);

// Huygens margin p*sin/x + r*tam/x - (p+r), hyperbolic twin likewise.
Margin huygens_margin(const ParamPair& pair, double x, Family family);

// Relaxed Cusa-Huygens margin ((p + r*cos^p)/(p+r))^(1/q) - sin/x, and the
// hyperbolic twin with cosh.
Margin cusa_margin(const ParamPair& pair, double x, Family family);

// Residuals of the four multiple-angle formulas tying the (2q/(2+q), q/2)
// functions at 2^(2/q)x to the (2q/(2+q), q) and (2, q) functions at x.
struct MultiAngleResiduals {
  double sin_res, cos_res, sinh_res, cosh_res;
  double err_est;
};
MultiAngleResiduals multiple_angle_residuals(double q, double x);

// |sin_{6/5,3}(2x) - formula(cos_{6/5,3} x)| on [0, pi_{6/5,3}/4).
Margin double_angle_653_residual(double x);

// The three building blocks of the (6/5, 3/2) double-angle composition.
double theta(double v);
double phi(double v);
double psi(double v);

// |sin_{6/5,3/2}(2x) - (theta . phi . psi)(cos_{6/5,3/2} x)| on
// [0, pi_{6/5,3/2}/4).
Margin double_angle_6532_residual(double x);

// |asinh_{2,q}(y) - 2^(-2/q) * asin_{2q/(2+q),q/2}(z(y))|, an integral-level
// identity that needs no inversion at all.
Margin intermediate_41_residual(double q, double y);

struct GridSpec {
  std::vector<double> p_values;
  std::vector<double> q_values;
  int n_x = 33;
  double domain_clip = 0.02;        // fraction clipped at each end
  bool add_near_boundary_p = false; // adds p = q/(q+1) + 0.05 per q
};

GridSpec default_grid();

struct MarginSample {
  double x;
  double margin;
  double err_est;
};

struct MarginReport {
  std::string suite;  // variant name, e.g. "wilker-trig"
  double p, q, r;
  Family family;
  std::vector<MarginSample> samples;
  double min_margin;      // min sample margin
  double max_abs_margin;  // max |sample margin|
  std::optional<double> threshold;  // set for identity suites
  bool passed;  // strict: min(margin - err) > 0; identity: max|.| <= threshold
};

// Base suite names accepted by sweep (and the CLI): pythagorean, duality,
// ma, wilker, huygens, cusa, multiangle, doubleangle, ode, all.
std::vector<std::string> suite_names();

std::vector<MarginReport> sweep(const std::string& suite, const GridSpec& grid);

}  // namespace gentrig
