#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "gentrig/errors.hpp"
#include "gentrig/params.hpp"
#include "gentrig/quad.hpp"

using namespace gentrig;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("integrate_singular on flat and singular integrands") {
  const QuadResult flat =
      integrate_singular([](double) { return 1.0; }, 0.0, 1.0, 1e-12);
  CHECK(std::fabs(flat.value - 1.0) <= 1e-12);
  CHECK(flat.err_est <= 1e-12);

  // 1 - t^2 = to_b * (2 - to_b) keeps the singular factor exact at the
  // endpoint.
  const QuadResult arcsin = integrate_singular(
      [](double, double, double to_b) {
        return 1.0 / std::sqrt(to_b * (2.0 - to_b));
      },
      0.0, 1.0, 1e-12);
  CHECK(std::fabs(arcsin.value - kPi / 2.0) <= 1e-12);

  // (1/3) B(1/3, 1/2) through the log_beta oracle; 1 - t^3 = to_b*(1+t+t^2).
  const double expected = std::exp(log_beta(1.0 / 3.0, 0.5)) / 3.0;
  const QuadResult cubic = integrate_singular(
      [](double t, double, double to_b) {
        return 1.0 / std::sqrt(to_b * (1.0 + t + t * t));
      },
      0.0, 1.0, 1e-12);
  CHECK(std::fabs(cubic.value - expected) <= 1e-11);
  CHECK(std::fabs(cubic.value - 1.402182) <= 5e-7);
}

TEST_CASE("plain integrands resolve endpoint singularities to ~sqrt(eps)") {
  const QuadResult arcsin = integrate_singular(
      [](double t) { return 1.0 / std::sqrt(1.0 - t * t); }, 0.0, 1.0, 1e-7);
  CHECK(std::fabs(arcsin.value - kPi / 2.0) <= 1e-6);
}

TEST_CASE("integrate_singular argument checking and failure paths") {
  CHECK_THROWS_AS(
      integrate_singular([](double) { return 1.0; }, 1.0, 0.0, 1e-12),
      DomainError);
  CHECK_THROWS_AS(
      integrate_singular([](double) { return 1.0; }, 0.0, 1.0, -1e-12),
      DomainError);
  // Non-integrable endpoint singularity: refinement never settles.
  CHECK_THROWS_AS(integrate_singular(
                      [](double t) { return std::pow(1.0 - t, -1.5); }, 0.0,
                      1.0, 1e-12),
                  ConvergenceError);
}

TEST_CASE("integral_F closed forms") {
  const ParamPair classical(2.0, 2.0);
  CHECK(std::fabs(integral_F(classical, 0.5).value - std::asin(0.5)) <= 1e-13);
  CHECK(integral_F(classical, 0.0).value == 0.0);

  const ParamPair tanh_like(1.0, 2.0);
  CHECK(std::fabs(integral_F(tanh_like, 0.5).value - std::atanh(0.5)) <=
        1e-13);

  CHECK_THROWS_AS(integral_F(classical, -0.1), DomainError);
  CHECK_THROWS_AS(integral_F(classical, 1.0), DomainError);
}

TEST_CASE("integral_F near-singular branch stays accurate") {
  const ParamPair classical(2.0, 2.0);
  for (double y : {1.0 - 1e-9, 1.0 - 1e-12}) {
    CHECK(std::fabs(integral_F(classical, y).value - std::asin(y)) <= 1e-11);
  }
  const ParamPair quartic(4.0, 4.0);
  const double hp = half_period(quartic).value();
  const double near = integral_F(quartic, 1.0 - 1e-10).value;
  CHECK(near < hp);
  CHECK(hp - near < 1e-6);
}

TEST_CASE("integral_G closed forms and the large-argument split") {
  const ParamPair arctan_like(1.0, 2.0);
  CHECK(std::fabs(integral_G(arctan_like, 1.0).value - kPi / 4.0) <= 1e-13);

  const ParamPair classical(2.0, 2.0);
  CHECK(std::fabs(integral_G(classical, 1.0).value - std::asinh(1.0)) <=
        1e-13);
  CHECK(integral_G(classical, 0.0).value == 0.0);
  CHECK(std::fabs(integral_G(classical, 50.0).value - std::asinh(50.0)) <=
        1e-12);
  CHECK(std::fabs(integral_G(classical, 1e8).value - std::asinh(1e8)) <=
        1e-11);

  CHECK_THROWS_AS(integral_G(classical, -1.0), DomainError);
  CHECK_THROWS_AS(
      integral_G(classical, std::numeric_limits<double>::infinity()),
      DomainError);
}

TEST_CASE("additivity of the defining integral") {
  const std::vector<ParamPair> pairs = {
      ParamPair(2.0, 2.0), ParamPair(1.5, 3.0), ParamPair(0.9, 2.0),
      ParamPair(5.0, 0.5)};
  for (const ParamPair& pair : pairs) {
    const double p = pair.p();
    const double q = pair.q();
    auto f = [p, q](double t) {
      return std::pow(-std::expm1(q * std::log(t)), -1.0 / p);
    };
    for (auto [y1, y2] : {std::pair{0.1, 0.6}, std::pair{0.3, 0.95}}) {
      const double whole = integral_F(pair, y2).value;
      const double part = integral_F(pair, y1).value;
      const double middle = integrate_singular(f, y1, y2, 1e-13).value;
      CHECK(std::fabs(whole - part - middle) <= 2e-13 * (1.0 + whole));
    }
  }
}

TEST_CASE("integral_F approaches the half period for steep exponents") {
  for (const ParamPair& pair :
       {ParamPair(3.0, 2.0), ParamPair(5.0, 3.0), ParamPair(3.0, 0.5)}) {
    const double hp = half_period(pair).value();
    CHECK(std::fabs(integral_F(pair, 1.0 - 1e-12).value - hp) <= 1e-6);
  }
}

TEST_CASE("integral_G approaches the dual half period") {
  // Pairs with q/p >= 2 so the tail beyond 1e8 is under the tolerance.
  for (const ParamPair& pair :
       {ParamPair(1.0, 2.0), ParamPair(2.0, 4.0), ParamPair(1.2, 3.0)}) {
    const ParamPair dual(dual_index(pair), pair.q());
    const double hp = half_period(dual).value();
    CHECK(std::fabs(integral_G(pair, 1e8).value - hp) <= 1e-6);
  }
}

TEST_CASE("integral_G stays below the dual half period") {
  for (const ParamPair& pair :
       {ParamPair(1.0, 2.0), ParamPair(2.0, 3.0), ParamPair(1.5, 3.0)}) {
    const ParamPair dual(dual_index(pair), pair.q());
    const double hp = half_period(dual).value();
    for (double y : {0.5, 2.0, 50.0, 1e6}) {
      CHECK(integral_G(pair, y).value < hp);
    }
  }
}

TEST_CASE("integral values increase with y") {
  const ParamPair pair(1.5, 2.5);
  double prev_f = -1.0, prev_g = -1.0;
  for (double y : {0.0, 0.2, 0.5, 0.8, 0.95, 0.999}) {
    const double f = integral_F(pair, y).value;
    CHECK(f > prev_f);
    prev_f = f;
  }
  for (double y : {0.0, 0.5, 1.0, 3.0, 10.0}) {
    const double g = integral_G(pair, y).value;
    CHECK(g > prev_g);
    prev_g = g;
  }
}

TEST_CASE("err_est respects the requested tolerance") {
  for (double tol : {1e-8, 1e-11, 1e-13}) {
    const QuadResult r = integral_F(ParamPair(2.0, 3.0), 0.9, tol);
    CHECK(r.err_est <= std::max(tol, tol * std::fabs(r.value)));
  }
}
