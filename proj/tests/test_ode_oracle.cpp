#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "gentrig/errors.hpp"
#include "gentrig/ghf.hpp"
#include "gentrig/gtf.hpp"
#include "gentrig/ode_oracle.hpp"

using namespace gentrig;

TEST_CASE("classical initial value problems") {
  const Trajectory trig =
      integrate_ivp(ParamPair(2, 2), 1.5, 1e-10, IvpKind::trigonometric);
  CHECK(std::fabs(trig.us.back() - std::sin(1.5)) <= 1e-8);

  const Trajectory hyp =
      integrate_ivp(ParamPair(2, 2), 1.0, 1e-10, IvpKind::hyperbolic);
  CHECK(std::fabs(hyp.us.back() - std::sinh(1.0)) <= 1e-8);
}

TEST_CASE("oracle agrees with the inversion path at (3,3)") {
  const Trajectory t =
      integrate_ivp(ParamPair(3, 3), 1.0, 1e-10, IvpKind::trigonometric);
  CHECK(std::fabs(t.us.back() - sin_pq(ParamPair(3, 3), 1.0).value) <= 1e-6);
}

TEST_CASE("trajectory structure") {
  const Trajectory t =
      integrate_ivp(ParamPair(2, 4), 1.0, 1e-10, IvpKind::trigonometric);
  REQUIRE(t.xs.size() == t.us.size());
  REQUIRE(t.xs.size() == t.vs.size());
  for (std::size_t i = 1; i < t.xs.size(); ++i) {
    CHECK(t.xs[i] > t.xs[i - 1]);
    CHECK(t.us[i] >= t.us[i - 1]);  // nondecreasing on the principal branch
  }
}

TEST_CASE("flux invariant along both trajectories") {
  for (const ParamPair& pair : {ParamPair(2, 2), ParamPair(3, 2),
                                ParamPair(2, 3), ParamPair(4, 4)}) {
    const double p = pair.p();
    const double q = pair.q();
    for (IvpKind kind : {IvpKind::trigonometric, IvpKind::hyperbolic}) {
      const double sign = kind == IvpKind::trigonometric ? 1.0 : -1.0;
      const HalfPeriod hp =
          kind == IvpKind::trigonometric
              ? half_period(pair)
              : half_period(ParamPair(dual_index(pair), q));
      const double x_end = hp.is_finite() ? 0.9 * hp.value() : 1.5;
      const Trajectory t = integrate_ivp(pair, x_end, 1e-12, kind);
      for (std::size_t i = 0; i < t.xs.size(); ++i) {
        // |u'|^p = |v|^(p/(p-1)); the invariant is |u'|^p -+ |u|^q = 1,
        // checked relative to |u'|^p where the terms grow without bound.
        const double up = std::pow(std::fabs(t.vs[i]), p / (p - 1.0));
        const double inv = up + sign * std::pow(std::fabs(t.us[i]), q) - 1.0;
        CHECK(std::fabs(inv) <= 1e-8 * std::max(1.0, up));
      }
    }
  }
}

TEST_CASE("compare against the inversion path") {
  CHECK(compare(ParamPair(2, 2), 16) <= 1e-7);
  CHECK(compare(ParamPair(2, 4), 16) <= 1e-6);
  CHECK(compare(ParamPair(4, 2), 16) <= 1e-6);
  CHECK(compare(ParamPair(2, 2), 16, IvpKind::hyperbolic) <= 1e-7);
}

TEST_CASE("tightening the tolerance tightens the comparison") {
  const double loose = compare(ParamPair(2, 2), 8, IvpKind::trigonometric,
                               1e-6);
  const double tight = compare(ParamPair(2, 2), 8, IvpKind::trigonometric,
                               1e-8);
  CHECK(loose >= 10.0 * tight);
}

TEST_CASE("oracle restrictions") {
  CHECK_THROWS_AS(integrate_ivp(ParamPair(0.9, 2), 1.0, 1e-10), DomainError);
  CHECK_THROWS_AS(integrate_ivp(ParamPair(2, 0.5), 1.0, 1e-10), DomainError);
  // Beyond 0.9 of the branch endpoint.
  CHECK_THROWS_AS(integrate_ivp(ParamPair(2, 2), 1.57, 1e-10), DomainError);
  CHECK_THROWS_AS(integrate_ivp(ParamPair(2, 2), -1.0, 1e-10), DomainError);
}
