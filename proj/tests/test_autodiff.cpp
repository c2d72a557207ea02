#include <doctest.h>

#include <cmath>

#include "confrac/autodiff.hpp"
#include "confrac/errors.hpp"
#include "support.hpp"

using namespace confrac;
using confrac::testing::central_difference_jacobian;
using confrac::testing::corpus;
using confrac::testing::rel_err;

TEST_CASE("dual arithmetic follows the product rule") {
  const Dual a{3.0, 2.0};
  const Dual b{5.0, 7.0};
  CHECK(a * b == Dual{15.0, 3.0 * 7.0 + 2.0 * 5.0});
  CHECK(Dual(4.0).deriv == 0.0);
  CHECK(Dual::variable(4.0) == Dual{4.0, 1.0});
  // A zero inner derivative stays exactly zero even when the outer slope is
  // infinite.
  CHECK(exp(Dual(1000.0)).deriv == 0.0);
  CHECK(pow(Dual(0.0), Dual(0.5)).deriv == 0.0);
}

TEST_CASE("classical_jacobian examples") {
  const auto sinx = parse("sin(x)", {"x", "y"});
  for (const double a0 : {0.3, 1.0, 2.5}) {
    const auto j = classical_jacobian(sinx, std::vector{a0, 4.0});
    CHECK(j.rows() == 1);
    CHECK(j.cols() == 2);
    CHECK(j(0, 0) == std::cos(a0));
    CHECK(j(0, 1) == 0.0);
  }

  CHECK(classical_jacobian(parse("x", {"x"}), std::vector{7.3})(0, 0) == 1.0);

  // Frozen from a central-difference check (step 1e-6).
  const auto f = parse("x^2*y, x+y^2", {"x", "y"});
  const auto j = classical_jacobian(f, std::vector{1.0, 2.0});
  CHECK(j(0, 0) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(j(0, 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(j(1, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(j(1, 1) == doctest::Approx(4.0).epsilon(1e-14));
  const auto fd = central_difference_jacobian(f, {1.0, 2.0});
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(fd.data()[k] - j.data()[k]) < 1e-8);
}

TEST_CASE("derivative_1d") {
  CHECK(derivative_1d(parse("t^3", {"t"}), 2.0) == 12.0);
  CHECK(derivative_1d(parse("5", {"t"}), 1.0) == 0.0);
  CHECK(derivative_1d(parse("sin(t)", {"t"}), 0.0) == 1.0);
  CHECK(derivative_1d(parse("t^t", {"t"}), 2.0) ==
        doctest::Approx(4.0 * (std::log(2.0) + 1.0)).epsilon(1e-15));
  CHECK(derivative_1d(parse("tan(t)", {"t"}), 0.5) ==
        doctest::Approx(1.0 / std::pow(std::cos(0.5), 2)).epsilon(1e-15));
  CHECK_THROWS_AS(derivative_1d(parse("x*y", {"x", "y"}), 1.0), DimensionError);
}

TEST_CASE("derivative domain errors") {
  CHECK_THROWS_AS(derivative_1d(parse("ln(t)", {"t"}), 0.0), EvalDomainError);
  CHECK_THROWS_AS(derivative_1d(parse("sqrt(t)", {"t"}), 0.0), DerivativeDomainError);
  // (-2)^t has a real value at t=2, but no derivative in t.
  CHECK_THROWS_AS(derivative_1d(parse("(0-2)^t", {"t"}), 2.0), DerivativeDomainError);
  // Integer constant exponent over a negative base is fine.
  CHECK(derivative_1d(parse("t^3", {"t"}), -1.0) == 3.0);
  try {
    classical_jacobian(parse("x + sqrt(y)", {"x", "y"}), std::vector{1.0, 0.0});
    FAIL("expected DerivativeDomainError");
  } catch (const DerivativeDomainError& e) {
    CHECK(e.path() == "f[0]/add:rhs/sqrt");
  }
  CHECK_THROWS_AS(classical_jacobian(parse("x", {"x"}), std::vector{1.0, 2.0}), DimensionError);
}

TEST_CASE("property: autodiff agrees with central differences on the corpus") {
  for (const auto& entry : corpus()) {
    const auto f = parse(entry.source, entry.vars);
    for (const auto& a : entry.points) {
      const auto exact = classical_jacobian(f, a);
      const auto fd = central_difference_jacobian(f, a);
      for (std::size_t k = 0; k < exact.data().size(); ++k) {
        INFO(entry.source << " entry " << k);
        if (exact.data()[k] == 0.0) {
          CHECK(std::abs(fd.data()[k]) < 1e-8);
        } else {
          CHECK(rel_err(fd.data()[k], exact.data()[k]) < 1e-6);
        }
      }
    }
  }
}

TEST_CASE("property: linearity and constant rows") {
  const std::vector<std::string> vars{"x", "y", "z"};
  const auto f = parse("x*y*z + sin(x)", vars);
  const auto g = parse("exp(y)/x - z^2", vars);
  const std::vector<double> a{0.7, 1.3, 2.1};
  const auto jf = classical_jacobian(f, a);
  const auto jg = classical_jacobian(g, a);
  for (const double lambda : {-2.0, 0.5, 3.0}) {
    for (const double mu : {-2.0, 0.5, 3.0}) {
      const FunctionDef comb({Expr::constant(lambda) * f.components()[0] +
                              Expr::constant(mu) * g.components()[0]},
                             vars);
      const auto jc = classical_jacobian(comb, a);
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(rel_err(jc(0, j), lambda * jf(0, j) + mu * jg(0, j)) < 1e-12);
      }
    }
  }

  const auto h = parse("x^2, exp(y)*z, 4", vars);
  const auto jh = classical_jacobian(h, a);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (!h.components()[i].mentions(vars[j])) CHECK(jh(i, j) == 0.0);
    }
  }
}
