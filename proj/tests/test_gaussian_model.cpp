#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "oracles.hpp"
#include "schmidtcv/gaussian_model.hpp"

using namespace schmidtcv;
using schmidtcv::test::integrate;
using schmidtcv::test::integrate_2d;
using schmidtcv::test::make_rng;
using schmidtcv::test::uniform;

namespace {

const GaussianParams kReference{1.0, -1.0, 2.0, 1.0, 0.9};
constexpr double kReferenceK = 2.29415733870562;

GaussianParams random_params(std::mt19937_64& rng, double max_rho = 0.95) {
  return {uniform(rng, -3.0, 3.0), uniform(rng, -3.0, 3.0), uniform(rng, 0.5, 3.0),
          uniform(rng, 0.5, 3.0), uniform(rng, -max_rho, max_rho)};
}

double normal_pdf(double x, double m, double s) {
  const double z = (x - m) / s;
  return std::exp(-0.5 * z * z) / (s * std::sqrt(2.0 * std::numbers::pi));
}

}  // namespace

TEST_CASE("params validation") {
  CHECK_NOTHROW(kReference.validate());
  CHECK_THROWS_AS((GaussianParams{0, 0, 0.0, 1, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((GaussianParams{0, 0, 1, -1.0, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((GaussianParams{0, 0, 1, 1, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((GaussianParams{0, 0, 1, 1, -1.0}.validate()), std::invalid_argument);
}

TEST_CASE("density at the mean") {
  CHECK(density({}, 0.0, 0.0) == doctest::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-15));
  const double expected = 1.0 / (2.0 * std::numbers::pi * 2.0 * 1.0 * std::sqrt(0.19));
  CHECK(density(kReference, 1.0, -1.0) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("density is positive and wavefunction squares to it") {
  auto rng = make_rng(1);
  for (int i = 0; i < 10000; ++i) {
    const GaussianParams p = random_params(rng);
    const double x1 = uniform(rng, p.m1 - 5 * p.sigma1, p.m1 + 5 * p.sigma1);
    const double x2 = uniform(rng, p.m2 - 5 * p.sigma2, p.m2 + 5 * p.sigma2);
    const double d = density(p, x1, x2);
    REQUIRE(d >= 0.0);
    const double w = wavefunction(p, x1, x2);
    if (d > 0.0) REQUIRE(std::fabs(w * w - d) <= 1e-14 * d);
  }
  CHECK(wavefunction({}, 0.0, 0.0) ==
        doctest::Approx(std::sqrt(1.0 / (2.0 * std::numbers::pi))).epsilon(1e-15));
  CHECK(wavefunction(kReference, 1.0, -1.0) ==
        doctest::Approx(std::sqrt(1.0 / (4.0 * std::numbers::pi * std::sqrt(0.19)))).epsilon(1e-14));
}

TEST_CASE("density normalization and marginals by quadrature") {
  auto rng = make_rng(2);
  for (int i = 0; i < 20; ++i) {
    const GaussianParams p = random_params(rng, 0.9);
    const double a1 = p.m1 - 8 * p.sigma1, b1 = p.m1 + 8 * p.sigma1;
    const double a2 = p.m2 - 8 * p.sigma2, b2 = p.m2 + 8 * p.sigma2;
    const double mass = integrate_2d([&](double x1, double x2) { return density(p, x1, x2); },
                                     a1, b1, a2, b2);
    CHECK(std::fabs(mass - 1.0) <= 1e-8);

    for (const double t : {-2.0, -0.3, 0.0, 1.1, 2.5}) {
      const double x1 = p.m1 + t * p.sigma1;
      const double p1 = integrate([&](double x2) { return density(p, x1, x2); }, a2, b2);
      CHECK(std::fabs(p1 - normal_pdf(x1, p.m1, p.sigma1)) <= 1e-8);
      const double x2 = p.m2 + t * p.sigma2;
      const double p2 = integrate([&](double y) { return density(p, y, x2); }, a1, b1);
      CHECK(std::fabs(p2 - normal_pdf(x2, p.m2, p.sigma2)) <= 1e-8);
    }
  }
}

TEST_CASE("Schmidt number from rho") {
  CHECK(schmidt_number_from_rho(0.0) == 1.0);
  CHECK(std::fabs(schmidt_number_from_rho(0.9) - kReferenceK) <= 1e-13);
  CHECK(schmidt_number_from_rho(-0.9) == schmidt_number_from_rho(0.9));
  CHECK_THROWS_AS(schmidt_number_from_rho(1.0), std::domain_error);
  CHECK_THROWS_AS(schmidt_number_from_rho(-1.5), std::domain_error);
}

TEST_CASE("rho squared from K") {
  CHECK(rho_squared_from_K(1.0) == 0.0);
  CHECK(std::fabs(rho_squared_from_K(kReferenceK) - 0.81) <= 1e-13);
  CHECK_THROWS_AS(rho_squared_from_K(0.99), std::domain_error);

  double previous = 0.0;
  for (double k = 1.5; k < 1e6; k *= 1.7) {
    const double r2 = rho_squared_from_K(k);
    CHECK(r2 > previous);
    CHECK(r2 < 1.0);
    previous = r2;
  }

  auto rng = make_rng(3);
  for (int i = 0; i < 100; ++i) {
    const double rho = uniform(rng, -0.999, 0.999);
    CHECK(std::fabs(rho_squared_from_K(schmidt_number_from_rho(rho)) - rho * rho) <= 1e-14);
  }
}

TEST_CASE("analytic weights") {
  const auto w = analytic_weights(schmidt_number_from_rho(0.9), 3);
  REQUIRE(w.size() == 3);
  CHECK(std::fabs(w[0] - 0.607135541614981) <= 1e-15);
  CHECK(std::fabs(w[1] - 0.238521975722865) <= 1e-15);
  CHECK(std::fabs(w[2] - 0.0937068068052879) <= 1e-15);

  const auto single = analytic_weights(1.0, 4);
  CHECK(single == std::vector<double>{1.0, 0.0, 0.0, 0.0});

  const double k = schmidt_number_from_rho(0.9);
  const auto many = analytic_weights(k, 200);
  double sum = 0.0;
  for (const double x : many) sum += x;
  CHECK(std::fabs(sum - 1.0) <= 1e-15);
  for (std::size_t i = 1; i < many.size() && many[i] > 0.0; ++i) CHECK(many[i] < many[i - 1]);

  // Truncated geometric identity: the first `count` terms sum to 1 - q^count.
  const GeometricSpectrum g = geometric_spectrum(k);
  for (const std::size_t count : {1u, 2u, 5u, 17u}) {
    double partial = 0.0;
    for (const double x : analytic_weights(k, count)) partial += x;
    CHECK(std::fabs(partial - (1.0 - std::pow(g.ratio, count) * g.lambda0 / (1.0 - g.ratio))) <=
          1e-15);
  }
  CHECK(g.lambda0 == 2.0 / (k + 1.0));
  CHECK(g.ratio == (k - 1.0) / (k + 1.0));
  CHECK_THROWS_AS(analytic_weights(k, 0), std::invalid_argument);
}

TEST_CASE("mode sum truncation length") {
  CHECK(geometric_truncation_length(1.0) == 1);
  const std::size_t n = geometric_truncation_length(kReferenceK);
  const GeometricSpectrum g = geometric_spectrum(kReferenceK);
  CHECK(g.weight(n - 1) >= 1e-15);
  CHECK(g.weight(n) < 1e-15);
  CHECK(geometric_truncation_length(1e4) == kMaxModeTerms);
}

TEST_CASE("Hermite polynomials and functions") {
  for (const double u : {-2.5, -0.7, 0.0, 0.3, 1.9}) {
    CHECK(hermite_polynomial(0, u) == 1.0);
    CHECK(hermite_polynomial(1, u) == doctest::Approx(2 * u));
    CHECK(hermite_polynomial(3, u) == doctest::Approx(8 * u * u * u - 12 * u));
    CHECK(hermite_polynomial(4, u) == doctest::Approx(16 * std::pow(u, 4) - 48 * u * u + 12));
  }

  // The scaled recurrence agrees with raw H_k times the normalization and
  // Gaussian factor, evaluated separately.
  for (const double u : {-3.1, -1.0, 0.2, 2.4, 4.0}) {
    const auto h = hermite_functions(12, u);
    for (unsigned k = 0; k <= 12; ++k) {
      const double norm = 1.0 / std::sqrt(std::pow(2.0, k) * std::tgamma(k + 1.0) *
                                           std::sqrt(std::numbers::pi));
      const double expected = norm * hermite_polynomial(k, u) * std::exp(-0.5 * u * u);
      CHECK(h[k] == doctest::Approx(expected).epsilon(1e-12).scale(1e-12));
    }
  }

  // High orders stay finite where H_k alone overflows.
  const auto high = hermite_functions(400, 25.0);
  CHECK(!std::isfinite(hermite_polynomial(400, 25.0)));
  for (const double x : high) CHECK(std::isfinite(x));
}

TEST_CASE("analytic mode normalization constants") {
  const double k = kReferenceK;
  for (const double sigma : {0.5, 1.0, 2.0}) {
    CHECK(mode_normalization(0, sigma, k) ==
          doctest::Approx(std::pow(k / (2.0 * std::numbers::pi * sigma * sigma), 0.25)).epsilon(1e-14));
    for (unsigned n = 0; n <= 6; ++n) {
      // analytic_mode equals C_k H_k(u sqrt(K/2)) exp(-K u^2 / 4) with u = (x - m) / sigma.
      for (const double x : {-1.0, 0.4, 2.2}) {
        const double u = (x - 0.3) / sigma;
        const double expected = mode_normalization(n, sigma, k) *
                                hermite_polynomial(n, u * std::sqrt(k / 2.0)) *
                                std::exp(-k * u * u / 4.0);
        CHECK(analytic_mode(n, 0.3, sigma, k, x) ==
              doctest::Approx(expected).epsilon(1e-12).scale(1e-12));
      }
    }
  }
  CHECK(analytic_mode(0, 0.0, 1.0, 1.0, 0.0) ==
        doctest::Approx(std::pow(2.0 * std::numbers::pi, -0.25)).epsilon(1e-15));
}

TEST_CASE("analytic modes are orthonormal by quadrature") {
  const double m = 1.0, sigma = 2.0, k = kReferenceK;
  for (unsigned i = 0; i <= 6; ++i) {
    for (unsigned j = 0; j <= i; ++j) {
      const double overlap = integrate(
          [&](double x) { return analytic_mode(i, m, sigma, k, x) * analytic_mode(j, m, sigma, k, x); },
          m - 10 * sigma, m + 10 * sigma);
      CHECK(std::fabs(overlap - (i == j ? 1.0 : 0.0)) <= 1e-10);
    }
  }
}

TEST_CASE("closed-form entropy") {
  CHECK(closed_form_entropy(1.0, LogBase::e) == 0.0);
  CHECK(std::fabs(closed_form_entropy(kReferenceK, LogBase::e) -
                  test::geometric_entropy_series(kReferenceK)) <= 1e-10);
  CHECK(closed_form_entropy(2.0, LogBase::two) * std::numbers::ln2 ==
        doctest::Approx(closed_form_entropy(2.0, LogBase::e)).epsilon(1e-15));

  double previous = -1.0;
  for (int i = 0; i < 100; ++i) {
    const double k = 1.0 + 49.0 * i / 99.0;
    const double s = closed_form_entropy(k, LogBase::e);
    CHECK(s > previous);
    previous = s;
  }
  CHECK_THROWS_AS(closed_form_entropy(0.5, LogBase::e), std::domain_error);
}

TEST_CASE("Gaussian mutual information") {
  CHECK(shannon_mi_gaussian(0.0, LogBase::e) == 0.0);
  CHECK(std::fabs(shannon_mi_gaussian(0.9, LogBase::e) - std::log(kReferenceK)) <= 1e-13);
  CHECK(shannon_mi_gaussian(0.9, LogBase::two) ==
        doctest::Approx(std::log2(kReferenceK)).epsilon(1e-13));
  auto rng = make_rng(4);
  for (int i = 0; i < 50; ++i) {
    const double rho = uniform(rng, 0.0, 0.999);
    CHECK(shannon_mi_gaussian(rho, LogBase::e) == shannon_mi_gaussian(-rho, LogBase::e));
  }
  CHECK_THROWS_AS(shannon_mi_gaussian(1.0, LogBase::e), std::domain_error);
}

TEST_CASE("Schmidt synthesis reproduces the wavefunction") {
  auto rng = make_rng(5);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const GaussianParams p = i == 0 ? kReference : random_params(rng, 0.9);
    const double x1 = uniform(rng, p.m1 - 4 * p.sigma1, p.m1 + 4 * p.sigma1);
    const double x2 = uniform(rng, p.m2 - 4 * p.sigma2, p.m2 + 4 * p.sigma2);
    worst = std::max(worst, std::fabs(analytic_synthesis(p, x1, x2) - wavefunction(p, x1, x2)));
  }
  CHECK(worst <= 1e-8);
}
