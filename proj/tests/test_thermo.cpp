#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "oracles.hpp"
#include "schmidtcv/gaussian_model.hpp"
#include "schmidtcv/thermo.hpp"

using namespace schmidtcv;
using schmidtcv::test::make_rng;
using schmidtcv::test::uniform;

namespace {
constexpr double kReferenceK = 2.29415733870562;
}

TEST_CASE("beta and K") {
  CHECK(std::fabs(std::exp(-beta_from_K(kReferenceK)) - 0.392864458385019) <= 1e-14);
  CHECK(K_from_beta(std::log(3.0)) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(beta_from_K(1.0 + 1e-12) > 25.0);
  CHECK(K_from_beta(60.0) == 1.0);
  CHECK(K_from_beta(1e-8) > 1e8);

  CHECK_THROWS_AS(beta_from_K(1.0), std::domain_error);
  CHECK_THROWS_AS(beta_from_K(0.3), std::domain_error);
  CHECK_THROWS_AS(K_from_beta(0.0), std::domain_error);
  CHECK_THROWS_AS(K_from_beta(-1.0), std::domain_error);
  CHECK_THROWS_AS(ThermoPoint(0.0), std::domain_error);
  CHECK(ThermoPoint(0.5).beta == 0.5);

  auto rng = make_rng(41);
  for (int i = 0; i < 100; ++i) {
    const double k = uniform(rng, 1.0, 100.0);
    if (k == 1.0) continue;
    CHECK(std::fabs(K_from_beta(beta_from_K(k)) - k) <= 1e-13 * k);
  }
}

TEST_CASE("rho squared from beta") {
  CHECK(rho_squared_from_beta(80.0) < 1e-30);
  CHECK(rho_squared_from_beta(1e-9) == doctest::Approx(1.0).epsilon(1e-15));
  auto rng = make_rng(42);
  for (int i = 0; i < 100; ++i) {
    const double beta = std::exp(uniform(rng, std::log(1e-3), std::log(50.0)));
    const double k = K_from_beta(beta);
    CHECK(std::fabs(rho_squared_from_beta(beta) - (1.0 - 1.0 / (k * k))) <= 1e-14);
  }
}

TEST_CASE("oscillator entropy") {
  CHECK(oscillator_entropy(200.0, LogBase::e) < 1e-80);
  const double expected = std::log(1.5) + 0.5 * std::log(3.0);
  CHECK(std::fabs(oscillator_entropy(std::log(3.0), LogBase::e) - expected) <= 1e-13);
  CHECK(std::fabs(oscillator_entropy(std::log(3.0), LogBase::two) - expected / std::log(2.0)) <=
        1e-13);
  CHECK(std::fabs(oscillator_entropy(beta_from_K(kReferenceK), LogBase::e) -
                  closed_form_entropy(kReferenceK, LogBase::e)) <= 1e-13);

  // Small beta: S ~ 1 - ln(beta) + beta^2/24.
  const double beta = 1e-9;
  CHECK(oscillator_entropy(beta, LogBase::e) ==
        doctest::Approx(1.0 - std::log(beta)).epsilon(1e-15));
}

TEST_CASE("entropy mapping agrees on a log grid") {
  const auto rows = thermo_sweep(1e-3, 50.0, 200, LogBase::e);
  REQUIRE(rows.size() == 200);
  CHECK(rows.front().beta == 1e-3);
  CHECK(rows.back().beta == 50.0);
  double worst = 0.0;
  for (const ThermoRow& row : rows) {
    worst = std::max(worst, std::fabs(row.entropy - closed_form_entropy(row.schmidt_number, LogBase::e)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("maps are strictly monotone") {
  const auto rows = thermo_sweep(1e-3, 30.0, 300, LogBase::e);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].beta > rows[i - 1].beta);
    CHECK(rows[i].schmidt_number < rows[i - 1].schmidt_number);
    CHECK(rows[i].rho_squared < rows[i - 1].rho_squared);
    CHECK(rows[i].entropy < rows[i - 1].entropy);
  }
  double previous = 0.0;
  for (double k = 1.01; k < 100.0; k *= 1.2) {
    const double beta = beta_from_K(k);
    if (previous > 0.0) CHECK(beta < previous);
    previous = beta;
  }
}

TEST_CASE("sweep arguments") {
  CHECK(thermo_sweep(2.0, 2.0, 1, LogBase::e).size() == 1);
  CHECK_THROWS_AS(thermo_sweep(2.0, 1.0, 5, LogBase::e), std::invalid_argument);
  CHECK_THROWS_AS(thermo_sweep(1.0, 2.0, 0, LogBase::e), std::invalid_argument);
  CHECK_THROWS_AS(thermo_sweep(0.0, 2.0, 5, LogBase::e), std::domain_error);
}
