#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "netmean/frechet.hpp"
#include "netmean/theory.hpp"

using namespace netmean;

TEST_CASE("predicted mean resistance closed form") {
  SUBCASE("n=100, p=0.5, q=0.1") {
    const ResistanceMatrix r = predicted_mean_resistance(SbmParams(100, 0.5, 0.1));
    const double within = 4.0 / 60.0;
    const double across = within + (0.4 / 0.6) * 4.0 / (100.0 * 100.0 * 0.1);
    CHECK(r(0, 1) == doctest::Approx(within).epsilon(1e-12));
    CHECK(r(50, 51) == doctest::Approx(within).epsilon(1e-12));
    CHECK(r(0, 50) == doctest::Approx(across).epsilon(1e-12));
    CHECK(r(0, 99) == doctest::Approx(across).epsilon(1e-12));
    CHECK(r(0, 0) == 0.0);
    CHECK(r(0, 99) == r(99, 0));
    CHECK(across == doctest::Approx(0.0693333333333).epsilon(1e-9));
  }
  SUBCASE("p = q collapses to a flat matrix") {
    const ResistanceMatrix r = predicted_mean_resistance(SbmParams(4, 1.0, 1.0));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        CHECK(r(i, j) == doctest::Approx(i == j ? 0.0 : 0.5).epsilon(1e-12));
      }
    }
  }
  SUBCASE("q = 0 is rejected") {
    CHECK_THROWS_AS(predicted_mean_resistance(SbmParams(10, 0.5, 0.0)),
                    std::invalid_argument);
  }
}

TEST_CASE("predicted second eigenvalue and band") {
  CHECK(predicted_lambda2(SbmParams(50, 0.3, 0.3)).value == 0.0);
  const Lambda2Prediction l = predicted_lambda2(SbmParams(400, 0.5, 0.1));
  CHECK(l.value == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(l.band == doctest::Approx(0.223448).epsilon(1e-5));
}

TEST_CASE("spectral tail bound") {
  CHECK(spectral_tail_bound(SbmParams(64, 1.0, 0.5)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(spectral_tail_bound(SbmParams(400, 0.5, 0.1)) ==
        doctest::Approx(8.0 / std::sqrt(200.0)).epsilon(1e-12));
  CHECK(spectral_tail_bound(SbmParams(100, 0.5, 0.1)) >
        spectral_tail_bound(SbmParams(400, 0.5, 0.1)));
}

TEST_CASE("residual bound") {
  // 8*sqrt(2)/(50)^(3/2) = 8/250 exactly, times (1/30 + 1/30).
  CHECK(residual_bound(SbmParams(100, 0.5, 0.1), 30.0, 30.0) ==
        doctest::Approx(0.032 / 15.0).epsilon(1e-12));
  CHECK(residual_bound(SbmParams(100, 0.5, 0.1), 20.0, 40.0) ==
        residual_bound(SbmParams(100, 0.5, 0.1), 40.0, 20.0));
  CHECK_THROWS_AS(residual_bound(SbmParams(100, 0.5, 0.1), 0.0, 30.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(residual_bound(SbmParams(100, 0.5, 0.1), 30.0, -1.0),
                  std::invalid_argument);
}

TEST_CASE("predict bundles the individual oracles") {
  const SbmParams params(400, 0.5, 0.1);
  const TheoryPrediction t = predict(params);
  const Lambda2Prediction l = predicted_lambda2(params);
  CHECK(t.lambda2 == l.value);
  CHECK(t.lambda2_band == l.band);
  CHECK(t.tail_bound == spectral_tail_bound(params));
  CHECK(t.expected_resistance(0, 1) == predicted_mean_resistance(params)(0, 1));
  CHECK(t.expected_resistance(0, 399) == predicted_mean_resistance(params)(0, 399));
  CHECK(t.residual_scale == doctest::Approx(8.0 * std::sqrt(2.0) / std::pow(200.0, 1.5))
                                .epsilon(1e-12));
}

TEST_CASE("closed-form resistance inverts back to the expected matrix") {
  // The predicted resistance matrix is exactly the effective resistance of
  // the expected weighted graph, so reconstruction must recover it.
  const SbmParams triples[] = {SbmParams(50, 0.6, 0.2), SbmParams(100, 0.5, 0.1),
                               SbmParams(200, 0.4, 0.05)};
  for (const SbmParams& params : triples) {
    const ResistanceMatrix r = predicted_mean_resistance(params);
    const WeightedAdjacency back = adjacency_from_resistance(r);
    const WeightedAdjacency want = expected_matrix(params);
    CHECK((back.matrix() - want.matrix()).cwiseAbs().maxCoeff() <= 1e-6);
  }
}

TEST_CASE("forward direction: resistance of the expected graph matches the formula") {
  const SbmParams params(60, 0.7, 0.2);
  const ResistanceMatrix computed = effective_resistance(expected_matrix(params));
  const ResistanceMatrix predicted = predicted_mean_resistance(params);
  CHECK((computed.matrix() - predicted.matrix()).cwiseAbs().maxCoeff() <= 1e-9);
}
