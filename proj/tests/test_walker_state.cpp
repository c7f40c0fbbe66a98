#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "qwalk/evolution.hpp"
#include "qwalk/walker_state.hpp"

using namespace qwalk;

TEST_CASE("standard initial state") {
  const WalkerState state = standard_initial_state();
  CHECK(state.t == 0);
  CHECK(state.sites() == 1);
  CHECK(state.left[0].real() == doctest::Approx(0.70710678118654752).epsilon(1e-15));
  CHECK(state.left[0].imag() == 0.0);
  CHECK(state.right[0].real() == doctest::Approx(-0.70710678118654752).epsilon(1e-15));
  CHECK(std::abs(norm_squared(state) - 1.0) <= 1e-15);
  CHECK(expectation_position(state) == 0.0);
}

TEST_CASE("general initial state edge weights") {
  const WalkerState all_right = general_initial_state({1.0, 123.0});
  CHECK(std::abs(all_right.right[0] - cplx(1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(all_right.left[0]) <= 1e-15);

  const WalkerState generic = general_initial_state({0.3, 0.4});
  CHECK(std::abs(norm_squared(generic) - 1.0) <= 1e-15);
}

TEST_CASE("general initial state rejects eta outside [0,1]") {
  CHECK_THROWS_AS(general_initial_state({-0.2, 0.0}), std::domain_error);
  CHECK_THROWS_AS(general_initial_state({1.2, 0.0}), std::domain_error);
}

TEST_CASE("eta=1/2, mu=pi is the standard state up to global phase") {
  const WalkerState flipped =
      general_initial_state({0.5, std::numbers::pi});
  const WalkerState standard = standard_initial_state();
  // Amplitudes are the standard ones times -1 (up to rounding in polar).
  CHECK(std::abs(flipped.left[0] + standard.left[0]) <= 1e-15);
  CHECK(std::abs(flipped.right[0] + standard.right[0]) <= 1e-15);

  // Same position distribution after evolving both.
  const GameSequence seq = GameSequence::parse("AB");
  const PhasePair phases{0.12, 0.31};
  const auto dist_flipped =
      position_distribution(evolve(flipped, seq, phases, 25));
  const auto dist_standard =
      position_distribution(evolve(standard, seq, phases, 25));
  REQUIRE(dist_flipped.size() == dist_standard.size());
  for (const auto& [x, p] : dist_standard) {
    REQUIRE(dist_flipped.count(x) == 1);
    CHECK(dist_flipped.at(x) == doctest::Approx(p).epsilon(1e-12));
  }
}

TEST_CASE("distribution of the standard state is a point mass") {
  const auto dist = position_distribution(standard_initial_state());
  REQUIRE(dist.size() == 1);
  CHECK(dist.at(0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("one unbiased step spreads mass to x = -1 and x = +1") {
  const WalkerState after =
      step(standard_initial_state(), make_phase_coin(0.5, 0.0));
  const auto dist = position_distribution(after);
  REQUIRE(dist.size() == 2);
  CHECK(dist.at(-1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(dist.at(+1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(expectation_position(after)) <= 1e-15);
}

TEST_CASE("distribution sums to one along an evolution") {
  const GameSequence seq = GameSequence::parse("ABB");
  const WalkerState state =
      evolve(standard_initial_state(), seq, {0.07, 0.21}, 60);
  double total = 0.0;
  for (const auto& [x, p] : position_distribution(state)) {
    total += p;
  }
  CHECK(std::abs(total - 1.0) <= 1e-10);
}

TEST_CASE("expectation of a point mass at x = 3") {
  WalkerState state;
  state.t = 3;
  state.left.assign(7, cplx(0.0, 0.0));
  state.right.assign(7, cplx(0.0, 0.0));
  state.right[6] = cplx(1.0, 0.0);  // index 6 <-> x = +3
  CHECK(expectation_position(state) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("parity of support: odd sites are empty at even t and vice versa") {
  const GameSequence seq = GameSequence::parse("AB");
  WalkerState state = standard_initial_state();
  Evolver evolver(state, 31);
  const PhasePair phases{0.05, 0.17};
  for (int t = 1; t <= 31; ++t) {
    evolver.step(game_coin(seq.at_step(t - 1), phases));
    for (const auto& [x, p] : position_distribution(evolver.state())) {
      CHECK(((x % 2) + 2) % 2 == ((t % 2) + 2) % 2);
    }
  }
}

TEST_CASE("global phase leaves observables unchanged") {
  const WalkerState state =
      evolve(standard_initial_state(), GameSequence::parse("ABB"),
             {0.11, 0.02}, 17);
  const auto base_dist = position_distribution(state);
  const double base_mean = expectation_position(state);

  auto rotate = [&](cplx phase) {
    WalkerState rotated = state;
    for (std::size_t i = 0; i < rotated.sites(); ++i) {
      rotated.left[i] *= phase;
      rotated.right[i] *= phase;
    }
    return rotated;
  };

  // Rotations by -1 and i permute/negate components exactly, so the
  // computed observables are bit identical.
  for (const cplx phase : {cplx(-1.0, 0.0), cplx(0.0, 1.0)}) {
    const WalkerState rotated = rotate(phase);
    CHECK(expectation_position(rotated) == base_mean);
    CHECK(position_distribution(rotated) == base_dist);
  }

  // A generic unit phase agrees to rounding.
  const WalkerState rotated = rotate(std::polar(1.0, 1.2345));
  CHECK(expectation_position(rotated) ==
        doctest::Approx(base_mean).epsilon(1e-12));
  const auto rotated_dist = position_distribution(rotated);
  REQUIRE(rotated_dist.size() == base_dist.size());
  for (const auto& [x, p] : base_dist) {
    CHECK(rotated_dist.at(x) == doctest::Approx(p).epsilon(1e-12));
  }
}
