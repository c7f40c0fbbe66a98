#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/kernels.hpp"

using namespace qwalk;
using namespace qwalk::kernels;

namespace {

std::vector<cplx> random_amplitudes(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cplx> out(n);
  for (cplx& a : out) {
    a = cplx(dist(rng), dist(rng));
  }
  return out;
}

}  // namespace

TEST_CASE("kernel registry lists scalar first and dispatch picks something") {
  const auto kernels = available_kernels();
  REQUIRE(!kernels.empty());
  CHECK(kernels[0].name == "scalar");
  CHECK(supported("scalar"));
  CHECK(active_kernel() != nullptr);
  CHECK(supported(active_kernel_name()));
}

TEST_CASE("kernel override round-trips") {
  const std::string_view original = active_kernel_name();
  CHECK(set_active_kernel("scalar"));
  CHECK(active_kernel_name() == "scalar");
  CHECK_FALSE(set_active_kernel("warp9"));
  CHECK(active_kernel_name() == "scalar");
  CHECK(set_active_kernel("auto"));
  CHECK(set_active_kernel(original));
}

TEST_CASE("all supported kernels produce bit-identical output") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> phase(-1.5, 1.5);
  // Sizes cover the vector width boundary and the remainder path.
  for (const std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3},
                              std::size_t{7}, std::size_t{64},
                              std::size_t{201}}) {
    const auto inL = random_amplitudes(rng, n);
    const auto inR = random_amplitudes(rng, n);
    const CoinOperator coin = make_phase_coin(0.5, phase(rng));

    std::vector<cplx> refL(n), refR(n);
    apply_coin_scalar(coin, inL.data(), inR.data(), n, refL.data(),
                      refR.data());

    for (const KernelInfo& kernel : available_kernels()) {
      if (!supported(kernel.name)) {
        continue;
      }
      std::vector<cplx> outL(n), outR(n);
      kernel.fn(coin, inL.data(), inR.data(), n, outL.data(), outR.data());
      INFO("kernel: ", kernel.name, " n: ", n);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(outL[i] == refL[i]);
        CHECK(outR[i] == refR[i]);
      }
    }
  }
}

TEST_CASE("kernels implement the coin matvec") {
  std::mt19937 rng(987);
  const std::size_t n = 33;
  const auto inL = random_amplitudes(rng, n);
  const auto inR = random_amplitudes(rng, n);
  const CoinOperator coin = make_general_coin(0.37, 0.9, -0.4);

  for (const KernelInfo& kernel : available_kernels()) {
    if (!supported(kernel.name)) {
      continue;
    }
    std::vector<cplx> outL(n), outR(n);
    kernel.fn(coin, inL.data(), inR.data(), n, outL.data(), outR.data());
    for (std::size_t i = 0; i < n; ++i) {
      const cplx expectedL = coin.ll * inL[i] + coin.lr * inR[i];
      const cplx expectedR = coin.rl * inL[i] + coin.rr * inR[i];
      CHECK(std::abs(outL[i] - expectedL) <= 1e-15);
      CHECK(std::abs(outR[i] - expectedR) <= 1e-15);
    }
  }
}

TEST_CASE("zero sites is a no-op") {
  const CoinOperator coin = make_phase_coin(0.5, 0.1);
  for (const KernelInfo& kernel : available_kernels()) {
    if (!supported(kernel.name)) {
      continue;
    }
    kernel.fn(coin, nullptr, nullptr, 0, nullptr, nullptr);
  }
}

TEST_CASE("full evolutions are interchangeable across kernels") {
  std::mt19937 rng(5557);
  std::uniform_real_distribution<double> phase(-1.5, 1.5);
  const GameSequence seq = GameSequence::parse("ABB");
  for (int trial = 0; trial < 5; ++trial) {
    const PhasePair phases{phase(rng), phase(rng)};
    const CoinOperator coin_a = game_coin(Game::A, phases);
    const CoinOperator coin_b = game_coin(Game::B, phases);

    Evolver reference(standard_initial_state(), 300, &apply_coin_scalar);
    std::vector<Evolver> others;
    for (const KernelInfo& kernel : available_kernels()) {
      if (supported(kernel.name)) {
        others.emplace_back(standard_initial_state(), 300, kernel.fn);
      }
    }
    for (int k = 0; k < 300; ++k) {
      const CoinOperator& coin =
          seq.at_step(k) == Game::A ? coin_a : coin_b;
      reference.step(coin);
      for (Evolver& evolver : others) {
        evolver.step(coin);
      }
    }
    for (Evolver& evolver : others) {
      CHECK(evolver.state().left == reference.state().left);
      CHECK(evolver.state().right == reference.state().right);
    }
  }
}
