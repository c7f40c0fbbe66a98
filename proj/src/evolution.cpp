#include "qwalk/evolution.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qwalk {

GameSequence GameSequence::parse(std::string_view word) {
  if (word.empty()) {
    throw std::invalid_argument("game sequence must be nonempty");
  }
  for (char c : word) {
    if (c != 'A' && c != 'B') {
      std::ostringstream msg;
      msg << "invalid letter '" << c << "' in game sequence \"" << word
          << "\" (only A and B are allowed)";
      throw std::invalid_argument(msg.str());
    }
  }
  return GameSequence{std::string(word)};
}

GameSequence GameSequence::swapped() const {
  GameSequence out{letters};
  for (char& c : out.letters) {
    c = (c == 'A') ? 'B' : 'A';
  }
  return out;
}

Evolver::Evolver(WalkerState initial, int max_steps,
                 kernels::ApplyCoinFn kernel)
    : cur_(std::move(initial)),
      kernel_(kernel != nullptr ? kernel : kernels::active_kernel()) {
  const std::size_t final_sites =
      cur_.sites() + 2 * static_cast<std::size_t>(std::max(max_steps, 0));
  cur_.left.reserve(final_sites);
  cur_.right.reserve(final_sites);
  scratch_.left.reserve(final_sites);
  scratch_.right.reserve(final_sites);
}

void Evolver::step(const CoinOperator& coin) {
  if (!is_unitary(coin)) {
    throw std::invalid_argument("coin operator violates unitarity invariant");
  }
  const std::size_t n = cur_.sites();
  scratch_.left.resize(n + 2);
  scratch_.right.resize(n + 2);

  // Mixed L components land one site left, R components one site right: in
  // the grown window the L block starts at index 0 and the R block at 2.
  kernel_(coin, cur_.left.data(), cur_.right.data(), n, scratch_.left.data(),
          scratch_.right.data() + 2);
  scratch_.left[n] = scratch_.left[n + 1] = cplx(0.0, 0.0);
  scratch_.right[0] = scratch_.right[1] = cplx(0.0, 0.0);
  scratch_.t = cur_.t + 1;
  std::swap(cur_, scratch_);
}

WalkerState step(const WalkerState& state, const CoinOperator& coin) {
  Evolver evolver(state, 1);
  evolver.step(coin);
  return evolver.take_state();
}

WalkerState evolve(const WalkerState& initial, const GameSequence& sequence,
                   const PhasePair& phases, int steps) {
  if (steps < 1) {
    throw std::domain_error("steps must be >= 1");
  }
  const CoinOperator coin_a = game_coin(Game::A, phases);
  const CoinOperator coin_b = game_coin(Game::B, phases);
  Evolver evolver(initial, steps);
  for (int k = 0; k < steps; ++k) {
    evolver.step(sequence.at_step(k) == Game::A ? coin_a : coin_b);
  }
  return evolver.take_state();
}

std::vector<std::pair<int, double>> expectation_series(
    const GameSequence& sequence, const PhasePair& phases, int t_max) {
  if (t_max < 1) {
    throw std::domain_error("t_max must be >= 1");
  }
  const CoinOperator coin_a = game_coin(Game::A, phases);
  const CoinOperator coin_b = game_coin(Game::B, phases);
  std::vector<std::pair<int, double>> series;
  series.reserve(t_max);
  Evolver evolver(standard_initial_state(), t_max);
  for (int t = 1; t <= t_max; ++t) {
    evolver.step(sequence.at_step(t - 1) == Game::A ? coin_a : coin_b);
    series.emplace_back(t, expectation_position(evolver.state()));
  }
  return series;
}

}  // namespace qwalk
