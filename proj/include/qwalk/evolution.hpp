#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/kernels.hpp"
#include "qwalk/walker_state.hpp"

namespace qwalk {

/// A finite nonempty word over {A, B}, played periodically: the coin at
/// global step k (0-based) is letters[k mod letters.size()].
struct GameSequence {
  std::string letters;

  /// Validates the word; throws std::invalid_argument naming the first
  /// offending character (or an empty word).
  static GameSequence parse(std::string_view word);

  Game at_step(std::size_t k) const {
    return letters[k % letters.size()] == 'A' ? Game::A : Game::B;
  }
  std::size_t period() const { return letters.size(); }

  /// Letterwise A<->B swap (the alpha<->beta relabel partner).
  GameSequence swapped() const;

  bool operator==(const GameSequence&) const = default;
};

/// Drives one walk with preallocated double buffers; no allocation happens
/// after construction as long as the step budget is respected.
class Evolver {
 public:
  /// `max_steps` sizes the buffers; `kernel` defaults to the dispatched one.
  explicit Evolver(WalkerState initial, int max_steps,
                   kernels::ApplyCoinFn kernel = nullptr);

  /// One coin-then-shift update. Throws std::invalid_argument if the coin
  /// fails the unitarity invariant.
  void step(const CoinOperator& coin);

  const WalkerState& state() const { return cur_; }
  WalkerState take_state() { return std::move(cur_); }

 private:
  WalkerState cur_;
  WalkerState scratch_;
  kernels::ApplyCoinFn kernel_;
};

/// Single coin-then-shift update of Eq-style dynamics: the coin mixes the
/// chirality amplitudes at every site, then L components move to x-1 and R
/// components to x+1. Throws std::invalid_argument on a non-unitary coin.
WalkerState step(const WalkerState& state, const CoinOperator& coin);

/// Applies `steps` game steps, the coin at step k being
/// game_coin(sequence.at_step(k), phases). Throws std::domain_error if
/// steps < 1.
WalkerState evolve(const WalkerState& initial, const GameSequence& sequence,
                   const PhasePair& phases, int steps);

/// (t, <x>) for t = 1..t_max from the standard initial state, computed from
/// one evolving state. Throws std::domain_error if t_max < 1.
std::vector<std::pair<int, double>> expectation_series(
    const GameSequence& sequence, const PhasePair& phases, int t_max);

}  // namespace qwalk
