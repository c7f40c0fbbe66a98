#pragma once

#include "qwalk/types.hpp"

namespace qwalk {

/// 2x2 unitary acting on the chirality space. Basis order is (L, R) for both
/// rows and columns; columns are indexed by the input chirality, so applying
/// the coin to amplitudes (aL, aR) gives (ll*aL + lr*aR, rl*aL + rr*aR).
/// This convention is the single source of truth for every module that
/// touches chirality.
struct CoinOperator {
  cplx ll, lr;
  cplx rl, rr;
};

/// Phases of the two games: game A uses alpha, game B uses beta.
/// The library accepts any real phase; the CLI warns outside [-pi/2, pi/2].
struct PhasePair {
  double alpha = 0.0;
  double beta = 0.0;
};

enum class Game : char { A = 'A', B = 'B' };

/// Max entrywise deviation of U^dagger U from the identity.
double unitarity_error(const CoinOperator& u);

bool is_unitary(const CoinOperator& u, double tol = kUnitaryTol);

/// General coin, in (L, R) order:
///   [[ -e^{i(theta+phi)} sqrt(rho), e^{i phi} sqrt(1-rho) ],
///    [ e^{i theta} sqrt(1-rho),     sqrt(rho) ]]
/// The position distribution it generates never depends on phi, and theta
/// enters only through theta + mu of the initial state.
/// Throws std::domain_error if rho is outside [0, 1].
CoinOperator make_general_coin(double rho, double theta, double phi);

/// Phase-biased coin, in (L, R) order:
///   [[ sqrt(rho),                  i e^{i alpha} sqrt(1-rho) ],
///    [ i e^{-i alpha} sqrt(1-rho), sqrt(rho) ]]
/// Equals make_general_coin(rho, pi/2 - alpha, pi/2 + alpha) exactly. A
/// single walk driven by this coin has the same position distribution as
/// one driven by the diagonal-phase variant e^{+-i alpha} sqrt(rho) (the
/// phase placement is gauge-equivalent there), but alternating two of
/// these coins is NOT gauge-equivalent: this is the placement for which
/// mixing two losing games can win.
/// At rho = 1/2, positive alpha drifts the walk left, negative alpha right.
/// Throws std::domain_error if rho is outside [0, 1].
CoinOperator make_phase_coin(double rho, double alpha);

/// Coin for one play of a game: rho is fixed at 1/2, the phase is
/// phases.alpha for game A and phases.beta for game B.
CoinOperator game_coin(Game game, const PhasePair& phases);

}  // namespace qwalk
