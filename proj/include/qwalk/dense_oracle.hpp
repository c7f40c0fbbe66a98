#pragma once

#include <vector>

#include "qwalk/evolution.hpp"
#include "qwalk/walker_state.hpp"

namespace qwalk {

/// Verification oracle: evolves a t=0 state by building each step operator
/// as an explicit dense unitary on the window [-steps, steps] and composing
/// the matrices naively. Shares no code with the kernel path, including the
/// coin construction. Deliberately small scale: steps must be <= 12.
///
/// The shift wraps cyclically at the window edge, which keeps every step
/// matrix exactly unitary; the wraparound entries are unreachable from a
/// t=0 state within `steps` steps, so the result equals the walk on the
/// unbounded line.
inline constexpr int kOracleMaxSteps = 12;

/// The composed evolution matrix, dimension 2*(2*steps+1) square,
/// row-major; basis index 2*i + c with site i (x = i - steps) and
/// chirality c (L=0, R=1).
std::vector<cplx> dense_oracle_matrix(const GameSequence& sequence,
                                      const PhasePair& phases, int steps);

/// Applies the composed matrix to `initial` (which must have t == 0).
/// steps == 0 returns the input unchanged. Throws std::domain_error for
/// steps outside [0, 12] and std::invalid_argument if initial.t != 0.
WalkerState dense_oracle_evolve(const WalkerState& initial,
                                const GameSequence& sequence,
                                const PhasePair& phases, int steps);

}  // namespace qwalk
