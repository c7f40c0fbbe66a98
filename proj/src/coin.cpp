#include "qwalk/coin.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qwalk {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

void require_rho_in_range(double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    std::ostringstream msg;
    msg << "rho must be in [0, 1], got " << rho;
    throw std::domain_error(msg.str());
  }
}

}  // namespace

double unitarity_error(const CoinOperator& u) {
  // Entries of U^dagger U - I.
  const cplx g00 = std::conj(u.ll) * u.ll + std::conj(u.rl) * u.rl - 1.0;
  const cplx g01 = std::conj(u.ll) * u.lr + std::conj(u.rl) * u.rr;
  const cplx g10 = std::conj(u.lr) * u.ll + std::conj(u.rr) * u.rl;
  const cplx g11 = std::conj(u.lr) * u.lr + std::conj(u.rr) * u.rr - 1.0;
  return std::max(std::max(std::abs(g00), std::abs(g01)),
                  std::max(std::abs(g10), std::abs(g11)));
}

bool is_unitary(const CoinOperator& u, double tol) {
  return unitarity_error(u) <= tol;
}

CoinOperator make_general_coin(double rho, double theta, double phi) {
  require_rho_in_range(rho);
  const double sr = std::sqrt(rho);
  const double sq = std::sqrt(1.0 - rho);
  return CoinOperator{
      -std::polar(sr, theta + phi), std::polar(sq, phi),
      std::polar(sq, theta), sr,
  };
}

CoinOperator make_phase_coin(double rho, double alpha) {
  require_rho_in_range(rho);
  const double sr = std::sqrt(rho);
  const double sq = std::sqrt(1.0 - rho);
  // i e^{+-i alpha} = e^{i(pi/2 +- alpha)}
  return CoinOperator{
      sr, std::polar(sq, kHalfPi + alpha),
      std::polar(sq, kHalfPi - alpha), sr,
  };
}

CoinOperator game_coin(Game game, const PhasePair& phases) {
  return make_phase_coin(0.5, game == Game::A ? phases.alpha : phases.beta);
}

}  // namespace qwalk
