#include "qwalk/dense_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk {

namespace {

// Row-major square complex matrix with the minimal operations the oracle
// needs. Kept deliberately naive.
struct DenseMatrix {
  int dim = 0;
  std::vector<cplx> a;

  explicit DenseMatrix(int n) : dim(n), a(static_cast<std::size_t>(n) * n) {}

  cplx& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
  cplx at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * dim + c];
  }

  static DenseMatrix identity(int n) {
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i) {
      m.at(i, i) = 1.0;
    }
    return m;
  }
};

DenseMatrix multiply(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  DenseMatrix out(lhs.dim);
  for (int r = 0; r < lhs.dim; ++r) {
    for (int c = 0; c < lhs.dim; ++c) {
      cplx sum = 0.0;
      for (int k = 0; k < lhs.dim; ++k) {
        sum += lhs.at(r, k) * rhs.at(k, c);
      }
      out.at(r, c) = sum;
    }
  }
  return out;
}

// One coin-then-shift step as a dense matrix on `n_sites` cyclic sites.
// Basis index = 2*site + chirality (L=0, R=1). The coin is built from the
// phase-coin formula directly so this route shares nothing with the coin
// module.
DenseMatrix step_matrix(int n_sites, double phase) {
  // i e^{+-i phase} / sqrt(2) on the off-diagonals.
  const double s = std::sqrt(0.5);
  const cplx u_ll(s, 0.0);
  const cplx u_lr(-s * std::sin(phase), s * std::cos(phase));
  const cplx u_rl(s * std::sin(phase), s * std::cos(phase));
  const cplx u_rr(s, 0.0);

  DenseMatrix m(2 * n_sites);
  for (int site = 0; site < n_sites; ++site) {
    const int left_dest = (site - 1 + n_sites) % n_sites;
    const int right_dest = (site + 1) % n_sites;
    // Column 2*site + c: amplitude entering as chirality c at this site.
    m.at(2 * left_dest + 0, 2 * site + 0) = u_ll;
    m.at(2 * left_dest + 0, 2 * site + 1) = u_lr;
    m.at(2 * right_dest + 1, 2 * site + 0) = u_rl;
    m.at(2 * right_dest + 1, 2 * site + 1) = u_rr;
  }
  return m;
}

void check_steps(int steps) {
  if (steps < 0 || steps > kOracleMaxSteps) {
    throw std::domain_error("dense oracle handles 0 to 12 steps only");
  }
}

}  // namespace

std::vector<cplx> dense_oracle_matrix(const GameSequence& sequence,
                                      const PhasePair& phases, int steps) {
  check_steps(steps);
  const int n_sites = 2 * steps + 1;
  DenseMatrix total = DenseMatrix::identity(2 * n_sites);
  for (int k = 0; k < steps; ++k) {
    const double phase = sequence.at_step(static_cast<std::size_t>(k)) ==
                                 Game::A
                             ? phases.alpha
                             : phases.beta;
    total = multiply(step_matrix(n_sites, phase), total);
  }
  return std::move(total.a);
}

WalkerState dense_oracle_evolve(const WalkerState& initial,
                                const GameSequence& sequence,
                                const PhasePair& phases, int steps) {
  check_steps(steps);
  if (initial.t != 0) {
    throw std::invalid_argument("dense oracle expects a t=0 initial state");
  }
  if (steps == 0) {
    return initial;
  }

  const int n_sites = 2 * steps + 1;
  const int dim = 2 * n_sites;
  const std::vector<cplx> total =
      dense_oracle_matrix(sequence, phases, steps);

  // Initial state sits at x = 0, i.e. site index `steps`.
  std::vector<cplx> vec(static_cast<std::size_t>(dim));
  vec[2 * steps + 0] = initial.left[0];
  vec[2 * steps + 1] = initial.right[0];

  std::vector<cplx> out(static_cast<std::size_t>(dim));
  for (int r = 0; r < dim; ++r) {
    cplx sum = 0.0;
    for (int c = 0; c < dim; ++c) {
      sum += total[static_cast<std::size_t>(r) * dim + c] * vec[c];
    }
    out[r] = sum;
  }

  WalkerState result;
  result.t = steps;
  result.left.resize(n_sites);
  result.right.resize(n_sites);
  for (int i = 0; i < n_sites; ++i) {
    result.left[i] = out[2 * i + 0];
    result.right[i] = out[2 * i + 1];
  }
  return result;
}

}  // namespace qwalk
