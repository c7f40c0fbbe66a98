#pragma once

#include "qwalk/coin.hpp"

namespace qwalk::kernels::detail {

// One-site coin application, written so that each output component is
// (mul, mul, sub/add, add) in exactly the per-lane order of the SIMD
// variants. Kernel translation units are compiled with -ffp-contract=off,
// so no FMA contraction can break the bit-level match.
inline void apply_coin_site(const CoinOperator& u, cplx aL, cplx aR,
                            cplx& outL, cplx& outR) {
  const double lre = (aL.real() * u.ll.real() - aL.imag() * u.ll.imag()) +
                     (aR.real() * u.lr.real() - aR.imag() * u.lr.imag());
  const double lim = (aL.imag() * u.ll.real() + aL.real() * u.ll.imag()) +
                     (aR.imag() * u.lr.real() + aR.real() * u.lr.imag());
  const double rre = (aL.real() * u.rl.real() - aL.imag() * u.rl.imag()) +
                     (aR.real() * u.rr.real() - aR.imag() * u.rr.imag());
  const double rim = (aL.imag() * u.rl.real() + aL.real() * u.rl.imag()) +
                     (aR.imag() * u.rr.real() + aR.real() * u.rr.imag());
  outL = cplx(lre, lim);
  outR = cplx(rre, rim);
}

}  // namespace qwalk::kernels::detail
