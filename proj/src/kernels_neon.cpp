#include <arm_neon.h>

#include "qwalk/kernels.hpp"

#include "kernels_site.hpp"

namespace qwalk::kernels {

namespace {

// c = a * u for one interleaved complex double per register, with the same
// lane arithmetic as the AVX2 addsub pattern: flipping the sign bit of the
// even lane of t2 is exact, so t1 + t2' == [t1.0 - t2.0, t1.1 + t2.1].
inline float64x2_t cmul(float64x2_t a, float64x2_t as, float64x2_t u_re,
                        float64x2_t u_im) {
  const uint64x2_t negate_even = {0x8000000000000000ULL, 0ULL};
  const float64x2_t t1 = vmulq_f64(a, u_re);
  float64x2_t t2 = vmulq_f64(as, u_im);
  t2 = vreinterpretq_f64_u64(
      veorq_u64(vreinterpretq_u64_f64(t2), negate_even));
  return vaddq_f64(t1, t2);
}

}  // namespace

void apply_coin_neon(const CoinOperator& u, const cplx* inL, const cplx* inR,
                     std::size_t n, cplx* outL, cplx* outR) {
  const double* pL = reinterpret_cast<const double*>(inL);
  const double* pR = reinterpret_cast<const double*>(inR);
  double* qL = reinterpret_cast<double*>(outL);
  double* qR = reinterpret_cast<double*>(outR);

  const float64x2_t ll_re = vdupq_n_f64(u.ll.real());
  const float64x2_t ll_im = vdupq_n_f64(u.ll.imag());
  const float64x2_t lr_re = vdupq_n_f64(u.lr.real());
  const float64x2_t lr_im = vdupq_n_f64(u.lr.imag());
  const float64x2_t rl_re = vdupq_n_f64(u.rl.real());
  const float64x2_t rl_im = vdupq_n_f64(u.rl.imag());
  const float64x2_t rr_re = vdupq_n_f64(u.rr.real());
  const float64x2_t rr_im = vdupq_n_f64(u.rr.imag());

  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t aL = vld1q_f64(pL + 2 * i);
    const float64x2_t aR = vld1q_f64(pR + 2 * i);
    const float64x2_t aLs = vextq_f64(aL, aL, 1);
    const float64x2_t aRs = vextq_f64(aR, aR, 1);

    const float64x2_t l = vaddq_f64(cmul(aL, aLs, ll_re, ll_im),
                                    cmul(aR, aRs, lr_re, lr_im));
    const float64x2_t r = vaddq_f64(cmul(aL, aLs, rl_re, rl_im),
                                    cmul(aR, aRs, rr_re, rr_im));

    vst1q_f64(qL + 2 * i, l);
    vst1q_f64(qR + 2 * i, r);
  }
}

}  // namespace qwalk::kernels
