#include <immintrin.h>

#include "qwalk/kernels.hpp"

#include "kernels_site.hpp"

namespace qwalk::kernels {

namespace {

// c = a * u for two interleaved complex doubles per register:
//   even lanes: a.re*u.re - a.im*u.im
//   odd lanes:  a.im*u.re + a.re*u.im
// `as` is `a` with re/im swapped in each pair.
inline __m256d cmul(__m256d a, __m256d as, __m256d u_re, __m256d u_im) {
  return _mm256_addsub_pd(_mm256_mul_pd(a, u_re), _mm256_mul_pd(as, u_im));
}

}  // namespace

void apply_coin_avx2(const CoinOperator& u, const cplx* inL, const cplx* inR,
                     std::size_t n, cplx* outL, cplx* outR) {
  const double* pL = reinterpret_cast<const double*>(inL);
  const double* pR = reinterpret_cast<const double*>(inR);
  double* qL = reinterpret_cast<double*>(outL);
  double* qR = reinterpret_cast<double*>(outR);

  const __m256d ll_re = _mm256_set1_pd(u.ll.real());
  const __m256d ll_im = _mm256_set1_pd(u.ll.imag());
  const __m256d lr_re = _mm256_set1_pd(u.lr.real());
  const __m256d lr_im = _mm256_set1_pd(u.lr.imag());
  const __m256d rl_re = _mm256_set1_pd(u.rl.real());
  const __m256d rl_im = _mm256_set1_pd(u.rl.imag());
  const __m256d rr_re = _mm256_set1_pd(u.rr.real());
  const __m256d rr_im = _mm256_set1_pd(u.rr.imag());

  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d aL = _mm256_loadu_pd(pL + 2 * i);
    const __m256d aR = _mm256_loadu_pd(pR + 2 * i);
    const __m256d aLs = _mm256_permute_pd(aL, 0x5);  // swap re/im per pair
    const __m256d aRs = _mm256_permute_pd(aR, 0x5);

    const __m256d l = _mm256_add_pd(cmul(aL, aLs, ll_re, ll_im),
                                    cmul(aR, aRs, lr_re, lr_im));
    const __m256d r = _mm256_add_pd(cmul(aL, aLs, rl_re, rl_im),
                                    cmul(aR, aRs, rr_re, rr_im));

    _mm256_storeu_pd(qL + 2 * i, l);
    _mm256_storeu_pd(qR + 2 * i, r);
  }
  for (; i < n; ++i) {
    detail::apply_coin_site(u, inL[i], inR[i], outL[i], outR[i]);
  }
}

}  // namespace qwalk::kernels
