#include "qwalk/kernels.hpp"

#include "kernels_site.hpp"

namespace qwalk::kernels {

void apply_coin_scalar(const CoinOperator& u, const cplx* inL, const cplx* inR,
                       std::size_t n, cplx* outL, cplx* outR) {
  for (std::size_t i = 0; i < n; ++i) {
    detail::apply_coin_site(u, inL[i], inR[i], outL[i], outR[i]);
  }
}

}  // namespace qwalk::kernels
