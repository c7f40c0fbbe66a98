#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "qwalk/coin.hpp"

namespace qwalk::kernels {

/// Applies the coin to every site of a contiguous window:
///   outL[i] = u.ll * inL[i] + u.lr * inR[i]
///   outR[i] = u.rl * inL[i] + u.rr * inR[i]
/// The conditional shift is realised by where the caller places outL/outR
/// in the grown destination arrays. Output ranges must not alias the inputs.
///
/// Every variant performs the identical sequence of IEEE-754 operations per
/// site, so all kernels produce bit-identical results.
using ApplyCoinFn = void (*)(const CoinOperator& u, const cplx* inL,
                             const cplx* inR, std::size_t n, cplx* outL,
                             cplx* outR);

void apply_coin_scalar(const CoinOperator& u, const cplx* inL, const cplx* inR,
                       std::size_t n, cplx* outL, cplx* outR);

#if defined(QWALK_KERNEL_AVX2)
void apply_coin_avx2(const CoinOperator& u, const cplx* inL, const cplx* inR,
                     std::size_t n, cplx* outL, cplx* outR);
#endif

#if defined(QWALK_KERNEL_NEON)
void apply_coin_neon(const CoinOperator& u, const cplx* inL, const cplx* inR,
                     std::size_t n, cplx* outL, cplx* outR);
#endif

struct KernelInfo {
  std::string_view name;
  ApplyCoinFn fn;
};

/// All kernels compiled into this build, scalar first. SIMD variants are
/// listed even if the running CPU cannot execute them; use `supported()`.
std::span<const KernelInfo> available_kernels();

/// True if the running CPU can execute the named kernel.
bool supported(std::string_view name);

/// The kernel used by default: the fastest supported variant.
ApplyCoinFn active_kernel();
std::string_view active_kernel_name();

/// Overrides the dispatch choice ("scalar", "avx2", "neon", or "auto").
/// Returns false if the name is unknown or unsupported on this CPU.
/// Not thread safe; call before starting any evolution.
bool set_active_kernel(std::string_view name);

}  // namespace qwalk::kernels
