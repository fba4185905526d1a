// Copyright 2026 The qwgan developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * AVX2+FMA kernels. Compiled with -mavx2 -mfma in its own translation unit;
 * only reached after a runtime cpuid check in dispatch.cpp.
 *
 * Layout notes: a __m256d holds two interleaved complex<double> values
 * [re0, im0, re1, im1]. Pairs (i, i^1) of amplitude indices share a 256-bit
 * lane, which is why several kernels special-case masks with bit 0 set.
 */
#include <bit>
#include <cstddef>
#include <immintrin.h>

#include "qwgan/simd/kernels.hpp"

namespace qwgan::simd {

const Kernels &scalar_kernels();

namespace {

inline __m256d swap_re_im(__m256d x) { return _mm256_permute_pd(x, 0b0101); }

/// (cr + i*ci) * x for two packed complex values.
inline __m256d cmul_const(__m256d cr, __m256d ci, __m256d x) {
    return _mm256_fmaddsub_pd(cr, x, _mm256_mul_pd(ci, swap_re_im(x)));
}

/// Lane-wise complex product w * x (w packed like x).
inline __m256d cmul(__m256d w, __m256d x) {
    const __m256d wr = _mm256_movedup_pd(w);
    const __m256d wi = _mm256_permute_pd(w, 0b1111);
    return _mm256_fmaddsub_pd(wr, x, _mm256_mul_pd(wi, swap_re_im(x)));
}

/// conj(y) * x, lane-wise.
inline __m256d cmul_conj(__m256d y, __m256d x) {
    const __m256d yr = _mm256_movedup_pd(y);
    const __m256d yi = _mm256_permute_pd(y, 0b1111);
    return _mm256_fmsubadd_pd(yr, x, _mm256_mul_pd(yi, swap_re_im(x)));
}

/// Swap the two complex values of a 256-bit register.
inline __m256d swap_pair(__m256d x) { return _mm256_permute2f128_pd(x, x, 0x01); }

inline cplx reduce_complex(__m256d acc) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    return {lane[0] + lane[2], lane[1] + lane[3]};
}

cplx ipow(unsigned k) {
    switch (k & 3u) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

void apply_matrix2_avx2(cplx *amps, std::size_t dim, std::size_t tmask,
                        const cplx *m) {
    if (tmask < 2 || dim < 4) {
        scalar_kernels().apply_matrix2(amps, dim, tmask, m);
        return;
    }
    auto *p = reinterpret_cast<double *>(amps);
    const __m256d m00r = _mm256_set1_pd(m[0].real());
    const __m256d m00i = _mm256_set1_pd(m[0].imag());
    const __m256d m01r = _mm256_set1_pd(m[1].real());
    const __m256d m01i = _mm256_set1_pd(m[1].imag());
    const __m256d m10r = _mm256_set1_pd(m[2].real());
    const __m256d m10i = _mm256_set1_pd(m[2].imag());
    const __m256d m11r = _mm256_set1_pd(m[3].real());
    const __m256d m11i = _mm256_set1_pd(m[3].imag());
    for (std::size_t base = 0; base < dim; base += 2 * tmask) {
        for (std::size_t off = 0; off < tmask; off += 2) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + tmask;
            const __m256d a0 = _mm256_loadu_pd(p + 2 * i0);
            const __m256d a1 = _mm256_loadu_pd(p + 2 * i1);
            const __m256d r0 = _mm256_add_pd(cmul_const(m00r, m00i, a0),
                                             cmul_const(m01r, m01i, a1));
            const __m256d r1 = _mm256_add_pd(cmul_const(m10r, m10i, a0),
                                             cmul_const(m11r, m11i, a1));
            _mm256_storeu_pd(p + 2 * i0, r0);
            _mm256_storeu_pd(p + 2 * i1, r1);
        }
    }
}

void apply_controlled_matrix2_avx2(cplx *amps, std::size_t dim,
                                   std::size_t cmask, std::size_t tmask,
                                   const cplx *m) {
    const std::size_t m1 = cmask < tmask ? cmask : tmask;
    if (m1 < 2 || dim < 8) {
        scalar_kernels().apply_controlled_matrix2(amps, dim, cmask, tmask, m);
        return;
    }
    const std::size_t m2 = cmask < tmask ? tmask : cmask;
    const std::size_t lo1 = m1 - 1;
    const std::size_t lo2 = m2 - 1;
    auto *p = reinterpret_cast<double *>(amps);
    const __m256d m00r = _mm256_set1_pd(m[0].real());
    const __m256d m00i = _mm256_set1_pd(m[0].imag());
    const __m256d m01r = _mm256_set1_pd(m[1].real());
    const __m256d m01i = _mm256_set1_pd(m[1].imag());
    const __m256d m10r = _mm256_set1_pd(m[2].real());
    const __m256d m10i = _mm256_set1_pd(m[2].imag());
    const __m256d m11r = _mm256_set1_pd(m[3].real());
    const __m256d m11i = _mm256_set1_pd(m[3].imag());
    // m1 >= 2 keeps bit 0 of h below both inserted bits, so (h, h+1)
    // expand to adjacent amplitude indices.
    for (std::size_t h = 0; h < dim / 4; h += 2) {
        std::size_t i = ((h & ~lo1) << 1) | (h & lo1);
        i = ((i & ~lo2) << 1) | (i & lo2);
        const std::size_t i0 = i | cmask;
        const std::size_t i1 = i0 | tmask;
        const __m256d a0 = _mm256_loadu_pd(p + 2 * i0);
        const __m256d a1 = _mm256_loadu_pd(p + 2 * i1);
        const __m256d r0 = _mm256_add_pd(cmul_const(m00r, m00i, a0),
                                         cmul_const(m01r, m01i, a1));
        const __m256d r1 = _mm256_add_pd(cmul_const(m10r, m10i, a0),
                                         cmul_const(m11r, m11i, a1));
        _mm256_storeu_pd(p + 2 * i0, r0);
        _mm256_storeu_pd(p + 2 * i1, r1);
    }
}

void apply_parity_phase_avx2(cplx *amps, std::size_t dim, std::size_t zmask,
                             cplx even, cplx odd) {
    if (dim < 2) {
        scalar_kernels().apply_parity_phase(amps, dim, zmask, even, odd);
        return;
    }
    auto *p = reinterpret_cast<double *>(amps);
    const bool flip = (zmask & 1u) != 0;
    const cplx lane1_even = flip ? odd : even;
    const cplx lane1_odd = flip ? even : odd;
    // factor vector when the high-bit parity of the pair is even / odd
    const __m256d f_even = _mm256_setr_pd(even.real(), even.imag(),
                                          lane1_even.real(), lane1_even.imag());
    const __m256d f_odd = _mm256_setr_pd(odd.real(), odd.imag(),
                                         lane1_odd.real(), lane1_odd.imag());
    const std::size_t zhi = zmask & ~std::size_t{1};
    for (std::size_t i = 0; i < dim; i += 2) {
        const bool par = (std::popcount(i & zhi) & 1u) != 0;
        const __m256d x = _mm256_loadu_pd(p + 2 * i);
        _mm256_storeu_pd(p + 2 * i, cmul(par ? f_odd : f_even, x));
    }
}

double pauli_expectation_avx2(const cplx *amps, std::size_t dim,
                              std::size_t xmask, std::size_t zmask,
                              unsigned y_count) {
    if (dim < 2) {
        return scalar_kernels().pauli_expectation(amps, dim, xmask, zmask,
                                                  y_count);
    }
    const auto *p = reinterpret_cast<const double *>(amps);
    const bool xswap = (xmask & 1u) != 0;
    const bool zflip = (zmask & 1u) != 0;
    const double s1e = zflip ? -1.0 : 1.0;
    const __m256d sign_even = _mm256_setr_pd(1.0, 1.0, s1e, s1e);
    const __m256d sign_odd = _mm256_setr_pd(-1.0, -1.0, -s1e, -s1e);
    const std::size_t zhi = zmask & ~std::size_t{1};
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t b = 0; b < dim; b += 2) {
        const __m256d x = _mm256_loadu_pd(p + 2 * b);
        const std::size_t src = (b ^ xmask) & ~std::size_t{1};
        __m256d y = _mm256_loadu_pd(p + 2 * src);
        if (xswap) {
            y = swap_pair(y);
        }
        const bool par = (std::popcount(b & zhi) & 1u) != 0;
        const __m256d prod = cmul_conj(y, x);
        acc = _mm256_fmadd_pd(prod, par ? sign_odd : sign_even, acc);
    }
    return (ipow(y_count) * reduce_complex(acc)).real();
}

void accumulate_pauli_avx2(const cplx *in, cplx *out, std::size_t dim,
                           std::size_t xmask, std::size_t zmask,
                           unsigned y_count, cplx coeff) {
    if (dim < 2) {
        scalar_kernels().accumulate_pauli(in, out, dim, xmask, zmask, y_count,
                                          coeff);
        return;
    }
    cplx c = coeff * ipow(y_count);
    if (std::popcount(xmask & zmask) & 1u) {
        c = -c;
    }
    const auto *pin = reinterpret_cast<const double *>(in);
    auto *pout = reinterpret_cast<double *>(out);
    const __m256d cr = _mm256_set1_pd(c.real());
    const __m256d ci = _mm256_set1_pd(c.imag());
    const bool xswap = (xmask & 1u) != 0;
    const bool zflip = (zmask & 1u) != 0;
    const double s1e = zflip ? -1.0 : 1.0;
    const __m256d sign_even = _mm256_setr_pd(1.0, 1.0, s1e, s1e);
    const __m256d sign_odd = _mm256_setr_pd(-1.0, -1.0, -s1e, -s1e);
    const std::size_t zhi = zmask & ~std::size_t{1};
    for (std::size_t j = 0; j < dim; j += 2) {
        const std::size_t src = (j ^ xmask) & ~std::size_t{1};
        __m256d w = _mm256_loadu_pd(pin + 2 * src);
        if (xswap) {
            w = swap_pair(w);
        }
        const bool par = (std::popcount(j & zhi) & 1u) != 0;
        const __m256d t = cmul_const(cr, ci, w);
        const __m256d o = _mm256_loadu_pd(pout + 2 * j);
        _mm256_storeu_pd(pout + 2 * j,
                         _mm256_fmadd_pd(t, par ? sign_odd : sign_even, o));
    }
}

cplx dot_conj_avx2(const cplx *a, const cplx *b, std::size_t dim) {
    if (dim < 2) {
        return scalar_kernels().dot_conj(a, b, dim);
    }
    const auto *pa = reinterpret_cast<const double *>(a);
    const auto *pb = reinterpret_cast<const double *>(b);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < dim; i += 2) {
        const __m256d x = _mm256_loadu_pd(pb + 2 * i);
        const __m256d y = _mm256_loadu_pd(pa + 2 * i);
        acc = _mm256_add_pd(acc, cmul_conj(y, x));
    }
    return reduce_complex(acc);
}

double dot_real_avx2(const double *a, const double *b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                               acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4),
                               _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                               acc0);
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, _mm256_add_pd(acc0, acc1));
    double acc = ((lane[0] + lane[1]) + (lane[2] + lane[3]));
    for (; i < n; ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

void axpy_real_avx2(double a, const double *x, double *y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r =
            _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i, r);
    }
    for (; i < n; ++i) {
        y[i] += a * x[i];
    }
}

} // namespace

const Kernels &avx2_kernels() {
    static const Kernels k{
        apply_matrix2_avx2,    apply_controlled_matrix2_avx2,
        apply_parity_phase_avx2, pauli_expectation_avx2,
        accumulate_pauli_avx2, dot_conj_avx2,
        dot_real_avx2,         axpy_real_avx2,
        "avx2",
    };
    return k;
}

} // namespace qwgan::simd
