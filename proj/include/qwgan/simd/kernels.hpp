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
 * Data-parallel kernels over 2^n amplitude arrays.
 *
 * Every kernel exists in a scalar reference form and (on x86-64) an AVX2+FMA
 * form. The two are equivalence-tested against each other; the active set is
 * chosen once at runtime. All loops accumulate in a fixed order, so repeated
 * runs of the same binary on the same machine are bit-identical.
 *
 * Index conventions shared by all kernels:
 *  - amplitude arrays are interleaved std::complex<double> of length `dim`
 *  - a Pauli string is described by bit masks over the amplitude index:
 *      xmask  bits where the factor is X or Y (bit flip)
 *      zmask  bits where the factor is Z or Y (sign from bit parity)
 *      y_count  number of Y factors (contributes a global phase i^y_count)
 *    so  P|b> = i^y_count * (-1)^popcount(b & zmask) |b ^ xmask>.
 */
#pragma once

#include <complex>
#include <cstddef>

#include "qwgan/types.hpp"

namespace qwgan::simd {

enum class Backend { scalar, avx2 };

struct Kernels {
    /// amps <- (m (x) I) amps on the pair (i, i | tmask); m is row-major 2x2.
    void (*apply_matrix2)(cplx *amps, std::size_t dim, std::size_t tmask,
                          const cplx *m);

    /// Same, restricted to indices with the control bit set.
    void (*apply_controlled_matrix2)(cplx *amps, std::size_t dim,
                                     std::size_t cmask, std::size_t tmask,
                                     const cplx *m);

    /// amps[i] *= (popcount(i & zmask) even ? even : odd). Covers Z, RZ, RZZ.
    void (*apply_parity_phase)(cplx *amps, std::size_t dim, std::size_t zmask,
                               cplx even, cplx odd);

    /// Re <amps| P |amps> for the Pauli string given by the masks.
    double (*pauli_expectation)(const cplx *amps, std::size_t dim,
                                std::size_t xmask, std::size_t zmask,
                                unsigned y_count);

    /// out += coeff * P * in. out and in must not alias.
    void (*accumulate_pauli)(const cplx *in, cplx *out, std::size_t dim,
                             std::size_t xmask, std::size_t zmask,
                             unsigned y_count, cplx coeff);

    /// sum_i conj(a[i]) * b[i]
    cplx (*dot_conj)(const cplx *a, const cplx *b, std::size_t dim);

    /// sum_i a[i] * b[i]  (real vectors; used by the dense classical nets)
    double (*dot_real)(const double *a, const double *b, std::size_t n);

    /// y += a * x
    void (*axpy_real)(double a, const double *x, double *y, std::size_t n);

    const char *name;
};

/// Kernel set in use; resolved once (honoring QWGAN_SIMD=scalar|avx2|auto).
const Kernels &active();

Backend active_backend();

/// Forces a backend; throws std::invalid_argument if unsupported on this CPU.
void select_backend(Backend backend);

/// True when the CPU supports the AVX2+FMA path.
bool avx2_supported();

/// Direct access to a specific kernel set (equivalence tests).
const Kernels &kernels(Backend backend);

} // namespace qwgan::simd
