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
 * Scalar reference kernels. These define the semantics; the SIMD variants
 * must match them within floating-point reassociation error.
 */
#include <bit>
#include <cstddef>

#include "qwgan/simd/kernels.hpp"

namespace qwgan::simd {

namespace {

// i^k for k in 0..3
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

void apply_matrix2_scalar(cplx *amps, std::size_t dim, std::size_t tmask,
                          const cplx *m) {
    const std::size_t lo = tmask - 1;
    const std::size_t hi = ~lo;
    for (std::size_t h = 0; h < dim / 2; ++h) {
        const std::size_t i0 = ((h & hi) << 1) | (h & lo);
        const std::size_t i1 = i0 | tmask;
        const cplx a0 = amps[i0];
        const cplx a1 = amps[i1];
        amps[i0] = m[0] * a0 + m[1] * a1;
        amps[i1] = m[2] * a0 + m[3] * a1;
    }
}

void apply_controlled_matrix2_scalar(cplx *amps, std::size_t dim,
                                     std::size_t cmask, std::size_t tmask,
                                     const cplx *m) {
    const std::size_t m1 = cmask < tmask ? cmask : tmask;
    const std::size_t m2 = cmask < tmask ? tmask : cmask;
    const std::size_t lo1 = m1 - 1;
    const std::size_t lo2 = m2 - 1;
    for (std::size_t h = 0; h < dim / 4; ++h) {
        std::size_t i = ((h & ~lo1) << 1) | (h & lo1);
        i = ((i & ~lo2) << 1) | (i & lo2);
        const std::size_t i0 = i | cmask;
        const std::size_t i1 = i0 | tmask;
        const cplx a0 = amps[i0];
        const cplx a1 = amps[i1];
        amps[i0] = m[0] * a0 + m[1] * a1;
        amps[i1] = m[2] * a0 + m[3] * a1;
    }
}

void apply_parity_phase_scalar(cplx *amps, std::size_t dim, std::size_t zmask,
                               cplx even, cplx odd) {
    for (std::size_t i = 0; i < dim; ++i) {
        amps[i] *= (std::popcount(i & zmask) & 1u) ? odd : even;
    }
}

double pauli_expectation_scalar(const cplx *amps, std::size_t dim,
                                std::size_t xmask, std::size_t zmask,
                                unsigned y_count) {
    cplx acc{0.0, 0.0};
    for (std::size_t b = 0; b < dim; ++b) {
        const double sign = (std::popcount(b & zmask) & 1u) ? -1.0 : 1.0;
        acc += std::conj(amps[b ^ xmask]) * (sign * amps[b]);
    }
    return (ipow(y_count) * acc).real();
}

void accumulate_pauli_scalar(const cplx *in, cplx *out, std::size_t dim,
                             std::size_t xmask, std::size_t zmask,
                             unsigned y_count, cplx coeff) {
    // Gather form: out[j] += C * (-1)^popcount(j & zmask) * in[j ^ xmask]
    // with C folding in i^y_count and the parity of xmask & zmask.
    cplx c = coeff * ipow(y_count);
    if (std::popcount(xmask & zmask) & 1u) {
        c = -c;
    }
    for (std::size_t j = 0; j < dim; ++j) {
        const double sign = (std::popcount(j & zmask) & 1u) ? -1.0 : 1.0;
        out[j] += c * (sign * in[j ^ xmask]);
    }
}

cplx dot_conj_scalar(const cplx *a, const cplx *b, std::size_t dim) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < dim; ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double dot_real_scalar(const double *a, const double *b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

void axpy_real_scalar(double a, const double *x, double *y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += a * x[i];
    }
}

} // namespace

const Kernels &scalar_kernels() {
    static const Kernels k{
        apply_matrix2_scalar,    apply_controlled_matrix2_scalar,
        apply_parity_phase_scalar, pauli_expectation_scalar,
        accumulate_pauli_scalar, dot_conj_scalar,
        dot_real_scalar,         axpy_real_scalar,
        "scalar",
    };
    return k;
}

} // namespace qwgan::simd
