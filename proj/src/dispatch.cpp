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
#include <cstdlib>
#include <cstring>

#include "qwgan/simd/kernels.hpp"

namespace qwgan::simd {

const Kernels &scalar_kernels();
#if defined(QWGAN_HAVE_AVX2_TU)
const Kernels &avx2_kernels();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(QWGAN_HAVE_AVX2_TU) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend detect_default() {
    // QWGAN_SIMD=scalar|avx2|auto overrides auto-detection.
    if (const char *env = std::getenv("QWGAN_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) {
            return Backend::scalar;
        }
        if (std::strcmp(env, "avx2") == 0) {
            detail::require(cpu_has_avx2(),
                            "QWGAN_SIMD=avx2 but this CPU/build lacks AVX2");
            return Backend::avx2;
        }
    }
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

Backend g_backend = detect_default();

} // namespace

bool avx2_supported() { return cpu_has_avx2(); }

const Kernels &kernels(Backend backend) {
#if defined(QWGAN_HAVE_AVX2_TU)
    if (backend == Backend::avx2) {
        detail::require(cpu_has_avx2(), "AVX2 kernels not supported here");
        return avx2_kernels();
    }
#else
    detail::require(backend == Backend::scalar,
                    "AVX2 kernels not compiled into this build");
#endif
    return scalar_kernels();
}

const Kernels &active() { return kernels(g_backend); }

Backend active_backend() { return g_backend; }

void select_backend(Backend backend) {
    (void)kernels(backend); // validates support
    g_backend = backend;
}

} // namespace qwgan::simd
