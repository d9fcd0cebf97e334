// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace bayesint::kernels {

enum class Isa { Scalar, Avx2 };

// True when the running CPU reports AVX2.
bool cpu_has_avx2();

// Variant selected for this process: AVX2 when compiled in and supported,
// unless the environment variable BAYESINT_FORCE_SCALAR is set. Decided
// once, on first use.
Isa active_isa();

const char* isa_name(Isa isa);

}  // namespace bayesint::kernels
