#pragma once

#include <cstdint>
#include <vector>

namespace e2m {

// Iterative radix-2 transforms on interleaved (re, im) buffers.
// Sizes must be powers of two.

bool is_pow2(int64_t n);

// In-place complex FFT of length n on interleaved data (2n doubles).
// invert=true computes the inverse including the 1/n scale.
void fft_complex_inplace(double* data, int64_t n, bool invert);

// Real-input transform: x has n reals, out gets n/2+1 interleaved complex
// bins (the non-negative frequencies).
void rfft_raw(const double* x, int64_t n, double* out);

// Inverse of rfft_raw: spec has n/2+1 interleaved complex bins, out gets n
// reals. Imaginary parts of bins 0 and n/2 are ignored (Hermitian input).
void irfft_raw(const double* spec, int64_t n, double* out);

}  // namespace e2m
