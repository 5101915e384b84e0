#pragma once

#include <cstddef>

namespace pframe::kernels {

/// Table of the data-parallel reduction kernels the library is built on.
/// One scalar reference implementation always exists; wider variants are
/// compiled per-ISA and selected once at runtime.
struct Ops {
    const char* name;
    double (*dot)(const double*, const double*, std::size_t);
    double (*sum)(const double*, std::size_t);
    double (*sum_abs)(const double*, std::size_t);
    double (*sum_sq)(const double*, std::size_t);
    double (*sum_sqrt)(const double*, std::size_t); // inputs must be >= 0
    double (*max_val)(const double*, std::size_t);  // n >= 1
    double (*max_abs)(const double*, std::size_t);  // n >= 1
    // out[i] = re(z_i)^2 + im(z_i)^2 from interleaved (re,im) pairs
    void (*sq_mag_interleaved)(const double*, std::size_t, double*);
};

/// Portable reference kernels.
const Ops& scalar_ops();

/// AVX2+FMA kernels, or nullptr when not compiled in / not supported by the CPU.
const Ops* avx2_ops();

/// Kernel table in use. Chosen once: AVX2 when available, else scalar.
/// Environment override PFRAME_KERNELS=scalar|avx2 (used by equivalence tests).
const Ops& active_ops();

inline double dot(const double* a, const double* b, std::size_t n) { return active_ops().dot(a, b, n); }
inline double sum(const double* a, std::size_t n) { return active_ops().sum(a, n); }
inline double sum_abs(const double* a, std::size_t n) { return active_ops().sum_abs(a, n); }
inline double sum_sq(const double* a, std::size_t n) { return active_ops().sum_sq(a, n); }
inline double sum_sqrt(const double* a, std::size_t n) { return active_ops().sum_sqrt(a, n); }
inline double max_val(const double* a, std::size_t n) { return active_ops().max_val(a, n); }
inline double max_abs(const double* a, std::size_t n) { return active_ops().max_abs(a, n); }
inline void sq_mag_interleaved(const double* z, std::size_t n, double* out) {
    active_ops().sq_mag_interleaved(z, n, out);
}

/// Sum of m2[i]^(p/2) over squared magnitudes m2 >= 0.
/// Routes p = 1, 2, 4 through the dispatch table; general p stays scalar
/// (libm pow has no vector form here).
double sum_mag_pow(const double* m2, std::size_t n, double p);

} // namespace pframe::kernels
