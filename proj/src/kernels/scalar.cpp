#include "pframe/kernels.hpp"

#include <cmath>

namespace pframe::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

double sum_abs_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::fabs(a[i]);
    return acc;
}

double sum_sq_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
    return acc;
}

double sum_sqrt_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::sqrt(a[i]);
    return acc;
}

double max_val_scalar(const double* a, std::size_t n) {
    double m = a[0];
    for (std::size_t i = 1; i < n; ++i)
        if (a[i] > m) m = a[i];
    return m;
}

double max_abs_scalar(const double* a, std::size_t n) {
    double m = std::fabs(a[0]);
    for (std::size_t i = 1; i < n; ++i) {
        const double v = std::fabs(a[i]);
        if (v > m) m = v;
    }
    return m;
}

void sq_mag_interleaved_scalar(const double* z, std::size_t n, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double re = z[2 * i];
        const double im = z[2 * i + 1];
        out[i] = re * re + im * im;
    }
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{
        "scalar",
        dot_scalar,
        sum_scalar,
        sum_abs_scalar,
        sum_sq_scalar,
        sum_sqrt_scalar,
        max_val_scalar,
        max_abs_scalar,
        sq_mag_interleaved_scalar,
    };
    return ops;
}

} // namespace pframe::kernels
