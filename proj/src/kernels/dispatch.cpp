#include "pframe/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace pframe::kernels {

const Ops* avx2_ops_impl(); // defined in avx2.cpp (nullptr when not compiled in)

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Ops& select() {
    const char* env = std::getenv("PFRAME_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return scalar_ops();
    const Ops* wide = avx2_ops();
    if (env && std::strcmp(env, "avx2") == 0 && wide) return *wide;
    if (env) return scalar_ops(); // unknown or unavailable request
    return wide ? *wide : scalar_ops();
}

} // namespace

const Ops* avx2_ops() {
    static const Ops* ops = cpu_has_avx2() ? avx2_ops_impl() : nullptr;
    return ops;
}

const Ops& active_ops() {
    static const Ops& ops = select();
    return ops;
}

double sum_mag_pow(const double* m2, std::size_t n, double p) {
    if (p == 2.0) return sum(m2, n);
    if (p == 1.0) return sum_sqrt(m2, n);
    if (p == 4.0) return sum_sq(m2, n);
    const double half_p = 0.5 * p;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::pow(m2[i], half_p);
    return acc;
}

} // namespace pframe::kernels
