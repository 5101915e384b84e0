#include "pframe/spaces.hpp"

#include <algorithm>
#include <cmath>

#include "pframe/kernels.hpp"
#include "pframe/rng.hpp"

namespace pframe {

NormedSpace NormedSpace::lq(std::size_t dim, double q, Field field) {
    if (dim < 1) throw ConfigError("space dimension must be >= 1");
    if (!(q >= 1.0)) throw ConfigError("norm exponent q must satisfy q >= 1");
    NormedSpace s;
    s.dim = dim;
    s.field = field;
    s.kind = NormKind::Lq;
    s.q = q;
    return s;
}

NormedSpace NormedSpace::weighted_lq(std::size_t dim, double q, std::vector<double> weights,
                                     Field field) {
    if (dim < 1) throw ConfigError("space dimension must be >= 1");
    if (!(q >= 1.0)) throw ConfigError("norm exponent q must satisfy q >= 1");
    if (std::isinf(q)) throw ConfigError("weighted norms require finite q");
    if (weights.size() != dim) throw ConfigError("weight count must equal dim");
    for (double w : weights)
        if (!(w > 0.0)) throw ConfigError("weights must be strictly positive");
    NormedSpace s;
    s.dim = dim;
    s.field = field;
    s.kind = NormKind::WeightedLq;
    s.q = q;
    s.weights = std::move(weights);
    return s;
}

Vector make_vector(std::initializer_list<double> reals) {
    Vector v;
    v.coords.reserve(reals.size());
    for (double r : reals) v.coords.emplace_back(r, 0.0);
    return v;
}

Functional make_functional(std::initializer_list<double> reals) {
    Functional f;
    f.coords.reserve(reals.size());
    for (double r : reals) f.coords.emplace_back(r, 0.0);
    return f;
}

double conjugate_exponent(double q) {
    if (!(q >= 1.0)) throw ConfigError("exponent must satisfy q >= 1");
    if (q == 1.0) return kInfExponent;
    if (std::isinf(q)) return 1.0;
    return q / (q - 1.0);
}

LqDescriptor primal_descriptor(const NormedSpace& space) {
    return {space.q, space.weights};
}

LqDescriptor dual_descriptor(const NormedSpace& space) {
    const double qc = conjugate_exponent(space.q);
    if (space.kind == NormKind::Lq) return {qc, {}};
    // Weighted: sup |f(x)| over sum w|x|^q = 1 gives
    //   q > 1: (sum w^(1-q') |f|^q')^(1/q')
    //   q = 1: max |f_i| / w_i
    std::vector<double> wd(space.weights.size());
    if (space.q == 1.0) {
        for (std::size_t i = 0; i < wd.size(); ++i) wd[i] = 1.0 / space.weights[i];
        return {kInfExponent, std::move(wd)};
    }
    for (std::size_t i = 0; i < wd.size(); ++i) wd[i] = std::pow(space.weights[i], 1.0 - qc);
    return {qc, std::move(wd)};
}

namespace detail {

void check_dim(const NormedSpace& space, std::size_t len, const char* what) {
    if (len != space.dim) throw InputError(std::string(what) + ": dimension mismatch");
}

std::vector<double> sq_mags(std::span<const Complex> coords) {
    std::vector<double> m2(coords.size());
    kernels::sq_mag_interleaved(reinterpret_cast<const double*>(coords.data()), coords.size(),
                                m2.data());
    return m2;
}

} // namespace detail

double descriptor_norm(const LqDescriptor& d, std::span<const Complex> coords) {
    if (coords.empty()) throw InputError("empty coordinate array");
    std::vector<double> m2 = detail::sq_mags(coords);
    const bool weighted = !d.weights.empty();
    if (std::isinf(d.rho)) {
        if (!weighted) return std::sqrt(kernels::max_val(m2.data(), m2.size()));
        double m = 0.0;
        for (std::size_t i = 0; i < m2.size(); ++i)
            m = std::max(m, d.weights[i] * std::sqrt(m2[i]));
        return m;
    }
    if (!weighted) {
        const double s = kernels::sum_mag_pow(m2.data(), m2.size(), d.rho);
        return std::pow(s, 1.0 / d.rho);
    }
    double s = 0.0;
    for (std::size_t i = 0; i < m2.size(); ++i)
        s += d.weights[i] * std::pow(m2[i], 0.5 * d.rho);
    return std::pow(s, 1.0 / d.rho);
}

CoordVector descriptor_extremal(const LqDescriptor& d, std::span<const Complex> c) {
    const std::size_t n = c.size();
    if (n == 0) throw InputError("empty coordinate array");
    const bool weighted = !d.weights.empty();
    const auto weight = [&](std::size_t i) { return weighted ? d.weights[i] : 1.0; };
    const auto conj_phase = [](Complex v) {
        const double a = std::abs(v);
        return a == 0.0 ? Complex(1.0, 0.0) : Complex(std::conj(v) / a);
    };

    CoordVector y(n, Complex(0.0, 0.0));
    if (std::isinf(d.rho)) {
        // ||y|| = max w|y| = 1  ->  |y_i| = 1/w_i everywhere, phases aligned
        for (std::size_t i = 0; i < n; ++i) y[i] = conj_phase(c[i]) / weight(i);
        return y;
    }
    if (d.rho == 1.0) {
        // mass on the coordinate with the best |c_i|/w_i ratio
        std::size_t best = 0;
        double best_ratio = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = std::abs(c[i]) / weight(i);
            if (r > best_ratio) {
                best_ratio = r;
                best = i;
            }
        }
        y[best] = conj_phase(c[best]) / weight(best);
        return y;
    }
    // 1 < rho < inf: substitute u_i = w_i^(1/rho) y_i to reduce to the
    // unweighted Holder equality case |u_i| ~ |c~_i|^(rho'-1).
    const double rc = conjugate_exponent(d.rho);
    std::vector<double> mag(n);
    double norm_rc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ct = std::abs(c[i]) * std::pow(weight(i), -1.0 / d.rho);
        mag[i] = std::pow(ct, rc - 1.0);
        norm_rc += std::pow(ct, rc);
    }
    if (norm_rc == 0.0) {
        // c = 0: any unit point works; pick e_1 scaled to the weighted sphere
        y[0] = Complex(std::pow(weight(0), -1.0 / d.rho), 0.0);
        return y;
    }
    const double scale = std::pow(norm_rc, -(rc - 1.0) / rc);
    for (std::size_t i = 0; i < n; ++i)
        y[i] = conj_phase(c[i]) * (mag[i] * scale * std::pow(weight(i), -1.0 / d.rho));
    return y;
}

double norm(const NormedSpace& space, const Vector& x) {
    detail::check_dim(space, x.coords.size(), "norm");
    return descriptor_norm(primal_descriptor(space), x.coords);
}

double dual_norm(const NormedSpace& space, const Functional& f) {
    detail::check_dim(space, f.coords.size(), "dual_norm");
    return descriptor_norm(dual_descriptor(space), f.coords);
}

Complex pairing(const Functional& f, const Vector& x) {
    if (f.coords.size() != x.coords.size()) throw InputError("pairing: dimension mismatch");
    const std::size_t n = f.coords.size();
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) acc += f.coords[i] * x.coords[i];
    return acc;
}

namespace {

CoordVector gaussian_coords(const NormedSpace& space, GaussianSampler& g) {
    CoordVector v(space.dim);
    for (std::size_t i = 0; i < space.dim; ++i) {
        const double re = g();
        const double im = space.field == Field::Complex ? g() : 0.0;
        v[i] = Complex(re, im);
    }
    return v;
}

CoordVector normalized_gaussian(const NormedSpace& space, const LqDescriptor& d,
                                GaussianSampler& g) {
    for (;;) {
        CoordVector v = gaussian_coords(space, g);
        const double nv = descriptor_norm(d, v);
        if (nv > 1e-154) { // degenerate draws are resampled
            for (auto& z : v) z /= nv;
            return v;
        }
    }
}

} // namespace

std::vector<Vector> sample_unit_sphere(const NormedSpace& space, std::size_t count,
                                       std::uint64_t seed) {
    if (count < 1) throw ConfigError("sample count must be >= 1");
    const LqDescriptor d = primal_descriptor(space);
    GaussianSampler g(seed);
    std::vector<Vector> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) out.push_back({normalized_gaussian(space, d, g)});
    return out;
}

std::vector<Functional> sample_dual_unit_sphere(const NormedSpace& space, std::size_t count,
                                                std::uint64_t seed) {
    if (count < 1) throw ConfigError("sample count must be >= 1");
    const LqDescriptor d = dual_descriptor(space);
    GaussianSampler g(seed);
    std::vector<Functional> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) out.push_back({normalized_gaussian(space, d, g)});
    return out;
}

Vector norming_vector(const NormedSpace& space, const Functional& f) {
    detail::check_dim(space, f.coords.size(), "norming_vector");
    return {descriptor_extremal(primal_descriptor(space), f.coords)};
}

Functional norming_functional(const NormedSpace& space, const Vector& x) {
    detail::check_dim(space, x.coords.size(), "norming_functional");
    return {descriptor_extremal(dual_descriptor(space), x.coords)};
}

} // namespace pframe
