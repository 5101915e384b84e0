#include "pframe/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "internal/packed_rows.hpp"
#include "pframe/kernels.hpp"
#include "pframe/rng.hpp"

namespace pframe {

namespace detail {

void check_frame(const AnalysisFrame& frame) {
    if (frame.functionals.empty()) throw ConfigError("frame must contain at least one functional");
    if (!(frame.p >= 1.0) || std::isinf(frame.p))
        throw ConfigError("frame exponent p must satisfy 1 <= p < inf");
    for (const auto& f : frame.functionals)
        check_dim(frame.space, f.coords.size(), "frame functional");
}

void check_same_pair(const AnalysisFrame& f, const AnalysisFrame& g) {
    if (!(f.space == g.space)) throw InputError("frames live on different spaces");
    if (f.p != g.p) throw InputError("frames have different exponents p");
}

} // namespace detail

AnalysisFrame make_coordinate_frame(double p, std::size_t dim,
                                    std::span<const std::vector<double>> splits, Field field) {
    if (splits.size() != dim) throw ConfigError("coordinate frame needs one split list per coordinate");
    AnalysisFrame frame;
    frame.space = NormedSpace::lq(dim, p, field);
    frame.p = p;
    for (std::size_t i = 0; i < dim; ++i) {
        const auto& ws = splits[i];
        if (ws.empty()) throw ConfigError("each coordinate needs at least one weight");
        double total = 0.0;
        for (double w : ws) {
            if (!(w > 0.0)) throw ConfigError("split weights must be strictly positive");
            total += w;
        }
        if (std::fabs(total - 1.0) > 1e-12)
            throw ConfigError("split weights per coordinate must sum to 1");
        for (double w : ws) {
            Functional f;
            f.coords.assign(dim, Complex(0.0, 0.0));
            f.coords[i] = Complex(std::pow(w, 1.0 / p), 0.0);
            frame.functionals.push_back(std::move(f));
        }
    }
    detail::check_frame(frame);
    return frame;
}

AnalysisFrame make_coordinate_frame(double p, std::size_t dim, Field field) {
    std::vector<std::vector<double>> splits(dim, std::vector<double>{1.0});
    return make_coordinate_frame(p, dim, splits, field);
}

AnalysisFrame make_split_coordinate_frame(double p, std::size_t dim, std::size_t n, Field field) {
    if (n < dim) throw ConfigError("split coordinate frame requires n >= dim");
    std::vector<std::vector<double>> splits(dim);
    const std::size_t base = n / dim;
    const std::size_t extra = n % dim;
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t k = base + (i < extra ? 1 : 0);
        splits[i].assign(k, 1.0 / static_cast<double>(k));
    }
    return make_coordinate_frame(p, dim, splits, field);
}

AnalysisFrame make_standard_frame(std::size_t dim, Field field) {
    AnalysisFrame frame;
    frame.space = NormedSpace::lq(dim, 2.0, field);
    frame.p = 2.0;
    for (std::size_t j = 0; j < dim; ++j) {
        Functional f;
        f.coords.assign(dim, Complex(0.0, 0.0));
        f.coords[j] = Complex(1.0, 0.0);
        frame.functionals.push_back(std::move(f));
    }
    return frame;
}

AnalysisFrame make_orthonormal_frame(std::span<const CoordVector> basis_rows, Field field) {
    if (basis_rows.empty()) throw ConfigError("orthonormal frame needs at least one basis vector");
    const std::size_t n = basis_rows.size();
    const std::size_t dim = basis_rows[0].size();
    if (n != dim) throw ConfigError("orthonormal basis must be square (n = dim)");
    AnalysisFrame frame;
    frame.space = NormedSpace::lq(dim, 2.0, field);
    frame.p = 2.0;
    for (const auto& tau : basis_rows) {
        if (tau.size() != dim) throw InputError("basis rows have inconsistent length");
        Functional f;
        f.coords.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) f.coords[i] = std::conj(tau[i]);
        frame.functionals.push_back(std::move(f));
    }
    if (orthonormal_defect(frame) > 1e-10)
        throw InputError("input basis is not orthonormal (Gram defect > 1e-10)");
    return frame;
}

AnalysisFrame make_fourier_frame(std::size_t n) {
    if (n < 1) throw ConfigError("fourier frame needs n >= 1");
    AnalysisFrame frame;
    frame.space = NormedSpace::lq(n, 2.0, Field::Complex);
    frame.p = 2.0;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        Functional f;
        f.coords.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            // conj of the DFT basis vector entry exp(2*pi*i*j*k/n)/sqrt(n)
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(j * k) /
                                 static_cast<double>(n);
            f.coords[k] = Complex(scale * std::cos(angle), scale * std::sin(angle));
        }
        frame.functionals.push_back(std::move(f));
    }
    return frame;
}

namespace {

// Modified Gram-Schmidt with one reorthogonalization pass on the columns of
// a (rows x cols) matrix stored column-major as CoordVectors.
void orthonormalize_columns(std::vector<CoordVector>& cols) {
    const auto inner = [](const CoordVector& a, const CoordVector& b) {
        Complex s(0.0, 0.0);
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
        return s;
    };
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                const Complex proj = inner(cols[j], cols[k]);
                for (std::size_t i = 0; i < cols[j].size(); ++i)
                    cols[j][i] -= proj * cols[k][i];
            }
        }
        double nrm = 0.0;
        for (const auto& z : cols[j]) nrm += std::norm(z);
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12) throw ConfigError("random matrix is numerically rank deficient");
        for (auto& z : cols[j]) z /= nrm;
    }
}

} // namespace

AnalysisFrame make_random_parseval2(std::size_t n, std::size_t d, std::uint64_t seed,
                                    Field field) {
    if (d < 1) throw ConfigError("dimension must be >= 1");
    if (n < d) throw ConfigError("random Parseval-2 frame requires n >= dim");
    GaussianSampler g(seed);
    std::vector<CoordVector> cols(d, CoordVector(n));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const double re = g();
            const double im = field == Field::Complex ? g() : 0.0;
            cols[j][i] = Complex(re, im);
        }
    orthonormalize_columns(cols);

    AnalysisFrame frame;
    frame.space = NormedSpace::lq(d, 2.0, field);
    frame.p = 2.0;
    for (std::size_t i = 0; i < n; ++i) {
        Functional f;
        f.coords.resize(d);
        for (std::size_t j = 0; j < d; ++j) f.coords[j] = cols[j][i];
        frame.functionals.push_back(std::move(f));
    }
    return frame;
}

double parseval_defect(const AnalysisFrame& frame, std::span<const Vector> samples) {
    detail::check_frame(frame);
    if (samples.empty()) throw InputError("parseval_defect: empty sample list");
    std::vector<CoordVector> rows;
    rows.reserve(frame.size());
    for (const auto& f : frame.functionals) rows.push_back(f.coords);
    const auto pr = internal::PackedRows::pack(rows);

    std::vector<double> m2(frame.size());
    double defect = 0.0;
    for (const auto& x : samples) {
        detail::check_dim(frame.space, x.coords.size(), "parseval_defect sample");
        if (std::fabs(norm(frame.space, x) - 1.0) > 1e-10)
            throw InputError("parseval_defect: sample is not unit norm");
        internal::SplitPoint sp(x.coords);
        pr.coeff_sq_mags(sp.re.data(), sp.im_ptr(), m2.data());
        const double s = kernels::sum_mag_pow(m2.data(), m2.size(), frame.p);
        defect = std::max(defect, std::fabs(s - 1.0));
    }
    return defect;
}

double parseval_defect(const AnalysisFrame& frame, std::size_t count, std::uint64_t seed) {
    const auto samples = sample_unit_sphere(frame.space, count, seed);
    return parseval_defect(frame, samples);
}

bool support_membership(const AnalysisFrame& frame, const Vector& x, double eps_supp) {
    detail::check_frame(frame);
    detail::check_dim(frame.space, x.coords.size(), "support_membership");
    if (!(eps_supp > 0.0)) throw ConfigError("eps_supp must be positive");
    const double nx = norm(frame.space, x);
    if (nx == 0.0) throw InputError("support_membership: zero vector");
    for (const auto& f : frame.functionals) {
        Complex c(0.0, 0.0);
        for (std::size_t i = 0; i < x.coords.size(); ++i) c += f.coords[i] * x.coords[i];
        if (!(std::abs(c) / nx > eps_supp)) return false;
    }
    return true;
}

double max_functional_norm(const AnalysisFrame& frame) {
    detail::check_frame(frame);
    double m = 0.0;
    for (const auto& f : frame.functionals) m = std::max(m, dual_norm(frame.space, f));
    return m;
}

double orthonormal_defect(const AnalysisFrame& frame) {
    detail::check_frame(frame);
    const std::size_t n = frame.size();
    if (n != frame.space.dim) return std::numeric_limits<double>::infinity();
    // tau_j = conj(f_j); <tau_j, tau_k> = sum_i conj(F_ji) F_ki
    double defect = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Complex s(0.0, 0.0);
            for (std::size_t i = 0; i < frame.space.dim; ++i)
                s += std::conj(frame.functionals[j].coords[i]) * frame.functionals[k].coords[i];
            const double target = (j == k) ? 1.0 : 0.0;
            defect = std::max(defect, std::abs(s - Complex(target, 0.0)));
        }
    return defect;
}

bool is_orthonormal_frame(const AnalysisFrame& frame, double tol) {
    return orthonormal_defect(frame) <= tol;
}

std::vector<double> coefficient_magnitudes(const AnalysisFrame& frame, const Vector& x) {
    detail::check_frame(frame);
    detail::check_dim(frame.space, x.coords.size(), "coefficient_magnitudes");
    std::vector<double> out(frame.size());
    for (std::size_t j = 0; j < frame.size(); ++j) {
        Complex c(0.0, 0.0);
        for (std::size_t i = 0; i < x.coords.size(); ++i)
            c += frame.functionals[j].coords[i] * x.coords[i];
        out[j] = std::abs(c);
    }
    return out;
}

} // namespace pframe
