#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "pframe/errors.hpp"

namespace pframe {

using Complex = std::complex<double>;
using CoordVector = std::vector<Complex>;

inline constexpr double kInfExponent = std::numeric_limits<double>::infinity();

enum class Field { Real, Complex };

enum class NormKind { Lq, WeightedLq };

/// Finite-dimensional normed space: dimension, scalar field, and an l^q or
/// weighted-l^q norm. q = inf is allowed for plain l^q (it arises as the dual
/// of l^1); weighted norms require finite q, where
/// ||x|| = (sum_i w_i |x_i|^q)^(1/q) with all w_i > 0.
struct NormedSpace {
    std::size_t dim = 0;
    Field field = Field::Real;
    NormKind kind = NormKind::Lq;
    double q = 2.0;
    std::vector<double> weights; // empty for plain l^q

    static NormedSpace lq(std::size_t dim, double q, Field field = Field::Real);
    static NormedSpace weighted_lq(std::size_t dim, double q, std::vector<double> weights,
                                   Field field = Field::Real);

    bool operator==(const NormedSpace&) const = default;
};

/// Point of X.
struct Vector {
    CoordVector coords;
};

/// Element of X*. Acts by the bilinear pairing f(x) = sum_i coords_i * x_i;
/// Hilbert-space inner products <x, tau> are realized by storing conj(tau).
struct Functional {
    CoordVector coords;
};

Vector make_vector(std::initializer_list<double> reals);
Functional make_functional(std::initializer_list<double> reals);

/// Norm descriptor in plain coordinates: ||x|| = (sum w_i |x_i|^rho)^(1/rho),
/// or max_i w_i |x_i| when rho = inf. Empty weights mean w_i = 1. Both the
/// primal norm and its analytic dual take this form, so norms, normalization
/// and Holder-extremal points share one implementation.
struct LqDescriptor {
    double rho = 2.0;
    std::vector<double> weights;
};

LqDescriptor primal_descriptor(const NormedSpace& space);
LqDescriptor dual_descriptor(const NormedSpace& space);

/// Conjugate exponent: 1/q + 1/q' = 1 (q' = inf when q = 1, q' = 1 when q = inf).
double conjugate_exponent(double q);

double descriptor_norm(const LqDescriptor& d, std::span<const Complex> coords);

/// Maximizer of |sum_i c_i y_i| over the unit sphere of the descriptor norm
/// (Holder equality case). The returned point has descriptor norm 1 and
/// attains sum_i c_i y_i = dual value, real and nonnegative.
CoordVector descriptor_extremal(const LqDescriptor& d, std::span<const Complex> c);

/// ||x|| in the space's norm. Zero iff x = 0.
double norm(const NormedSpace& space, const Vector& x);

/// ||f|| on X*, computed analytically (l^q' for l^q, with the matching
/// weight transform in the weighted case).
double dual_norm(const NormedSpace& space, const Functional& f);

/// f(x) = sum_i f_i x_i.
Complex pairing(const Functional& f, const Vector& x);

/// Deterministic unit-sphere samples: Gaussian coordinates (complex Gaussians
/// for complex field) normalized by the space's norm.
std::vector<Vector> sample_unit_sphere(const NormedSpace& space, std::size_t count,
                                       std::uint64_t seed);

/// Same draw, normalized by the dual norm: unit functionals on X*.
std::vector<Functional> sample_dual_unit_sphere(const NormedSpace& space, std::size_t count,
                                                std::uint64_t seed);

/// Unit vector attaining |f(x)| = dual_norm(f).
Vector norming_vector(const NormedSpace& space, const Functional& f);

/// Unit functional (in dual norm) attaining |f(x)| = norm(x).
Functional norming_functional(const NormedSpace& space, const Vector& x);

namespace detail {
void check_dim(const NormedSpace& space, std::size_t len, const char* what);
/// Squared magnitudes of a coordinate array.
std::vector<double> sq_mags(std::span<const Complex> coords);
} // namespace detail

} // namespace pframe
