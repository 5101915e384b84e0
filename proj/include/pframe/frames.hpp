#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pframe/spaces.hpp"

namespace pframe {

/// Finite family {f_j} in X* with exponent p, intended to satisfy
/// sum_j |f_j(x)|^p = ||x||^p for all x (verified numerically, not assumed).
struct AnalysisFrame {
    NormedSpace space;
    double p = 2.0;
    std::vector<Functional> functionals;

    std::size_t size() const { return functionals.size(); }
};

/// Coordinate frame on l^p: functionals w^(1/p) e_i* with, per coordinate i,
/// splits[i] holding positive weights that sum to 1. An exact Parseval
/// p-frame for every p in [1, inf), and the only exact construction here for
/// p != 2. n = sum of split sizes >= dim.
AnalysisFrame make_coordinate_frame(double p, std::size_t dim,
                                    std::span<const std::vector<double>> splits,
                                    Field field = Field::Real);

/// Unit-weight coordinate frame (n = dim).
AnalysisFrame make_coordinate_frame(double p, std::size_t dim, Field field = Field::Real);

/// Coordinate frame with n >= dim functionals: coordinates are split evenly
/// (coordinate i receives floor(n/dim) or ceil(n/dim) copies of weight 1/k).
AnalysisFrame make_split_coordinate_frame(double p, std::size_t dim, std::size_t n,
                                          Field field = Field::Real);

/// Standard-basis frame e_j* on l^2 (p = 2).
AnalysisFrame make_standard_frame(std::size_t dim, Field field = Field::Complex);

/// f_j = <., tau_j> for a given orthonormal basis (rows = tau_j); p forced
/// to 2. Rejects input whose Gram defect exceeds 1e-10.
AnalysisFrame make_orthonormal_frame(std::span<const CoordVector> basis_rows,
                                     Field field = Field::Complex);

/// Unitary DFT basis functionals on complex l^2, entries of modulus 1/sqrt(n).
AnalysisFrame make_fourier_frame(std::size_t n);

/// Rows of a seeded random n x d matrix with orthonormal columns; p = 2.
AnalysisFrame make_random_parseval2(std::size_t n, std::size_t d, std::uint64_t seed,
                                    Field field = Field::Real);

/// max over samples of |sum_j |f_j(x)|^p - 1|. Samples must be unit vectors
/// (within 1e-10).
double parseval_defect(const AnalysisFrame& frame, std::span<const Vector> samples);

/// Convenience: defect over `count` fresh seeded sphere samples.
double parseval_defect(const AnalysisFrame& frame, std::size_t count, std::uint64_t seed);

/// True iff min_j |f_j(x/||x||)| > eps_supp, i.e. x lies in the support set
/// of the frame.
bool support_membership(const AnalysisFrame& frame, const Vector& x, double eps_supp = 1e-12);

/// max_j |dual_norm(f_j)|; <= 1 + tol for any Parseval p-frame.
double max_functional_norm(const AnalysisFrame& frame);

/// Gram defect of the rows as a Hilbert basis: max |<tau_j, tau_k> - delta_jk|
/// with tau_j = conj(f_j). Frames with defect <= tol qualify for the
/// orthonormal-basis operations (Buzano bound).
double orthonormal_defect(const AnalysisFrame& frame);
bool is_orthonormal_frame(const AnalysisFrame& frame, double tol = 1e-10);

/// |f_j(x)| for all j (x taken as given, not normalized).
std::vector<double> coefficient_magnitudes(const AnalysisFrame& frame, const Vector& x);

namespace detail {
void check_frame(const AnalysisFrame& frame);
void check_same_pair(const AnalysisFrame& f, const AnalysisFrame& g);
} // namespace detail

} // namespace pframe
