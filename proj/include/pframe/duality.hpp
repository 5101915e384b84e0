#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pframe/certify.hpp"

namespace pframe {

/// Finite family {tau_j} in X meant to satisfy sum_j |f(tau_j)|^p = ||f||^p
/// for every f in X*: a Parseval p-frame for the dual, evaluated on the
/// dual-norm unit sphere.
struct VectorFrame {
    NormedSpace space; // the predual X
    double p = 2.0;
    std::vector<Vector> vectors;

    std::size_t size() const { return vectors.size(); }
};

VectorFrame make_vector_frame(NormedSpace space, double p, std::vector<Vector> vectors);

/// tau_j = e_j on X = l^(p') (conjugate exponent), an exact Parseval p-frame
/// for X*.
VectorFrame make_dual_coordinate_frame(double p, std::size_t dim, Field field = Field::Real);

/// tau_j = conj(f_j) for an analysis frame on l^2: the inner-product
/// identification used by the self-duality checks.
VectorFrame vector_frame_from_analysis(const AnalysisFrame& frame);

/// max over samples of |sum_j |f(tau_j)|^p - 1|; samples must be dual-unit
/// within 1e-10.
double dual_parseval_defect(const VectorFrame& frame, std::span<const Functional> samples);
double dual_parseval_defect(const VectorFrame& frame, std::size_t count, std::uint64_t seed);

/// Distribution |f(tau_j)/||f|||^p and its entropies.
std::vector<double> dual_coefficient_distribution(const VectorFrame& frame, const Functional& f);
EntropyValue dual_entropy(const VectorFrame& frame, const Functional& f);
EntropyValue dual_renyi_entropy(const VectorFrame& frame, const Functional& f, double alpha);

bool dual_support_membership(const VectorFrame& frame, const Functional& f,
                             double eps_supp = 1e-12);

/// max_j norm(tau_j); <= 1 + tol for any Parseval p-frame for X*.
double max_vector_norm(const VectorFrame& frame);

/// Certificate for the dual chain
///   log(nm) >= S_tau(f) + S_omega(f) >= -p log(sup_g max |g(tau_j) g(omega_k)|)
/// with the sup over the dual-norm unit sphere.
Certificate dual_certify(const VectorFrame& tau, const VectorFrame& omega, const Functional& f,
                         const OptimizerConfig& cfg, double eps_supp = 1e-12,
                         double check_tol = 1e-9);

SupEstimate dual_estimate_sup_c(const VectorFrame& tau, const VectorFrame& omega,
                                const OptimizerConfig& cfg);

/// Mirror of counterexample_scan over seeded dual-unit functionals.
ScanReport dual_counterexample_scan(const VectorFrame& tau, const VectorFrame& omega,
                                    std::size_t sample_count, std::uint64_t seed,
                                    double eps_supp = 1e-12,
                                    const OptimizerConfig& cfg = OptimizerConfig{},
                                    double check_tol = 1e-9);

namespace detail {
void check_vector_frame(const VectorFrame& frame);
void check_same_dual_pair(const VectorFrame& a, const VectorFrame& b);
} // namespace detail

} // namespace pframe
