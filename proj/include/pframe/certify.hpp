#pragma once

#include <cstdint>
#include <vector>

#include "pframe/entropy.hpp"
#include "pframe/frames.hpp"

namespace pframe {

/// Multi-start sphere-ascent settings for the sup-coherence search.
struct OptimizerConfig {
    std::size_t starts = 32;
    std::size_t max_iters = 500;
    double step_init = 0.1;
    double smoothing_beta = 200.0; // log-sum-exp sharpness for smoothing the max
    double tol = 1e-10;
    std::uint64_t seed = 0;

    void validate() const;
};

struct CertFlags {
    bool upper_ok = false;
    bool point_ok = false;
    bool global_ok = false;
    bool floor_ok = false;

    bool all() const { return upper_ok && point_ok && global_ok && floor_ok; }
};

enum class CertMode { Primal, Dual };

/// Machine-readable record of both inequality chains
///   log(nm) >= S_f(x) + S_g(x) >= -p log(sup max |f_j(y) g_k(y)|)
///   (nm)^(-1/p) <= sup ...
/// for one evaluation point. rhs_point uses the per-point maximum m(x), which
/// the same algebra bounds exactly; rhs_global uses the estimated sup c_hat
/// (a lower bound on the true sup, attained at `witness`).
struct Certificate {
    CertMode mode = CertMode::Primal;
    std::size_t n = 0, m = 0;
    double p = 2.0;

    double lhs = 0.0;        // S_f(x) + S_g(x)
    double upper = 0.0;      // log(nm)
    double m_point = 0.0;    // max_{j,k} |f_j(x^) g_k(x^)|
    double rhs_point = 0.0;  // -p log m_point
    double c_hat = 0.0;      // estimated sup (attained lower bound)
    double rhs_global = 0.0; // -p log c_hat
    double floor = 0.0;      // (nm)^(-1/p)

    CoordVector point;   // normalized evaluation point (vector or functional)
    CoordVector witness; // sup witness on the same sphere
    bool in_support = false;
    bool witness_in_support = false;

    CertFlags passes;
    double tolerance = 1e-9;
};

struct SupEstimate {
    double value = 0.0;
    Vector witness;
};

/// max_{j,k} |f_j(z^) g_k(z^)| at the normalized z. Always >= (nm)^(-1/p)
/// up to rounding, by the product form of the Parseval identities.
double pointwise_max_product(const AnalysisFrame& f, const AnalysisFrame& g, const Vector& z);

/// Multi-start smoothed ascent over the unit sphere for
/// sup max |f_j(y) g_k(y)|. The returned value is the exact (unsmoothed)
/// objective at the returned witness, hence a certified lower bound on the
/// sup. Deterministic given cfg.seed. Start set: cfg.starts Gaussian sphere
/// points plus the Holder extremal of every functional of both frames.
SupEstimate estimate_sup_c(const AnalysisFrame& f, const AnalysisFrame& g,
                           const OptimizerConfig& cfg);

/// Full certificate at one point. The point itself joins the sup-search start
/// set, which guarantees m_point <= c_hat.
Certificate certify_point(const AnalysisFrame& f, const AnalysisFrame& g, const Vector& x,
                          const OptimizerConfig& cfg, double eps_supp = 1e-12,
                          double check_tol = 1e-9);

/// Mutual coherence of two orthonormal-basis frames on l^2:
/// mu = max_{j,k} |<tau_j, omega_k>| from the stored basis vectors.
double mutual_coherence(const AnalysisFrame& tau_frame, const AnalysisFrame& omega_frame);

/// Hilbert-space overlap bound (1 + mu)/2. Dominates the sup-coherence
/// constant for orthonormal bases, reproducing the classic entropic bound
/// -2 log((1 + mu)/2).
double buzano_overlap_bound(const AnalysisFrame& tau_frame, const AnalysisFrame& omega_frame);

struct ScanReport {
    std::size_t samples = 0;
    double c_hat_base = 0.0;                // shared sup estimate for the pair
    std::vector<Certificate> certificates;  // one per sample, in sample order
    std::vector<std::size_t> violations;    // sample indices with a failed flag
};

/// Runs the certificate checks on `sample_count` seeded sphere samples.
/// The sup estimate is computed once per pair; each sample point still joins
/// the candidate set, so m_point <= c_hat holds on every certificate.
ScanReport counterexample_scan(const AnalysisFrame& f, const AnalysisFrame& g,
                               std::size_t sample_count, std::uint64_t seed,
                               double eps_supp = 1e-12,
                               const OptimizerConfig& cfg = OptimizerConfig{},
                               double check_tol = 1e-9);

} // namespace pframe
