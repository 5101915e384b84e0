#pragma once

#include <utility>
#include <vector>

#include "pframe/certify.hpp"

namespace pframe {

/// Parametrized frame-pair families for the empirical equality-case search.
/// The search only walks exactly-constructible Parseval families, so the
/// frame hypothesis never degrades while parameters move.
enum class FrameFamily {
    RotatedOnb,         // standard real ONB vs. a rotated ONB (Givens angles)
    WeightedCoordinate, // f = g = weighted coordinate frame on l^p
};

struct FamilyParams {
    FrameFamily family = FrameFamily::RotatedOnb;
    std::size_t dim = 2;
    double p = 2.0;                   // weighted_coordinate only (rotated is p = 2)
    std::vector<std::size_t> copies;  // weighted_coordinate: split sizes per coordinate
    // rotated_onb: dim*(dim-1)/2 angles in [0, 2*pi)
    // weighted_coordinate: concatenated positive weights, summing to 1 per coordinate
    std::vector<double> parameters;

    void validate() const;
};

/// Builds the (f, g) pair a parameter point describes.
std::pair<AnalysisFrame, AnalysisFrame> realize_family(const FamilyParams& params);

/// Lowest-gap configuration found for one family, labeled an empirical
/// candidate: nothing here claims to characterize equality.
struct GapRecord {
    FamilyParams params;
    Vector x;
    double gap = 0.0;
    Certificate certificate;
};

/// S_f(x) + S_g(x) + p log m(x): slack in the pointwise chain, >= 0 up to
/// rounding, zero iff the chain is tight at x.
double equality_gap(const AnalysisFrame& f, const AnalysisFrame& g, const Vector& x);

/// Alternating descent: sphere moves in x, then in-family parameter moves,
/// both by finite-difference gradients with backtracking, multi-started from
/// seeded draws. Deterministic given cfg.seed.
GapRecord minimize_gap(const FamilyParams& family, const OptimizerConfig& cfg);

/// Empirical Renyi curve alpha -> R_{f,alpha}(x) + R_{g,alpha}(x);
/// alphas must avoid 1.
std::vector<std::pair<double, double>> renyi_sweep(const AnalysisFrame& f, const AnalysisFrame& g,
                                                   const Vector& x,
                                                   std::span<const double> alphas);

} // namespace pframe
