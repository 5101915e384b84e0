#pragma once

#include <optional>
#include <vector>

#include "pframe/frames.hpp"

namespace pframe {

/// Entropy of the coefficient distribution |f_j(x/||x||)|^p, in nats.
/// alpha is empty for Shannon, else the Renyi order.
struct EntropyValue {
    double value = 0.0;
    double p = 2.0;
    std::optional<double> alpha;
};

/// The probability vector t_j = |f_j(x/||x||)|^p. Sums to 1 (within defect)
/// for a Parseval p-frame.
std::vector<double> coefficient_distribution(const AnalysisFrame& frame, const Vector& x);

/// S_f(x) = -sum_j t_j log t_j with the 0 log 0 = 0 convention. Defined for
/// any x != 0; theorem hypotheses about support membership are tracked
/// separately by the certificates.
EntropyValue p_shannon_entropy(const AnalysisFrame& frame, const Vector& x);

/// R_{f,alpha}(x) = log(sum_j t_j^alpha) / (1 - alpha), alpha > 0, alpha != 1.
EntropyValue p_renyi_entropy(const AnalysisFrame& frame, const Vector& x, double alpha);

/// Entropies of an explicit probability vector (used by the dual mirror and
/// the test oracles).
double shannon_entropy_nats(std::span<const double> probs);
double renyi_entropy_nats(std::span<const double> probs, double alpha);

} // namespace pframe
