#include "pframe/entropy.hpp"

#include <cmath>

#include "internal/packed_rows.hpp"

namespace pframe {

namespace {

// Probabilities below this are treated as exact zeros before the log.
constexpr double kProbFloor = 1e-300;

} // namespace

double shannon_entropy_nats(std::span<const double> probs) {
    double s = 0.0;
    for (double t : probs) {
        if (t > kProbFloor) s -= t * std::log(t);
    }
    return s < 0.0 ? 0.0 : s; // rounding can leave a tiny negative residue
}

double renyi_entropy_nats(std::span<const double> probs, double alpha) {
    if (!(alpha > 0.0) || alpha == 1.0) throw ConfigError("Renyi order must be > 0 and != 1");
    double s = 0.0;
    for (double t : probs) {
        if (t > kProbFloor) s += std::pow(t, alpha);
    }
    const double r = std::log(s) / (1.0 - alpha);
    // Parseval defects of order 1e-9 can push a point-mass value just below 0.
    return r < 0.0 && r > -1e-9 ? 0.0 : r;
}

std::vector<double> coefficient_distribution(const AnalysisFrame& frame, const Vector& x) {
    detail::check_frame(frame);
    detail::check_dim(frame.space, x.coords.size(), "coefficient_distribution");
    const double nx = norm(frame.space, x);
    if (nx == 0.0) throw InputError("coefficient_distribution: zero vector");

    std::vector<CoordVector> rows;
    rows.reserve(frame.size());
    for (const auto& f : frame.functionals) rows.push_back(f.coords);
    const auto pr = internal::PackedRows::pack(rows);

    CoordVector xh(x.coords);
    for (auto& z : xh) z /= nx;
    internal::SplitPoint sp(xh);

    std::vector<double> m2(frame.size());
    pr.coeff_sq_mags(sp.re.data(), sp.im_ptr(), m2.data());

    std::vector<double> t(frame.size());
    for (std::size_t j = 0; j < t.size(); ++j) t[j] = std::pow(m2[j], 0.5 * frame.p);
    return t;
}

EntropyValue p_shannon_entropy(const AnalysisFrame& frame, const Vector& x) {
    const auto t = coefficient_distribution(frame, x);
    return {shannon_entropy_nats(t), frame.p, std::nullopt};
}

EntropyValue p_renyi_entropy(const AnalysisFrame& frame, const Vector& x, double alpha) {
    if (!(alpha > 0.0)) throw ConfigError("Renyi order must be positive");
    if (alpha == 1.0) throw ConfigError("Renyi order 1 is the Shannon limit; use p_shannon_entropy");
    const auto t = coefficient_distribution(frame, x);
    return {renyi_entropy_nats(t, alpha), frame.p, alpha};
}

} // namespace pframe
