#include "pframe/certify.hpp"

#include <algorithm>
#include <cmath>

#include "internal/sup_search.hpp"
#include "pframe/rng.hpp"

namespace pframe {

void OptimizerConfig::validate() const {
    if (starts < 1) throw ConfigError("optimizer needs at least one start");
    if (max_iters < 1) throw ConfigError("max_iters must be >= 1");
    if (!(step_init > 0.0)) throw ConfigError("step_init must be positive");
    if (!(smoothing_beta > 0.0)) throw ConfigError("smoothing_beta must be positive");
    if (!(tol > 0.0)) throw ConfigError("tol must be positive");
}

namespace {

CoordVector normalized_coords(const NormedSpace& space, const CoordVector& coords,
                              const char* what) {
    const double n = descriptor_norm(primal_descriptor(space), coords);
    if (!(n > 0.0)) throw InputError(std::string(what) + ": zero vector");
    CoordVector out(coords);
    for (auto& z : out) z /= n;
    return out;
}

bool coords_in_support(const internal::PackedRows& rows, const CoordVector& unit_z,
                       double eps_supp) {
    internal::SplitPoint sp(unit_z);
    std::vector<double> m2(rows.rows);
    rows.coeff_sq_mags(sp.re.data(), sp.im_ptr(), m2.data());
    const double thr = eps_supp * eps_supp;
    for (double v : m2)
        if (!(v > thr)) return false;
    return true;
}

// Everything per-pair the certificate checks reuse across points.
struct PairContext {
    internal::PackedRows fa, fb;
    internal::SphereDomain dom;
    double p = 2.0;
    std::size_t n = 0, m = 0;
    double upper = 0.0;
    double floor = 0.0;

    PairContext(const AnalysisFrame& f, const AnalysisFrame& g)
        : fa(internal::pack_frame(validated(f, g))),
          fb(internal::pack_frame(g)),
          dom(internal::SphereDomain::primal(f.space)),
          p(f.p),
          n(f.size()),
          m(g.size()) {
        upper = std::log(static_cast<double>(n) * static_cast<double>(m));
        floor = std::pow(static_cast<double>(n) * static_cast<double>(m), -1.0 / p);
    }

    static const AnalysisFrame& validated(const AnalysisFrame& f, const AnalysisFrame& g) {
        detail::check_frame(f);
        detail::check_frame(g);
        detail::check_same_pair(f, g);
        return f;
    }

    std::vector<double> distribution(const internal::PackedRows& rows,
                                     const CoordVector& unit_z) const {
        internal::SplitPoint sp(unit_z);
        std::vector<double> m2(rows.rows);
        rows.coeff_sq_mags(sp.re.data(), sp.im_ptr(), m2.data());
        std::vector<double> t(rows.rows);
        for (std::size_t j = 0; j < t.size(); ++j) t[j] = std::pow(m2[j], 0.5 * p);
        return t;
    }

    Certificate at_point(const CoordVector& unit_x, double c_hat, const CoordVector& witness,
                         double eps_supp, double check_tol) const {
        Certificate cert;
        cert.mode = CertMode::Primal;
        cert.n = n;
        cert.m = m;
        cert.p = p;
        cert.upper = upper;
        cert.floor = floor;
        cert.tolerance = check_tol;
        cert.point = unit_x;

        const auto ta = distribution(fa, unit_x);
        const auto tb = distribution(fb, unit_x);
        cert.lhs = shannon_entropy_nats(ta) + shannon_entropy_nats(tb);
        cert.m_point = internal::exact_max_product(fa, fb, unit_x);
        cert.rhs_point = -p * std::log(cert.m_point);
        cert.c_hat = std::max(c_hat, cert.m_point);
        cert.witness = cert.m_point > c_hat ? unit_x : witness;
        cert.rhs_global = -p * std::log(cert.c_hat);
        cert.in_support = coords_in_support(fa, unit_x, eps_supp) &&
                          coords_in_support(fb, unit_x, eps_supp);
        cert.witness_in_support = coords_in_support(fa, cert.witness, eps_supp) &&
                                  coords_in_support(fb, cert.witness, eps_supp);

        cert.passes.upper_ok = cert.lhs <= cert.upper + check_tol;
        cert.passes.point_ok = cert.lhs >= cert.rhs_point - check_tol;
        cert.passes.global_ok = cert.lhs >= cert.rhs_global - check_tol;
        cert.passes.floor_ok = cert.m_point >= cert.floor - check_tol;
        return cert;
    }
};

} // namespace

double pointwise_max_product(const AnalysisFrame& f, const AnalysisFrame& g, const Vector& z) {
    PairContext ctx(f, g);
    detail::check_dim(f.space, z.coords.size(), "pointwise_max_product");
    const auto unit_z = normalized_coords(f.space, z.coords, "pointwise_max_product");
    return internal::exact_max_product(ctx.fa, ctx.fb, unit_z);
}

SupEstimate estimate_sup_c(const AnalysisFrame& f, const AnalysisFrame& g,
                           const OptimizerConfig& cfg) {
    PairContext ctx(f, g);
    const auto res = internal::estimate_sup(ctx.fa, ctx.fb, ctx.dom, cfg, {});
    return {res.value, Vector{res.witness}};
}

Certificate certify_point(const AnalysisFrame& f, const AnalysisFrame& g, const Vector& x,
                          const OptimizerConfig& cfg, double eps_supp, double check_tol) {
    PairContext ctx(f, g);
    detail::check_dim(f.space, x.coords.size(), "certify_point");
    const auto unit_x = normalized_coords(f.space, x.coords, "certify_point");
    const CoordVector extra[] = {unit_x};
    const auto sup = internal::estimate_sup(ctx.fa, ctx.fb, ctx.dom, cfg, extra);
    return ctx.at_point(unit_x, sup.value, sup.witness, eps_supp, check_tol);
}

double mutual_coherence(const AnalysisFrame& tau_frame, const AnalysisFrame& omega_frame) {
    detail::check_frame(tau_frame);
    detail::check_frame(omega_frame);
    if (!(tau_frame.space == omega_frame.space))
        throw InputError("orthonormal frames live on different spaces");
    const auto& space = tau_frame.space;
    if (space.kind != NormKind::Lq || space.q != 2.0)
        throw ConfigError("mutual coherence requires an unweighted l^2 space");
    if (tau_frame.p != 2.0 || omega_frame.p != 2.0)
        throw ConfigError("mutual coherence requires p = 2 frames");
    if (!is_orthonormal_frame(tau_frame) || !is_orthonormal_frame(omega_frame))
        throw ConfigError("mutual coherence requires orthonormal-basis frames");

    // tau_j = conj(f_j), omega_k = conj(g_k): <tau_j, omega_k> = sum conj(F_ji) G_ki
    double mu = 0.0;
    for (const auto& fj : tau_frame.functionals)
        for (const auto& gk : omega_frame.functionals) {
            Complex s(0.0, 0.0);
            for (std::size_t i = 0; i < space.dim; ++i)
                s += std::conj(fj.coords[i]) * gk.coords[i];
            mu = std::max(mu, std::abs(s));
        }
    return mu;
}

double buzano_overlap_bound(const AnalysisFrame& tau_frame, const AnalysisFrame& omega_frame) {
    return 0.5 * (1.0 + mutual_coherence(tau_frame, omega_frame));
}

ScanReport counterexample_scan(const AnalysisFrame& f, const AnalysisFrame& g,
                               std::size_t sample_count, std::uint64_t seed, double eps_supp,
                               const OptimizerConfig& cfg, double check_tol) {
    if (sample_count < 1) throw ConfigError("scan needs at least one sample");
    PairContext ctx(f, g);

    OptimizerConfig pair_cfg = cfg;
    pair_cfg.seed = derive_seed(seed, 0);
    const auto sup = internal::estimate_sup(ctx.fa, ctx.fb, ctx.dom, pair_cfg, {});

    const auto samples = sample_unit_sphere(f.space, sample_count, derive_seed(seed, 1));

    ScanReport report;
    report.samples = sample_count;
    report.c_hat_base = sup.value;
    report.certificates.reserve(sample_count);
    for (std::size_t idx = 0; idx < samples.size(); ++idx) {
        Certificate cert =
            ctx.at_point(samples[idx].coords, sup.value, sup.witness, eps_supp, check_tol);
        if (!cert.passes.all()) report.violations.push_back(idx);
        report.certificates.push_back(std::move(cert));
    }
    return report;
}

} // namespace pframe
