#include "pframe/duality.hpp"

#include <algorithm>
#include <cmath>

#include "internal/sup_search.hpp"
#include "pframe/rng.hpp"

namespace pframe {

namespace detail {

void check_vector_frame(const VectorFrame& frame) {
    if (frame.vectors.empty()) throw ConfigError("vector frame must contain at least one vector");
    if (!(frame.p >= 1.0) || std::isinf(frame.p))
        throw ConfigError("frame exponent p must satisfy 1 <= p < inf");
    for (const auto& v : frame.vectors) check_dim(frame.space, v.coords.size(), "frame vector");
}

void check_same_dual_pair(const VectorFrame& a, const VectorFrame& b) {
    if (!(a.space == b.space)) throw InputError("vector frames live on different spaces");
    if (a.p != b.p) throw InputError("vector frames have different exponents p");
}

} // namespace detail

VectorFrame make_vector_frame(NormedSpace space, double p, std::vector<Vector> vectors) {
    VectorFrame frame{std::move(space), p, std::move(vectors)};
    detail::check_vector_frame(frame);
    return frame;
}

VectorFrame make_dual_coordinate_frame(double p, std::size_t dim, Field field) {
    if (!(p >= 1.0) || std::isinf(p)) throw ConfigError("p must satisfy 1 <= p < inf");
    VectorFrame frame;
    frame.space = NormedSpace::lq(dim, conjugate_exponent(p), field);
    frame.p = p;
    for (std::size_t j = 0; j < dim; ++j) {
        Vector v;
        v.coords.assign(dim, Complex(0.0, 0.0));
        v.coords[j] = Complex(1.0, 0.0);
        frame.vectors.push_back(std::move(v));
    }
    return frame;
}

VectorFrame vector_frame_from_analysis(const AnalysisFrame& frame) {
    detail::check_frame(frame);
    VectorFrame out;
    out.space = frame.space;
    out.p = frame.p;
    for (const auto& f : frame.functionals) {
        Vector v;
        v.coords.resize(f.coords.size());
        for (std::size_t i = 0; i < f.coords.size(); ++i) v.coords[i] = std::conj(f.coords[i]);
        out.vectors.push_back(std::move(v));
    }
    return out;
}

namespace {

internal::PackedRows pack_vectors(const VectorFrame& frame) {
    std::vector<CoordVector> rows;
    rows.reserve(frame.size());
    for (const auto& v : frame.vectors) rows.push_back(v.coords);
    return internal::PackedRows::pack(rows);
}

CoordVector dual_normalized(const NormedSpace& space, const CoordVector& coords,
                            const char* what) {
    const double n = descriptor_norm(dual_descriptor(space), coords);
    if (!(n > 0.0)) throw InputError(std::string(what) + ": zero functional");
    CoordVector out(coords);
    for (auto& z : out) z /= n;
    return out;
}

bool rows_full_support(const internal::PackedRows& rows, const CoordVector& unit_g,
                       double eps_supp) {
    internal::SplitPoint sp(unit_g);
    std::vector<double> m2(rows.rows);
    rows.coeff_sq_mags(sp.re.data(), sp.im_ptr(), m2.data());
    const double thr = eps_supp * eps_supp;
    for (double v : m2)
        if (!(v > thr)) return false;
    return true;
}

struct DualPairContext {
    internal::PackedRows ta, tb;
    internal::SphereDomain dom;
    double p;
    std::size_t n, m;
    double upper, floor;

    DualPairContext(const VectorFrame& tau, const VectorFrame& omega)
        : ta(pack_vectors(validated(tau, omega))),
          tb(pack_vectors(omega)),
          dom(internal::SphereDomain::dual(tau.space)),
          p(tau.p),
          n(tau.size()),
          m(omega.size()) {
        upper = std::log(static_cast<double>(n) * static_cast<double>(m));
        floor = std::pow(static_cast<double>(n) * static_cast<double>(m), -1.0 / p);
    }

    static const VectorFrame& validated(const VectorFrame& a, const VectorFrame& b) {
        detail::check_vector_frame(a);
        detail::check_vector_frame(b);
        detail::check_same_dual_pair(a, b);
        return a;
    }

    std::vector<double> distribution(const internal::PackedRows& rows,
                                     const CoordVector& unit_g) const {
        internal::SplitPoint sp(unit_g);
        std::vector<double> m2(rows.rows);
        rows.coeff_sq_mags(sp.re.data(), sp.im_ptr(), m2.data());
        std::vector<double> t(rows.rows);
        for (std::size_t j = 0; j < t.size(); ++j) t[j] = std::pow(m2[j], 0.5 * p);
        return t;
    }

    Certificate at_functional(const CoordVector& unit_f, double c_hat, const CoordVector& witness,
                              double eps_supp, double check_tol) const {
        Certificate cert;
        cert.mode = CertMode::Dual;
        cert.n = n;
        cert.m = m;
        cert.p = p;
        cert.upper = upper;
        cert.floor = floor;
        cert.tolerance = check_tol;
        cert.point = unit_f;

        const auto da = distribution(ta, unit_f);
        const auto db = distribution(tb, unit_f);
        cert.lhs = shannon_entropy_nats(da) + shannon_entropy_nats(db);
        cert.m_point = internal::exact_max_product(ta, tb, unit_f);
        cert.rhs_point = -p * std::log(cert.m_point);
        cert.c_hat = std::max(c_hat, cert.m_point);
        cert.witness = cert.m_point > c_hat ? unit_f : witness;
        cert.rhs_global = -p * std::log(cert.c_hat);
        cert.in_support =
            rows_full_support(ta, unit_f, eps_supp) && rows_full_support(tb, unit_f, eps_supp);
        cert.witness_in_support = rows_full_support(ta, cert.witness, eps_supp) &&
                                  rows_full_support(tb, cert.witness, eps_supp);

        cert.passes.upper_ok = cert.lhs <= cert.upper + check_tol;
        cert.passes.point_ok = cert.lhs >= cert.rhs_point - check_tol;
        cert.passes.global_ok = cert.lhs >= cert.rhs_global - check_tol;
        cert.passes.floor_ok = cert.m_point >= cert.floor - check_tol;
        return cert;
    }
};

} // namespace

double dual_parseval_defect(const VectorFrame& frame, std::span<const Functional> samples) {
    detail::check_vector_frame(frame);
    if (samples.empty()) throw InputError("dual_parseval_defect: empty sample list");
    const auto rows = pack_vectors(frame);
    std::vector<double> m2(frame.size());
    double defect = 0.0;
    for (const auto& f : samples) {
        detail::check_dim(frame.space, f.coords.size(), "dual_parseval_defect sample");
        if (std::fabs(dual_norm(frame.space, f) - 1.0) > 1e-10)
            throw InputError("dual_parseval_defect: sample functional is not dual-unit");
        internal::SplitPoint sp(f.coords);
        rows.coeff_sq_mags(sp.re.data(), sp.im_ptr(), m2.data());
        const double s = kernels::sum_mag_pow(m2.data(), m2.size(), frame.p);
        defect = std::max(defect, std::fabs(s - 1.0));
    }
    return defect;
}

double dual_parseval_defect(const VectorFrame& frame, std::size_t count, std::uint64_t seed) {
    const auto samples = sample_dual_unit_sphere(frame.space, count, seed);
    return dual_parseval_defect(frame, samples);
}

std::vector<double> dual_coefficient_distribution(const VectorFrame& frame, const Functional& f) {
    detail::check_vector_frame(frame);
    detail::check_dim(frame.space, f.coords.size(), "dual_coefficient_distribution");
    const auto unit_f = dual_normalized(frame.space, f.coords, "dual_coefficient_distribution");
    const auto rows = pack_vectors(frame);
    internal::SplitPoint sp(unit_f);
    std::vector<double> m2(frame.size());
    rows.coeff_sq_mags(sp.re.data(), sp.im_ptr(), m2.data());
    std::vector<double> t(frame.size());
    for (std::size_t j = 0; j < t.size(); ++j) t[j] = std::pow(m2[j], 0.5 * frame.p);
    return t;
}

EntropyValue dual_entropy(const VectorFrame& frame, const Functional& f) {
    const auto t = dual_coefficient_distribution(frame, f);
    return {shannon_entropy_nats(t), frame.p, std::nullopt};
}

EntropyValue dual_renyi_entropy(const VectorFrame& frame, const Functional& f, double alpha) {
    if (!(alpha > 0.0)) throw ConfigError("Renyi order must be positive");
    if (alpha == 1.0) throw ConfigError("Renyi order 1 is the Shannon limit; use dual_entropy");
    const auto t = dual_coefficient_distribution(frame, f);
    return {renyi_entropy_nats(t, alpha), frame.p, alpha};
}

bool dual_support_membership(const VectorFrame& frame, const Functional& f, double eps_supp) {
    detail::check_vector_frame(frame);
    detail::check_dim(frame.space, f.coords.size(), "dual_support_membership");
    if (!(eps_supp > 0.0)) throw ConfigError("eps_supp must be positive");
    const auto unit_f = dual_normalized(frame.space, f.coords, "dual_support_membership");
    return rows_full_support(pack_vectors(frame), unit_f, eps_supp);
}

double max_vector_norm(const VectorFrame& frame) {
    detail::check_vector_frame(frame);
    double m = 0.0;
    for (const auto& v : frame.vectors) m = std::max(m, norm(frame.space, v));
    return m;
}

SupEstimate dual_estimate_sup_c(const VectorFrame& tau, const VectorFrame& omega,
                                const OptimizerConfig& cfg) {
    DualPairContext ctx(tau, omega);
    const auto res = internal::estimate_sup(ctx.ta, ctx.tb, ctx.dom, cfg, {});
    return {res.value, Vector{res.witness}};
}

Certificate dual_certify(const VectorFrame& tau, const VectorFrame& omega, const Functional& f,
                         const OptimizerConfig& cfg, double eps_supp, double check_tol) {
    DualPairContext ctx(tau, omega);
    detail::check_dim(tau.space, f.coords.size(), "dual_certify");
    const auto unit_f = dual_normalized(tau.space, f.coords, "dual_certify");
    const CoordVector extra[] = {unit_f};
    const auto sup = internal::estimate_sup(ctx.ta, ctx.tb, ctx.dom, cfg, extra);
    return ctx.at_functional(unit_f, sup.value, sup.witness, eps_supp, check_tol);
}

ScanReport dual_counterexample_scan(const VectorFrame& tau, const VectorFrame& omega,
                                    std::size_t sample_count, std::uint64_t seed, double eps_supp,
                                    const OptimizerConfig& cfg, double check_tol) {
    if (sample_count < 1) throw ConfigError("scan needs at least one sample");
    DualPairContext ctx(tau, omega);

    OptimizerConfig pair_cfg = cfg;
    pair_cfg.seed = derive_seed(seed, 0);
    const auto sup = internal::estimate_sup(ctx.ta, ctx.tb, ctx.dom, pair_cfg, {});

    const auto samples = sample_dual_unit_sphere(tau.space, sample_count, derive_seed(seed, 1));

    ScanReport report;
    report.samples = sample_count;
    report.c_hat_base = sup.value;
    report.certificates.reserve(sample_count);
    for (std::size_t idx = 0; idx < samples.size(); ++idx) {
        Certificate cert =
            ctx.at_functional(samples[idx].coords, sup.value, sup.witness, eps_supp, check_tol);
        if (!cert.passes.all()) report.violations.push_back(idx);
        report.certificates.push_back(std::move(cert));
    }
    return report;
}

} // namespace pframe
