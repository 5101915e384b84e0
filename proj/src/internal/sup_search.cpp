#include "internal/sup_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pframe/rng.hpp"

namespace pframe::internal {

double SphereDomain::normalize(CoordVector& v) const {
    const double n = descriptor_norm(desc, v);
    if (!(n > 1e-154)) throw InputError("cannot normalize a zero vector");
    for (auto& z : v) z /= n;
    return n;
}

PackedRows pack_frame(const AnalysisFrame& frame) {
    std::vector<CoordVector> rows;
    rows.reserve(frame.size());
    for (const auto& f : frame.functionals) rows.push_back(f.coords);
    return PackedRows::pack(rows);
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

CoordVector row_coords(const PackedRows& p, std::size_t j) {
    CoordVector row(p.dim);
    for (std::size_t i = 0; i < p.dim; ++i)
        row[i] = Complex(p.re[j * p.dim + i], p.cplx ? p.im[j * p.dim + i] : 0.0);
    return row;
}

// Objective and its log-sum-exp smoothing. The max over coefficient products
// factorizes, max_{j,k} |a_j||b_k| = (max_j |a_j|)(max_k |b_k|), and so does
// its smoothing, so each frame contributes an independent part.
class Objective {
public:
    Objective(const PackedRows& a, const PackedRows& b, double beta)
        : a_(a), b_(b), beta_(beta), m2a_(a.rows), m2b_(b.rows) {}

    struct Eval {
        double exact = 0.0;
        double smooth = kNegInf;
    };

    // z must already be unit on the domain sphere.
    Eval eval(const CoordVector& z) {
        sp_.assign(z);
        a_.coeff_sq_mags(sp_.re.data(), sp_.im_ptr(), m2a_.data());
        b_.coeff_sq_mags(sp_.re.data(), sp_.im_ptr(), m2b_.data());
        const double ma = kernels::max_val(m2a_.data(), m2a_.size());
        const double mb = kernels::max_val(m2b_.data(), m2b_.size());
        Eval e;
        e.exact = std::sqrt(ma) * std::sqrt(mb);
        e.smooth = lse_part(m2a_, ma) + lse_part(m2b_, mb);
        return e;
    }

    // gamma_i = d(smooth)/d re(z_i) + i * d(smooth)/d im(z_i)
    void grad(const CoordVector& z, CoordVector& gamma) {
        sp_.assign(z);
        std::fill(gamma.begin(), gamma.end(), Complex(0.0, 0.0));
        grad_part(a_, gamma);
        grad_part(b_, gamma);
    }

private:
    double lse_part(const std::vector<double>& m2, double maxm2) const {
        if (!(maxm2 > 0.0)) return kNegInf;
        // (1/beta) log sum_j |a_j|^beta, shifted by the max term
        double sum = 0.0;
        const double half_beta = 0.5 * beta_;
        for (double v : m2) {
            if (v <= 0.0) continue;
            const double e = half_beta * std::log(v / maxm2);
            if (e > -700.0) sum += std::exp(e);
        }
        return 0.5 * std::log(maxm2) + std::log(sum) / beta_;
    }

    void grad_part(const PackedRows& rows, CoordVector& gamma) {
        const std::size_t n = rows.rows;
        cre_.resize(n);
        cim_.resize(n);
        rows.coeffs(sp_.re.data(), sp_.im_ptr(), cre_.data(), cim_.data());
        double maxm2 = 0.0;
        m2_.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            m2_[j] = cre_[j] * cre_[j] + cim_[j] * cim_[j];
            maxm2 = std::max(maxm2, m2_[j]);
        }
        if (!(maxm2 > 0.0)) return;
        const double half_beta = 0.5 * beta_;
        double wsum = 0.0;
        w_.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (m2_[j] <= 0.0) {
                w_[j] = 0.0;
                continue;
            }
            const double e = half_beta * std::log(m2_[j] / maxm2);
            w_[j] = e > -700.0 ? std::exp(e) : 0.0;
            wsum += w_[j];
        }
        // d/dz of (1/beta) log sum |a_j|^beta = sum_j softmax_j * dlog|a_j|/dz,
        // and dlog|a_j|/d(re_i, im_i) folds into u_j * conj(row_ji).
        for (std::size_t j = 0; j < n; ++j) {
            if (w_[j] == 0.0 || m2_[j] < 1e-280) continue;
            const double scale = w_[j] / (wsum * m2_[j]);
            const Complex u = Complex(cre_[j], cim_[j]) * scale;
            const double* rre = rows.re.data() + j * rows.dim;
            const double* rim = rows.cplx ? rows.im.data() + j * rows.dim : nullptr;
            for (std::size_t i = 0; i < rows.dim; ++i) {
                const Complex conj_entry(rre[i], rim ? -rim[i] : 0.0);
                gamma[i] += u * conj_entry;
            }
        }
    }

    const PackedRows& a_;
    const PackedRows& b_;
    double beta_;
    std::vector<double> m2a_, m2b_;
    std::vector<double> cre_, cim_, m2_, w_;
    SplitPoint sp_;
};

struct Best {
    double value = -1.0;
    CoordVector witness;

    void consider(double v, const CoordVector& z) {
        if (v > value) {
            value = v;
            witness = z;
        }
    }
};

void ascend(Objective& obj, const SphereDomain& dom, const OptimizerConfig& cfg,
            std::size_t max_iters, CoordVector z, Best& best) {
    auto e = obj.eval(z);
    best.consider(e.exact, z);
    double phi = e.smooth;
    if (phi == kNegInf) return;

    double step = cfg.step_init;
    constexpr double kMinStep = 1e-16;
    int stall = 0;
    CoordVector gamma(z.size()), cand;

    for (std::size_t iter = 0; iter < max_iters; ++iter) {
        obj.grad(z, gamma);
        double gn2 = 0.0;
        for (const auto& gi : gamma) gn2 += std::norm(gi);
        const double gn = std::sqrt(gn2);
        if (gn < 1e-18) break;

        bool accepted = false;
        while (step >= kMinStep) {
            cand = z;
            const double scale = step / gn;
            for (std::size_t i = 0; i < z.size(); ++i) cand[i] += scale * gamma[i];
            dom.normalize(cand);
            const auto e2 = obj.eval(cand);
            if (e2.smooth > phi + 1e-15) {
                const double gain = e2.smooth - phi;
                z = cand;
                phi = e2.smooth;
                best.consider(e2.exact, z);
                step = std::min(step * 1.6, 1.0);
                stall = gain < cfg.tol ? stall + 1 : 0;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted || stall >= 3) break;
    }
}

} // namespace

double exact_max_product(const PackedRows& a, const PackedRows& b, const CoordVector& unit_z) {
    Objective obj(a, b, 2.0);
    return obj.eval(unit_z).exact;
}

SupResult estimate_sup(const PackedRows& a, const PackedRows& b, const SphereDomain& dom,
                       const OptimizerConfig& cfg, std::span<const CoordVector> extra_starts) {
    cfg.validate();
    if (a.dim != b.dim || a.dim == 0) throw InputError("estimate_sup: incompatible row families");

    std::vector<CoordVector> starts;
    starts.reserve(cfg.starts + a.rows + b.rows + extra_starts.size());

    GaussianSampler g(cfg.seed);
    for (std::size_t k = 0; k < cfg.starts; ++k) {
        for (;;) {
            CoordVector z(a.dim);
            for (auto& zi : z) {
                const double re = g();
                const double im = dom.field == Field::Complex ? g() : 0.0;
                zi = Complex(re, im);
            }
            if (descriptor_norm(dom.desc, z) > 1e-154) {
                dom.normalize(z);
                starts.push_back(std::move(z));
                break;
            }
        }
    }
    const auto push_extremals = [&](const PackedRows& rows) {
        for (std::size_t j = 0; j < rows.rows; ++j) {
            CoordVector z = dom.extremal(row_coords(rows, j));
            if (descriptor_norm(dom.desc, z) > 1e-154) {
                dom.normalize(z); // extremals are unit by construction; tidy rounding
                starts.push_back(std::move(z));
            }
        }
    };
    push_extremals(a);
    push_extremals(b);
    for (const auto& e : extra_starts) {
        CoordVector z = e;
        dom.normalize(z);
        starts.push_back(std::move(z));
    }

    Best best;
    Objective obj(a, b, cfg.smoothing_beta);
    for (const auto& s : starts) ascend(obj, dom, cfg, cfg.max_iters, s, best);

    // Sharpened polish from the incumbent: tightens kinked optima where the
    // active branch changes at the maximizer.
    for (double factor : {16.0, 256.0}) {
        Objective sharp(a, b, cfg.smoothing_beta * factor);
        ascend(sharp, dom, cfg, std::max<std::size_t>(cfg.max_iters / 4, 25), best.witness, best);
    }

    return {best.value, best.witness};
}

} // namespace pframe::internal
