#include "pframe/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "internal/sup_search.hpp"
#include "pframe/rng.hpp"

namespace pframe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t rotated_param_count(std::size_t dim) { return dim * (dim - 1) / 2; }

// Identity rotated by a sequence of Givens rotations, one angle per (i, j)
// pair in lexicographic order. Rows of the result form the rotated ONB.
std::vector<CoordVector> givens_basis(std::size_t dim, std::span<const double> angles) {
    std::vector<std::vector<double>> rows(dim, std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) rows[i][i] = 1.0;
    std::size_t a = 0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j, ++a) {
            const double c = std::cos(angles[a]);
            const double s = std::sin(angles[a]);
            for (std::size_t k = 0; k < dim; ++k) {
                const double ri = rows[i][k];
                const double rj = rows[j][k];
                rows[i][k] = c * ri - s * rj;
                rows[j][k] = s * ri + c * rj;
            }
        }
    std::vector<CoordVector> basis(dim, CoordVector(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k) basis[i][k] = Complex(rows[i][k], 0.0);
    return basis;
}

std::vector<std::vector<double>> weight_groups(const FamilyParams& fp) {
    std::vector<std::vector<double>> splits(fp.dim);
    std::size_t at = 0;
    for (std::size_t i = 0; i < fp.dim; ++i) {
        const std::size_t k = fp.copies[i];
        splits[i].assign(fp.parameters.begin() + at, fp.parameters.begin() + at + k);
        at += k;
    }
    return splits;
}

} // namespace

void FamilyParams::validate() const {
    if (dim < 1) throw ConfigError("family dimension must be >= 1");
    switch (family) {
        case FrameFamily::RotatedOnb: {
            if (parameters.size() != rotated_param_count(dim))
                throw ConfigError("rotated_onb expects dim*(dim-1)/2 angles");
            for (double a : parameters)
                if (!(a >= 0.0) || !(a < kTwoPi))
                    throw ConfigError("angles must lie in [0, 2*pi)");
            break;
        }
        case FrameFamily::WeightedCoordinate: {
            if (!(p >= 1.0) || std::isinf(p)) throw ConfigError("p must satisfy 1 <= p < inf");
            if (copies.size() != dim) throw ConfigError("need one split size per coordinate");
            std::size_t total = 0;
            for (std::size_t k : copies) {
                if (k < 1) throw ConfigError("split sizes must be >= 1");
                total += k;
            }
            if (parameters.size() != total)
                throw ConfigError("weight count must match the split sizes");
            std::size_t at = 0;
            for (std::size_t i = 0; i < dim; ++i) {
                double sum = 0.0;
                for (std::size_t k = 0; k < copies[i]; ++k) {
                    const double w = parameters[at++];
                    if (!(w > 0.0)) throw ConfigError("weights must be strictly positive");
                    sum += w;
                }
                if (std::fabs(sum - 1.0) > 1e-9)
                    throw ConfigError("weights must sum to 1 per coordinate");
            }
            break;
        }
    }
}

std::pair<AnalysisFrame, AnalysisFrame> realize_family(const FamilyParams& params) {
    params.validate();
    switch (params.family) {
        case FrameFamily::RotatedOnb: {
            AnalysisFrame f = make_standard_frame(params.dim, Field::Real);
            const auto basis = givens_basis(params.dim, params.parameters);
            AnalysisFrame g = make_orthonormal_frame(basis, Field::Real);
            return {std::move(f), std::move(g)};
        }
        case FrameFamily::WeightedCoordinate: {
            const auto splits = weight_groups(params);
            AnalysisFrame f = make_coordinate_frame(params.p, params.dim, splits);
            return {f, f};
        }
    }
    throw ConfigError("unknown frame family");
}

double equality_gap(const AnalysisFrame& f, const AnalysisFrame& g, const Vector& x) {
    detail::check_same_pair(f, g);
    const double lhs =
        p_shannon_entropy(f, x).value + p_shannon_entropy(g, x).value;
    const double m_point = pointwise_max_product(f, g, x);
    return lhs + f.p * std::log(m_point);
}

namespace {

// Fast gap evaluation against pre-packed frames; x given as unit coords.
double gap_at(const internal::PackedRows& fa, const internal::PackedRows& fb, double p,
              const CoordVector& unit_x) {
    internal::SplitPoint sp(unit_x);
    std::vector<double> m2a(fa.rows), m2b(fb.rows);
    fa.coeff_sq_mags(sp.re.data(), sp.im_ptr(), m2a.data());
    fb.coeff_sq_mags(sp.re.data(), sp.im_ptr(), m2b.data());
    double lhs = 0.0;
    for (double v : m2a) {
        const double t = std::pow(v, 0.5 * p);
        if (t > 1e-300) lhs -= t * std::log(t);
    }
    for (double v : m2b) {
        const double t = std::pow(v, 0.5 * p);
        if (t > 1e-300) lhs -= t * std::log(t);
    }
    const double m_point = std::sqrt(kernels::max_val(m2a.data(), m2a.size())) *
                           std::sqrt(kernels::max_val(m2b.data(), m2b.size()));
    return lhs + p * std::log(m_point);
}

// Unconstrained coordinates for the family parameters: angles move freely and
// wrap mod 2*pi; weights move in per-group softmax logits.
struct ParamCoding {
    const FamilyParams& base;

    std::vector<double> encode() const {
        if (base.family == FrameFamily::RotatedOnb) return base.parameters;
        std::vector<double> u(base.parameters.size());
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::log(base.parameters[i]);
        return u;
    }

    FamilyParams decode(std::span<const double> u) const {
        FamilyParams out = base;
        if (base.family == FrameFamily::RotatedOnb) {
            for (std::size_t i = 0; i < u.size(); ++i) {
                double a = std::fmod(u[i], kTwoPi);
                if (a < 0.0) a += kTwoPi;
                out.parameters[i] = a;
            }
            return out;
        }
        std::size_t at = 0;
        for (std::size_t i = 0; i < base.dim; ++i) {
            const std::size_t k = base.copies[i];
            double mx = u[at];
            for (std::size_t j = 1; j < k; ++j) mx = std::max(mx, u[at + j]);
            double sum = 0.0;
            for (std::size_t j = 0; j < k; ++j) sum += std::exp(u[at + j] - mx);
            for (std::size_t j = 0; j < k; ++j)
                out.parameters[at + j] = std::exp(u[at + j] - mx) / sum;
            at += k;
        }
        return out;
    }
};

struct GapObjective {
    const FamilyParams& base;
    ParamCoding coding{base};

    double eval(std::span<const double> u, const CoordVector& x_coords) const {
        const FamilyParams fp = coding.decode(u);
        auto [f, g] = realize_family(fp);
        const auto fa = internal::pack_frame(f);
        const auto fb = internal::pack_frame(g);
        CoordVector unit_x = x_coords;
        const double nx = descriptor_norm(primal_descriptor(f.space), unit_x);
        if (!(nx > 0.0)) return std::numeric_limits<double>::infinity();
        for (auto& z : unit_x) z /= nx;
        return gap_at(fa, fb, f.p, unit_x);
    }
};

// Backtracking descent on h(v) with central finite differences.
template <class Fn>
void fd_descent(std::vector<double>& v, Fn&& h, std::size_t iters, double step0) {
    double step = step0;
    double hv = h(v);
    std::vector<double> grad(v.size()), cand(v.size());
    for (std::size_t it = 0; it < iters; ++it) {
        const double fd = 1e-6;
        double gn2 = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double keep = v[i];
            v[i] = keep + fd;
            const double hp = h(v);
            v[i] = keep - fd;
            const double hm = h(v);
            v[i] = keep;
            grad[i] = (hp - hm) / (2.0 * fd);
            gn2 += grad[i] * grad[i];
        }
        if (gn2 < 1e-24) break;
        const double gn = std::sqrt(gn2);
        bool accepted = false;
        while (step >= 1e-12) {
            for (std::size_t i = 0; i < v.size(); ++i) cand[i] = v[i] - step / gn * grad[i];
            const double hc = h(cand);
            if (hc < hv - 1e-15) {
                v = cand;
                hv = hc;
                step = std::min(step * 1.5, step0);
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;
    }
}

} // namespace

GapRecord minimize_gap(const FamilyParams& family, const OptimizerConfig& cfg) {
    family.validate();
    cfg.validate();
    GapObjective obj{family};

    const NormedSpace space = realize_family(family).first.space;
    const std::size_t nparams = family.parameters.size();

    double best_gap = std::numeric_limits<double>::infinity();
    std::vector<double> best_u;
    CoordVector best_x;

    std::mt19937_64 uniform_rng(derive_seed(cfg.seed, 17));
    GaussianSampler gauss(derive_seed(cfg.seed, 18));
    const auto uniform = [&] { return static_cast<double>(uniform_rng() >> 11) * 0x1p-53; };

    const std::size_t restarts = std::max<std::size_t>(4, cfg.starts / 4);
    for (std::size_t r = 0; r < restarts; ++r) {
        // seed point: family point for r = 0, random draws afterwards
        std::vector<double> u = obj.coding.encode();
        if (r > 0) {
            if (family.family == FrameFamily::RotatedOnb)
                for (auto& a : u) a = uniform() * kTwoPi;
            else
                for (auto& a : u) a = 2.0 * gauss();
        }
        CoordVector x(space.dim);
        for (auto& z : x) z = Complex(gauss(), space.field == Field::Complex ? gauss() : 0.0);

        // alternate sphere moves in x with parameter moves
        for (int round = 0; round < 6; ++round) {
            std::vector<double> xdofs;
            xdofs.reserve(2 * x.size());
            for (const auto& z : x) {
                xdofs.push_back(z.real());
                if (space.field == Field::Complex) xdofs.push_back(z.imag());
            }
            const auto xh = [&](const std::vector<double>& dofs) {
                CoordVector xc(x.size());
                for (std::size_t i = 0; i < x.size(); ++i)
                    xc[i] = space.field == Field::Complex
                                ? Complex(dofs[2 * i], dofs[2 * i + 1])
                                : Complex(dofs[i], 0.0);
                return obj.eval(u, xc);
            };
            fd_descent(xdofs, xh, 40, 0.2);
            for (std::size_t i = 0; i < x.size(); ++i)
                x[i] = space.field == Field::Complex ? Complex(xdofs[2 * i], xdofs[2 * i + 1])
                                                     : Complex(xdofs[i], 0.0);
            if (nparams > 0) {
                const auto uh = [&](const std::vector<double>& uu) { return obj.eval(uu, x); };
                fd_descent(u, uh, 40, 0.2);
            }
        }

        const double gap = obj.eval(u, x);
        if (gap < best_gap) {
            best_gap = gap;
            best_u = u;
            best_x = x;
        }
    }

    GapRecord rec;
    rec.params = obj.coding.decode(best_u);
    auto [f, g] = realize_family(rec.params);
    const double nx = descriptor_norm(primal_descriptor(f.space), best_x);
    for (auto& z : best_x) z /= nx;
    rec.x = Vector{best_x};
    rec.gap = equality_gap(f, g, rec.x);
    OptimizerConfig cert_cfg = cfg;
    cert_cfg.seed = derive_seed(cfg.seed, 19);
    rec.certificate = certify_point(f, g, rec.x, cert_cfg);
    return rec;
}

std::vector<std::pair<double, double>> renyi_sweep(const AnalysisFrame& f, const AnalysisFrame& g,
                                                   const Vector& x,
                                                   std::span<const double> alphas) {
    detail::check_same_pair(f, g);
    std::vector<std::pair<double, double>> curve;
    curve.reserve(alphas.size());
    for (double a : alphas) {
        if (!(a > 0.0) || a == 1.0) throw ConfigError("sweep orders must lie in (0,1) or (1,inf)");
        const double sum = p_renyi_entropy(f, x, a).value + p_renyi_entropy(g, x, a).value;
        curve.emplace_back(a, sum);
    }
    return curve;
}

} // namespace pframe
