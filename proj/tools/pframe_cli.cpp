// pframe command line: frame generation, Parseval checks, uncertainty
// certificates (primal and dual), the orthonormal-basis overlap report,
// Renyi sweeps and the equality-gap search.
//
// Exit codes: 0 all requested checks pass, 1 a theorem flag failed,
// 2 input/config error.

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pframe/io.hpp"
#include "pframe/rng.hpp"
#include "pframe/version.hpp"

namespace {

using pframe::io::json;

constexpr int kExitPass = 0;
constexpr int kExitFlagFailure = 1;
constexpr int kExitBadInput = 2;

pframe::CoordVector parse_coords(const std::string& text) {
    pframe::CoordVector coords;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) throw pframe::InputError("empty coordinate token");
        const auto colon = token.find(':');
        try {
            if (colon == std::string::npos) {
                coords.emplace_back(std::stod(token), 0.0);
            } else {
                coords.emplace_back(std::stod(token.substr(0, colon)),
                                    std::stod(token.substr(colon + 1)));
            }
        } catch (const std::logic_error&) {
            throw pframe::InputError("cannot parse coordinate token '" + token + "'");
        }
    }
    if (coords.empty()) throw pframe::InputError("no coordinates given");
    return coords;
}

void emit(const std::string& data, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << data;
    } else {
        std::ofstream out(out_path);
        if (!out) throw pframe::InputError("cannot write " + out_path);
        out << data;
    }
}

struct CommonOpts {
    std::uint64_t seed = 0;
    std::size_t starts = 32;
    std::size_t max_iters = 500;
    double step_init = 0.1;
    double beta = 200.0;
    double opt_tol = 1e-10;
    double check_tol = 1e-9;
    double eps_supp = 1e-12;
    std::string out;
    std::string format = "json";

    pframe::OptimizerConfig optimizer(std::uint64_t stream) const {
        pframe::OptimizerConfig cfg;
        cfg.starts = starts;
        cfg.max_iters = max_iters;
        cfg.step_init = step_init;
        cfg.smoothing_beta = beta;
        cfg.tol = opt_tol;
        cfg.seed = pframe::derive_seed(seed, stream);
        return cfg;
    }

    void attach(CLI::App* cmd, bool with_optimizer = true) {
        cmd->add_option("--seed", seed, "base seed; all randomness derives from it");
        cmd->add_option("--tol", check_tol, "additive tolerance for theorem checks");
        cmd->add_option("--eps-supp", eps_supp, "support-membership threshold");
        cmd->add_option("--out", out, "write the report here instead of stdout");
        cmd->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        if (with_optimizer) {
            cmd->add_option("--starts", starts, "multi-start count for the sup search");
            cmd->add_option("--iters", max_iters, "max ascent iterations per start");
            cmd->add_option("--step", step_init, "initial ascent step");
            cmd->add_option("--beta", beta, "log-sum-exp smoothing sharpness");
            cmd->add_option("--opt-tol", opt_tol, "ascent convergence tolerance");
        }
    }
};

json tool_header() {
    json t;
    t["name"] = "pframe";
    t["version"] = pframe::kVersion;
    return t;
}

// ---------------------------------------------------------------- gen ----

struct GenOpts {
    std::string kind;
    double p = 2.0;
    std::size_t dim = 2;
    std::size_t n = 0;
    std::string field = "auto";
    std::uint64_t seed = 0;
    std::string matrix_path;
    std::string role = "analysis";
    std::string out;
};

pframe::Field parse_field(const std::string& s, pframe::Field fallback) {
    if (s == "real") return pframe::Field::Real;
    if (s == "complex") return pframe::Field::Complex;
    return fallback;
}

int cmd_gen(const GenOpts& o) {
    using namespace pframe;
    std::optional<AnalysisFrame> analysis;
    std::optional<VectorFrame> vector_frame;

    if (o.kind == "coordinate") {
        const Field field = parse_field(o.field, Field::Real);
        const std::size_t n = o.n == 0 ? o.dim : o.n;
        analysis = make_split_coordinate_frame(o.p, o.dim, n, field);
    } else if (o.kind == "standard") {
        analysis = make_standard_frame(o.dim, parse_field(o.field, Field::Complex));
    } else if (o.kind == "fourier") {
        analysis = make_fourier_frame(o.n == 0 ? o.dim : o.n);
    } else if (o.kind == "random") {
        const std::size_t n = o.n == 0 ? o.dim : o.n;
        analysis = make_random_parseval2(n, o.dim, o.seed, parse_field(o.field, Field::Real));
    } else if (o.kind == "orthonormal") {
        if (o.matrix_path.empty()) throw ConfigError("--kind orthonormal requires --matrix");
        const json m = io::load_json(o.matrix_path);
        std::vector<CoordVector> rows;
        for (const auto& r : m) {
            CoordVector row;
            for (const auto& z : r) {
                if (z.is_array())
                    row.emplace_back(z[0].get<double>(), z[1].get<double>());
                else
                    row.emplace_back(z.get<double>(), 0.0);
            }
            rows.push_back(std::move(row));
        }
        analysis = make_orthonormal_frame(rows, parse_field(o.field, Field::Complex));
    } else if (o.kind == "dual-coordinate") {
        vector_frame = make_dual_coordinate_frame(o.p, o.dim, parse_field(o.field, Field::Real));
    } else {
        throw ConfigError("unknown --kind '" + o.kind + "'");
    }

    json j;
    if (o.role == "vector") {
        if (!vector_frame) vector_frame = vector_frame_from_analysis(*analysis);
        j = io::vector_frame_to_json(*vector_frame);
    } else if (vector_frame) {
        j = io::vector_frame_to_json(*vector_frame);
    } else {
        j = io::analysis_frame_to_json(*analysis);
    }
    emit(io::dump_report(j), o.out);
    if (!o.out.empty()) std::cerr << "wrote " << o.out << "\n";
    return kExitPass;
}

// -------------------------------------------------------------- check ----

int cmd_check(const std::string& path, std::size_t samples, const CommonOpts& c) {
    using namespace pframe;
    const json raw = io::load_json(path);
    const bool is_vector =
        raw.contains("role") && raw.at("role").get<std::string>() == "vector_frame";

    json report;
    report["tool"] = tool_header();
    report["type"] = "check_report";
    report["file"] = path;
    report["samples"] = samples;

    double defect = 0.0;
    double bound_norm = 0.0;
    if (is_vector) {
        const VectorFrame frame = io::vector_frame_from_json(raw);
        defect = dual_parseval_defect(frame, samples, derive_seed(c.seed, 2));
        bound_norm = max_vector_norm(frame);
        report["role"] = "vector_frame";
        report["fingerprint"] = io::frame_fingerprint(frame);
        report["n"] = frame.size();
    } else {
        const AnalysisFrame frame = io::analysis_frame_from_json(raw);
        defect = parseval_defect(frame, samples, derive_seed(c.seed, 2));
        bound_norm = max_functional_norm(frame);
        report["role"] = "analysis_frame";
        report["fingerprint"] = io::frame_fingerprint(frame);
        report["n"] = frame.size();
    }
    const bool defect_ok = defect <= c.check_tol;
    const bool norms_ok = bound_norm <= 1.0 + c.check_tol;
    report["parseval_defect"] = defect;
    report["max_element_norm"] = bound_norm;
    report["passes"] = json{{"defect_ok", defect_ok}, {"norms_ok", norms_ok},
                            {"all", defect_ok && norms_ok}};
    emit(io::dump_report(report), c.out);
    std::cerr << "defect " << defect << (defect_ok && norms_ok ? " [ok]" : " [FAIL]") << "\n";
    return defect_ok && norms_ok ? kExitPass : kExitFlagFailure;
}

// ------------------------------------------------------------ certify ----

int cmd_certify(const std::string& f_path, const std::string& g_path, const std::string& x_text,
                std::size_t samples, const CommonOpts& c) {
    using namespace pframe;
    const AnalysisFrame f = io::load_analysis_frame(f_path);
    const AnalysisFrame g = io::load_analysis_frame(g_path);

    io::ReportMeta meta;
    meta.f_fingerprint = io::frame_fingerprint(f);
    meta.g_fingerprint = io::frame_fingerprint(g);
    meta.cfg = c.optimizer(3);
    meta.eps_supp = c.eps_supp;
    meta.check_tol = c.check_tol;

    if (!x_text.empty()) {
        const Vector x{parse_coords(x_text)};
        const Certificate cert = certify_point(f, g, x, meta.cfg, c.eps_supp, c.check_tol);
        if (c.format == "csv") throw ConfigError("csv output needs a sampled scan, not --x");
        emit(io::dump_report(io::certificate_to_json(cert, meta)), c.out);
        std::cerr << "lhs " << cert.lhs << ", rhs_point " << cert.rhs_point
                  << (cert.passes.all() ? " [ok]" : " [FAIL]") << "\n";
        return cert.passes.all() ? kExitPass : kExitFlagFailure;
    }

    const ScanReport report =
        counterexample_scan(f, g, samples, c.seed, c.eps_supp, meta.cfg, c.check_tol);
    if (c.format == "csv")
        emit(io::scan_report_to_csv(report), c.out);
    else
        emit(io::dump_report(io::scan_report_to_json(report, meta)), c.out);
    std::cerr << report.violations.size() << " violation(s) in " << report.samples
              << " samples\n";
    return report.violations.empty() ? kExitPass : kExitFlagFailure;
}

int cmd_dual_certify(const std::string& tau_path, const std::string& omega_path,
                     const std::string& f_text, std::size_t samples, const CommonOpts& c) {
    using namespace pframe;
    const VectorFrame tau = io::load_vector_frame(tau_path);
    const VectorFrame omega = io::load_vector_frame(omega_path);

    io::ReportMeta meta;
    meta.f_fingerprint = io::frame_fingerprint(tau);
    meta.g_fingerprint = io::frame_fingerprint(omega);
    meta.cfg = c.optimizer(4);
    meta.eps_supp = c.eps_supp;
    meta.check_tol = c.check_tol;

    if (!f_text.empty()) {
        const Functional f{parse_coords(f_text)};
        const Certificate cert = dual_certify(tau, omega, f, meta.cfg, c.eps_supp, c.check_tol);
        if (c.format == "csv") throw ConfigError("csv output needs a sampled scan, not --f");
        emit(io::dump_report(io::certificate_to_json(cert, meta)), c.out);
        std::cerr << "lhs " << cert.lhs << ", rhs_point " << cert.rhs_point
                  << (cert.passes.all() ? " [ok]" : " [FAIL]") << "\n";
        return cert.passes.all() ? kExitPass : kExitFlagFailure;
    }

    const ScanReport report =
        dual_counterexample_scan(tau, omega, samples, c.seed, c.eps_supp, meta.cfg, c.check_tol);
    if (c.format == "csv")
        emit(io::scan_report_to_csv(report), c.out);
    else
        emit(io::dump_report(io::scan_report_to_json(report, meta)), c.out);
    std::cerr << report.violations.size() << " violation(s) in " << report.samples
              << " samples\n";
    return report.violations.empty() ? kExitPass : kExitFlagFailure;
}

// ------------------------------------------------------------ deutsch ----

int cmd_deutsch(const std::string& tau_path, const std::string& omega_path, std::size_t samples,
                const CommonOpts& c) {
    using namespace pframe;
    const AnalysisFrame tau = io::load_analysis_frame(tau_path);
    const AnalysisFrame omega = io::load_analysis_frame(omega_path);

    const double mu = mutual_coherence(tau, omega);
    const double bound = buzano_overlap_bound(tau, omega);
    const double rhs = -2.0 * std::log(bound);
    const auto sup = estimate_sup_c(tau, omega, c.optimizer(5));
    const bool c_hat_ok = sup.value <= bound + 1e-6;
    const double upper = std::log(static_cast<double>(tau.size()) * omega.size());

    std::size_t chain_violations = 0;
    if (samples > 0) {
        const auto points = sample_unit_sphere(tau.space, samples, derive_seed(c.seed, 6));
        for (const auto& x : points) {
            const double lhs =
                p_shannon_entropy(tau, x).value + p_shannon_entropy(omega, x).value;
            if (!(lhs <= upper + c.check_tol) || !(lhs >= rhs - c.check_tol)) ++chain_violations;
        }
    }

    json report;
    report["tool"] = tool_header();
    report["type"] = "deutsch_report";
    report["frames"] = json{{"tau", io::frame_fingerprint(tau)},
                            {"omega", io::frame_fingerprint(omega)}};
    report["dim"] = tau.space.dim;
    report["mu"] = mu;
    report["buzano_bound"] = bound;
    report["deutsch_rhs"] = rhs;
    report["upper"] = upper;
    report["c_hat"] = sup.value;
    report["samples"] = samples;
    report["chain_violations"] = chain_violations;
    report["passes"] = json{{"c_hat_within_buzano", c_hat_ok},
                            {"chain_ok", chain_violations == 0},
                            {"all", c_hat_ok && chain_violations == 0}};
    emit(io::dump_report(report), c.out);
    std::cerr << "mu " << mu << ", bound " << bound << ", rhs " << rhs << ", c_hat " << sup.value
              << (c_hat_ok && chain_violations == 0 ? " [ok]" : " [FAIL]") << "\n";
    return c_hat_ok && chain_violations == 0 ? kExitPass : kExitFlagFailure;
}

// -------------------------------------------------------------- sweep ----

int cmd_sweep(const std::string& f_path, const std::string& g_path, const std::string& x_text,
              const std::string& alphas_text, const CommonOpts& c) {
    using namespace pframe;
    const AnalysisFrame f = io::load_analysis_frame(f_path);
    const AnalysisFrame g = io::load_analysis_frame(g_path);

    Vector x;
    if (!x_text.empty())
        x.coords = parse_coords(x_text);
    else
        x = sample_unit_sphere(f.space, 1, derive_seed(c.seed, 7)).front();

    std::vector<double> alphas;
    {
        std::stringstream ss(alphas_text);
        std::string token;
        while (std::getline(ss, token, ',')) {
            if (!token.empty()) alphas.push_back(std::stod(token));
        }
    }
    if (alphas.empty()) throw ConfigError("--alphas needs at least one value");

    const auto curve = renyi_sweep(f, g, x, alphas);
    if (c.format == "csv") {
        std::string out = "alpha,renyi_sum\n";
        char buf[96];
        for (const auto& [a, v] : curve) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", a, v);
            out += buf;
        }
        emit(out, c.out);
    } else {
        json report;
        report["tool"] = tool_header();
        report["type"] = "renyi_sweep";
        report["frames"] = json{{"f", io::frame_fingerprint(f)}, {"g", io::frame_fingerprint(g)}};
        json pts = json::array();
        for (const auto& [a, v] : curve) pts.push_back(json{{"alpha", a}, {"value", v}});
        report["curve"] = pts;
        json xj = json::array();
        for (const auto& z : x.coords) xj.push_back(json::array({z.real(), z.imag()}));
        report["x"] = xj;
        emit(io::dump_report(report), c.out);
    }
    std::cerr << "swept " << curve.size() << " orders\n";
    return kExitPass;
}

// ------------------------------------------------------------- search ----

int cmd_search(const std::string& family_name, std::size_t dim, double p,
               const std::string& copies_text, std::size_t runs, const CommonOpts& c) {
    using namespace pframe;
    FamilyParams base;
    base.dim = dim;
    if (family_name == "rotated_onb") {
        base.family = FrameFamily::RotatedOnb;
        base.parameters.assign(dim * (dim - 1) / 2, 0.0);
    } else if (family_name == "weighted_coordinate") {
        base.family = FrameFamily::WeightedCoordinate;
        base.p = p;
        if (copies_text.empty()) {
            base.copies.assign(dim, 1);
        } else {
            std::stringstream ss(copies_text);
            std::string token;
            while (std::getline(ss, token, ','))
                if (!token.empty()) base.copies.push_back(std::stoul(token));
        }
        if (base.copies.size() != dim) throw ConfigError("--copies needs one entry per coordinate");
        for (std::size_t k : base.copies)
            for (std::size_t j = 0; j < k; ++j)
                base.parameters.push_back(1.0 / static_cast<double>(k));
    } else {
        throw ConfigError("unknown --family '" + family_name + "'");
    }
    base.validate();

    std::vector<GapRecord> records;
    records.reserve(runs);
    for (std::size_t r = 0; r < runs; ++r) {
        OptimizerConfig cfg = c.optimizer(100 + r);
        records.push_back(minimize_gap(base, cfg));
    }
    std::stable_sort(records.begin(), records.end(),
                     [](const GapRecord& a, const GapRecord& b) { return a.gap < b.gap; });

    std::string out;
    bool nonnegative = true;
    for (const auto& rec : records) {
        out += io::gap_record_to_json(rec).dump() + "\n";
        if (rec.gap < -1e-9) nonnegative = false;
    }
    emit(out, c.out);
    std::cerr << "best gap " << records.front().gap << " over " << runs
              << " run(s); empirical candidates only\n";
    return nonnegative ? kExitPass : kExitFlagFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parseval p-frame entropy and uncertainty certificates"};
    app.set_version_flag("--version", std::string(pframe::kVersion));
    app.require_subcommand(1);

    GenOpts gen;
    auto* cmd_gen_p = app.add_subcommand("gen", "generate a frame and write its JSON");
    cmd_gen_p->add_option("--kind", gen.kind,
                          "coordinate|standard|fourier|random|orthonormal|dual-coordinate")
        ->required();
    cmd_gen_p->add_option("--p", gen.p, "frame exponent (coordinate kinds)");
    cmd_gen_p->add_option("--dim", gen.dim, "space dimension");
    cmd_gen_p->add_option("--n", gen.n, "functional count (defaults to dim)");
    cmd_gen_p->add_option("--field", gen.field, "real|complex");
    cmd_gen_p->add_option("--seed", gen.seed, "seed for random kinds");
    cmd_gen_p->add_option("--matrix", gen.matrix_path, "JSON rows for --kind orthonormal");
    cmd_gen_p->add_option("--role", gen.role, "analysis|vector output role");
    cmd_gen_p->add_option("--out", gen.out, "output path (stdout when omitted)");

    CommonOpts check_c;
    std::string check_path;
    std::size_t check_samples = 500;
    auto* cmd_check_p = app.add_subcommand("check", "Parseval defect report for a frame file");
    cmd_check_p->add_option("frame", check_path, "frame JSON path")->required();
    cmd_check_p->add_option("--samples", check_samples, "sphere samples");
    check_c.attach(cmd_check_p, false);

    CommonOpts cert_c;
    std::string cert_f, cert_g, cert_x;
    std::size_t cert_samples = 100;
    auto* cmd_cert_p = app.add_subcommand("certify", "uncertainty certificate for a frame pair");
    cmd_cert_p->add_option("--f", cert_f, "analysis frame JSON")->required();
    cmd_cert_p->add_option("--g", cert_g, "analysis frame JSON")->required();
    cmd_cert_p->add_option("--x", cert_x, "evaluation point 're[:im],...' (else sampled scan)");
    cmd_cert_p->add_option("--samples", cert_samples, "scan sample count");
    cert_c.attach(cmd_cert_p);

    CommonOpts dual_c;
    std::string dual_tau, dual_omega, dual_f;
    std::size_t dual_samples = 100;
    auto* cmd_dual_p = app.add_subcommand("dual-certify", "dual certificate for vector frames");
    cmd_dual_p->add_option("--tau", dual_tau, "vector frame JSON")->required();
    cmd_dual_p->add_option("--omega", dual_omega, "vector frame JSON")->required();
    cmd_dual_p->add_option("--f", dual_f, "evaluation functional 're[:im],...'");
    cmd_dual_p->add_option("--samples", dual_samples, "scan sample count");
    dual_c.attach(cmd_dual_p);

    CommonOpts deutsch_c;
    std::string de_tau, de_omega;
    std::size_t de_samples = 0;
    auto* cmd_de_p =
        app.add_subcommand("deutsch", "orthonormal-pair overlap bound and entropy chain");
    cmd_de_p->add_option("--tau", de_tau, "analysis frame JSON (orthonormal)")->required();
    cmd_de_p->add_option("--omega", de_omega, "analysis frame JSON (orthonormal)")->required();
    cmd_de_p->add_option("--samples", de_samples, "sphere samples for the chain check");
    deutsch_c.attach(cmd_de_p);

    CommonOpts sweep_c;
    std::string sweep_f, sweep_g, sweep_x, sweep_alphas;
    auto* cmd_sweep_p = app.add_subcommand("sweep", "Renyi entropy curve over orders alpha");
    cmd_sweep_p->add_option("--f", sweep_f, "analysis frame JSON")->required();
    cmd_sweep_p->add_option("--g", sweep_g, "analysis frame JSON")->required();
    cmd_sweep_p->add_option("--x", sweep_x, "evaluation point (else one seeded sample)");
    cmd_sweep_p->add_option("--alphas", sweep_alphas, "comma-separated orders")->required();
    sweep_c.attach(cmd_sweep_p, false);

    CommonOpts search_c;
    std::string search_family;
    std::size_t search_dim = 2;
    double search_p = 2.0;
    std::string search_copies;
    std::size_t search_runs = 8;
    auto* cmd_search_p = app.add_subcommand("search", "equality-gap minimization over a family");
    cmd_search_p->add_option("--family", search_family, "rotated_onb|weighted_coordinate")
        ->required();
    cmd_search_p->add_option("--dim", search_dim, "space dimension");
    cmd_search_p->add_option("--p", search_p, "exponent (weighted_coordinate)");
    cmd_search_p->add_option("--copies", search_copies, "split sizes per coordinate, e.g. 2,1");
    cmd_search_p->add_option("--runs", search_runs, "independent minimization runs");
    search_c.attach(cmd_search_p);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e);
            return kExitPass;
        }
        std::cerr << e.what() << "\n\n" << app.help();
        return kExitBadInput;
    }

    try {
        if (app.got_subcommand(cmd_gen_p)) return cmd_gen(gen);
        if (app.got_subcommand(cmd_check_p)) return cmd_check(check_path, check_samples, check_c);
        if (app.got_subcommand(cmd_cert_p))
            return cmd_certify(cert_f, cert_g, cert_x, cert_samples, cert_c);
        if (app.got_subcommand(cmd_dual_p))
            return cmd_dual_certify(dual_tau, dual_omega, dual_f, dual_samples, dual_c);
        if (app.got_subcommand(cmd_de_p))
            return cmd_deutsch(de_tau, de_omega, de_samples, deutsch_c);
        if (app.got_subcommand(cmd_sweep_p))
            return cmd_sweep(sweep_f, sweep_g, sweep_x, sweep_alphas, sweep_c);
        if (app.got_subcommand(cmd_search_p))
            return cmd_search(search_family, search_dim, search_p, search_copies, search_runs,
                              search_c);
        std::cerr << "no subcommand selected\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
