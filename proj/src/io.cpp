#include "pframe/io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "pframe/kernels.hpp"
#include "pframe/version.hpp"

namespace pframe::io {

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InputError("scalar entries must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

json rows_to_json(std::span<const CoordVector> rows) {
    json out = json::array();
    for (const auto& row : rows) {
        json r = json::array();
        for (const auto& z : row) r.push_back(complex_to_json(z));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CoordVector> rows_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw InputError("frame needs a nonempty row array");
    std::vector<CoordVector> rows;
    rows.reserve(j.size());
    for (const auto& r : j) {
        if (!r.is_array() || r.empty()) throw InputError("frame rows must be nonempty arrays");
        CoordVector row;
        row.reserve(r.size());
        for (const auto& z : r) row.push_back(complex_from_json(z));
        rows.push_back(std::move(row));
    }
    return rows;
}

json exponent_to_json(double q) {
    if (std::isinf(q)) return json("inf");
    return json(q);
}

double exponent_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return kInfExponent;
        throw InputError("exponent must be a number or \"inf\"");
    }
    if (!j.is_number()) throw InputError("exponent must be a number or \"inf\"");
    return j.get<double>();
}

json tool_block() {
    json t;
    t["name"] = "pframe";
    t["version"] = kVersion;
    t["kernels"] = kernels::active_ops().name;
    return t;
}

json config_block(const ReportMeta& meta) {
    json c;
    c["starts"] = meta.cfg.starts;
    c["max_iters"] = meta.cfg.max_iters;
    c["step_init"] = meta.cfg.step_init;
    c["smoothing_beta"] = meta.cfg.smoothing_beta;
    c["tol"] = meta.cfg.tol;
    c["seed"] = meta.cfg.seed;
    c["eps_supp"] = meta.eps_supp;
    c["check_tol"] = meta.check_tol;
    return c;
}

json coords_to_json(const CoordVector& coords) {
    json out = json::array();
    for (const auto& z : coords) out.push_back(complex_to_json(z));
    return out;
}

json passes_block(const CertFlags& flags) {
    json p;
    p["upper_ok"] = flags.upper_ok;
    p["point_ok"] = flags.point_ok;
    p["global_ok"] = flags.global_ok;
    p["floor_ok"] = flags.floor_ok;
    p["all"] = flags.all();
    return p;
}

json certificate_body(const Certificate& cert) {
    json c;
    c["mode"] = cert.mode == CertMode::Primal ? "primal" : "dual";
    c["n"] = cert.n;
    c["m"] = cert.m;
    c["p"] = cert.p;
    c["lhs"] = cert.lhs;
    c["upper"] = cert.upper;
    c["m_point"] = cert.m_point;
    c["rhs_point"] = cert.rhs_point;
    c["c_hat"] = cert.c_hat;
    c["rhs_global"] = cert.rhs_global;
    c["floor"] = cert.floor;
    c["point"] = coords_to_json(cert.point);
    c["witness"] = coords_to_json(cert.witness);
    c["in_support"] = cert.in_support;
    c["witness_in_support"] = cert.witness_in_support;
    c["passes"] = passes_block(cert.passes);
    c["tolerance"] = cert.tolerance;
    return c;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

json space_to_json(const NormedSpace& space) {
    json s;
    s["dim"] = space.dim;
    s["field"] = space.field == Field::Real ? "real" : "complex";
    json norm;
    norm["kind"] = space.kind == NormKind::Lq ? "lq" : "weighted_lq";
    norm["q"] = exponent_to_json(space.q);
    if (space.kind == NormKind::WeightedLq) norm["weights"] = space.weights;
    s["norm"] = norm;
    return s;
}

NormedSpace space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("field") || !j.contains("norm"))
        throw InputError("space needs dim, field and norm");
    const auto dim = j.at("dim").get<std::size_t>();
    const std::string field_s = j.at("field").get<std::string>();
    if (field_s != "real" && field_s != "complex")
        throw InputError("field must be \"real\" or \"complex\"");
    const Field field = field_s == "real" ? Field::Real : Field::Complex;
    const auto& norm = j.at("norm");
    const std::string kind = norm.at("kind").get<std::string>();
    const double q = exponent_from_json(norm.at("q"));
    if (kind == "lq") return NormedSpace::lq(dim, q, field);
    if (kind == "weighted_lq")
        return NormedSpace::weighted_lq(dim, q, norm.at("weights").get<std::vector<double>>(),
                                        field);
    throw InputError("norm kind must be \"lq\" or \"weighted_lq\"");
}

json analysis_frame_to_json(const AnalysisFrame& frame) {
    json j;
    j["role"] = "analysis_frame";
    j["space"] = space_to_json(frame.space);
    j["p"] = frame.p;
    std::vector<CoordVector> rows;
    rows.reserve(frame.size());
    for (const auto& f : frame.functionals) rows.push_back(f.coords);
    j["functionals"] = rows_to_json(rows);
    return j;
}

AnalysisFrame analysis_frame_from_json(const json& j) {
    if (!j.is_object() || !j.contains("space") || !j.contains("p") || !j.contains("functionals"))
        throw InputError("frame needs space, p and functionals");
    if (j.contains("role") && j.at("role").get<std::string>() != "analysis_frame")
        throw InputError("expected an analysis frame (role \"analysis_frame\")");
    AnalysisFrame frame;
    frame.space = space_from_json(j.at("space"));
    frame.p = j.at("p").get<double>();
    for (auto& row : rows_from_json(j.at("functionals")))
        frame.functionals.push_back(Functional{std::move(row)});
    detail::check_frame(frame);
    return frame;
}

json vector_frame_to_json(const VectorFrame& frame) {
    json j;
    j["role"] = "vector_frame";
    j["space"] = space_to_json(frame.space);
    j["p"] = frame.p;
    std::vector<CoordVector> rows;
    rows.reserve(frame.size());
    for (const auto& v : frame.vectors) rows.push_back(v.coords);
    j["functionals"] = rows_to_json(rows);
    return j;
}

VectorFrame vector_frame_from_json(const json& j) {
    if (!j.is_object() || !j.contains("space") || !j.contains("p") || !j.contains("functionals"))
        throw InputError("frame needs space, p and functionals");
    if (!j.contains("role") || j.at("role").get<std::string>() != "vector_frame")
        throw InputError("expected a vector frame (role \"vector_frame\")");
    VectorFrame frame;
    frame.space = space_from_json(j.at("space"));
    frame.p = j.at("p").get<double>();
    for (auto& row : rows_from_json(j.at("functionals")))
        frame.vectors.push_back(Vector{std::move(row)});
    detail::check_vector_frame(frame);
    return frame;
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("malformed JSON in " + path.string() + ": " + e.what());
    }
}

AnalysisFrame load_analysis_frame(const std::filesystem::path& path) {
    return analysis_frame_from_json(load_json(path));
}

VectorFrame load_vector_frame(const std::filesystem::path& path) {
    return vector_frame_from_json(load_json(path));
}

void save_json(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path.string());
    out << dump_report(j);
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

std::string fingerprint(const json& canonical) {
    const std::string bytes = canonical.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

std::string frame_fingerprint(const AnalysisFrame& frame) {
    return fingerprint(analysis_frame_to_json(frame));
}

std::string frame_fingerprint(const VectorFrame& frame) {
    return fingerprint(vector_frame_to_json(frame));
}

json certificate_to_json(const Certificate& cert, const ReportMeta& meta) {
    json j;
    j["tool"] = tool_block();
    j["type"] = "certificate";
    json frames;
    frames["f"] = json{{"fingerprint", meta.f_fingerprint}, {"n", cert.n}};
    frames["g"] = json{{"fingerprint", meta.g_fingerprint}, {"n", cert.m}};
    j["frames"] = frames;
    j["config"] = config_block(meta);
    j["certificate"] = certificate_body(cert);
    return j;
}

json scan_report_to_json(const ScanReport& report, const ReportMeta& meta) {
    json j;
    j["tool"] = tool_block();
    j["type"] = "scan_report";
    j["config"] = config_block(meta);
    json frames;
    frames["f"] = json{{"fingerprint", meta.f_fingerprint}};
    frames["g"] = json{{"fingerprint", meta.g_fingerprint}};
    j["frames"] = frames;
    j["samples"] = report.samples;
    j["c_hat_base"] = report.c_hat_base;
    j["violation_count"] = report.violations.size();
    j["violations"] = report.violations;

    json rows = json::array();
    for (std::size_t i = 0; i < report.certificates.size(); ++i) {
        const auto& c = report.certificates[i];
        json r;
        r["sample_index"] = i;
        r["lhs"] = c.lhs;
        r["m_point"] = c.m_point;
        r["rhs_point"] = c.rhs_point;
        r["c_hat"] = c.c_hat;
        r["rhs_global"] = c.rhs_global;
        r["in_support"] = c.in_support;
        r["passes"] = passes_block(c.passes);
        rows.push_back(std::move(r));
    }
    j["rows"] = rows;
    return j;
}

std::string scan_report_to_csv(const ScanReport& report) {
    std::string out =
        "sample_index,lhs,upper,m_point,rhs_point,c_hat,rhs_global,floor,"
        "in_support,upper_ok,point_ok,global_ok,floor_ok\n";
    for (std::size_t i = 0; i < report.certificates.size(); ++i) {
        const auto& c = report.certificates[i];
        out += std::to_string(i);
        for (double v : {c.lhs, c.upper, c.m_point, c.rhs_point, c.c_hat, c.rhs_global, c.floor})
            out += "," + format_double(v);
        out += std::string(",") + (c.in_support ? "1" : "0");
        out += std::string(",") + (c.passes.upper_ok ? "1" : "0");
        out += std::string(",") + (c.passes.point_ok ? "1" : "0");
        out += std::string(",") + (c.passes.global_ok ? "1" : "0");
        out += std::string(",") + (c.passes.floor_ok ? "1" : "0");
        out += "\n";
    }
    return out;
}

json gap_record_to_json(const GapRecord& record) {
    json j;
    j["type"] = "gap_record";
    j["family"] =
        record.params.family == FrameFamily::RotatedOnb ? "rotated_onb" : "weighted_coordinate";
    j["dim"] = record.params.dim;
    j["p"] = record.params.p;
    j["copies"] = record.params.copies;
    j["parameters"] = record.params.parameters;
    j["x"] = coords_to_json(record.x.coords);
    j["gap"] = record.gap;
    j["certificate"] = certificate_body(record.certificate);
    return j;
}

} // namespace pframe::io
