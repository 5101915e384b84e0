#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "pframe/certify.hpp"
#include "pframe/duality.hpp"
#include "pframe/search.hpp"

namespace pframe::io {

using json = nlohmann::ordered_json; // insertion order keeps reports byte-stable

json space_to_json(const NormedSpace& space);
NormedSpace space_from_json(const json& j);

/// Frame files share one schema; "role" discriminates analysis frames
/// (functionals on X) from vector frames (vectors in X, frames for X*).
/// Scalars are always [re, im] pairs.
json analysis_frame_to_json(const AnalysisFrame& frame);
AnalysisFrame analysis_frame_from_json(const json& j);
json vector_frame_to_json(const VectorFrame& frame);
VectorFrame vector_frame_from_json(const json& j);

AnalysisFrame load_analysis_frame(const std::filesystem::path& path);
VectorFrame load_vector_frame(const std::filesystem::path& path);
json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const json& j);
std::string dump_report(const json& j); // canonical 2-space dump + newline

/// FNV-1a content hash of the canonical frame JSON, as fixed-width hex.
std::string fingerprint(const json& canonical);
std::string frame_fingerprint(const AnalysisFrame& frame);
std::string frame_fingerprint(const VectorFrame& frame);

/// Context echoed into every report for provenance.
struct ReportMeta {
    std::string f_fingerprint;
    std::string g_fingerprint;
    OptimizerConfig cfg;
    double eps_supp = 1e-12;
    double check_tol = 1e-9;
};

json certificate_to_json(const Certificate& cert, const ReportMeta& meta);
json scan_report_to_json(const ScanReport& report, const ReportMeta& meta);

/// Bulk CSV: one row per sample.
std::string scan_report_to_csv(const ScanReport& report);

/// One line-delimited JSON record for the equality search.
json gap_record_to_json(const GapRecord& record);

} // namespace pframe::io
