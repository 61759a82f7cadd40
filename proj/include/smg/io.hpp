#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "smg/constructions.hpp"
#include "smg/discharging.hpp"
#include "smg/embedding.hpp"
#include "smg/verifier.hpp"

namespace smg {

inline constexpr const char* kFormatTag = "smg-1";
inline constexpr const char* kGeneratorVersion = "smg 0.1.0";

struct GraphMetadata {
  std::string name;
  std::optional<double> residual_max;
  std::string generator = kGeneratorVersion;
};

/// Contents of an "smg-1" file.
struct GraphFile {
  EmbeddedGraph graph;
  std::optional<GraphMetadata> metadata;
};

/// Serializes to the canonical JSON text: fixed key order, one vertex or
/// edge per line, doubles with 17 significant digits.
std::string to_smg(const GraphFile& file);

/// Parses "smg-1" text. Vertices whose norm drifts by at most 1e-9 are
/// renormalized and a warning is appended; anything else malformed throws
/// FormatError naming the record.
GraphFile parse_smg(const std::string& text, std::vector<std::string>* warnings = nullptr);

GraphFile read_graph(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);

/// Writes via a temporary file and rename, so a failed write leaves no
/// partial output.
void write_graph(const std::filesystem::path& path, const GraphFile& file);
void write_text(const std::filesystem::path& path, const std::string& text);

GraphFile to_graph_file(const ConstructionResult& r);

enum class ExportFormat { Off, Svg, Csv };

ExportFormat export_format_from_string(const std::string& s);

struct SvgOptions {
  Vec3 view_axis = Vec3(0.3, -0.4, 0.866);
  int samples_per_arc = 64;
  double size = 600.0;
};

/// OFF polygon mesh: vertices plus traced faces.
std::string export_off(const EmbeddedGraph& g);
/// Orthographic view along view_axis; one <path> per edge, dashed when the
/// arc midpoint is on the far hemisphere.
std::string export_svg(const EmbeddedGraph& g, const SvgOptions& options = {});
/// Header `i,j,length_rad`, one row per edge.
std::string export_csv(const EmbeddedGraph& g);
std::string export_graph(const EmbeddedGraph& g, ExportFormat format);

std::string report_text(const VerificationReport& r);
std::string report_json(const VerificationReport& r);
std::string ledger_text(const AuditResult& a);
std::string ledger_json(const AuditResult& a);

}  // namespace smg
