#pragma once

/**
 * @file io.hpp
 * @brief JSON file formats and the canonical writer.
 *
 * Quaternions are 4-element arrays [w, x, y, z]; matrices are row-major
 * nested arrays of quaternions. Canonical output sorts object keys, prints
 * every double as %.16e (17 significant digits, exact round trip) and writes
 * non-finite values as null, so equal values always produce equal bytes.
 *
 *   frame:  {"version": 1, "d": d, "n": n,
 *            "points": [{"q": [4], "w": w, "vectors": [[[4] x d] x n]}, ...]}
 *   matrix: {"version": 1, "rows": r, "cols": c, "data": [[[4] x c] x r]}
 *           (a bare nested array is also accepted)
 *   gauge:  {"version": 1, "n": n, "gauge": [matrix data per point]}
 */

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qframe/kernel.hpp"

namespace qframe {

using Json = nlohmann::json;

/// Canonical text of a JSON value, terminated by a newline.
std::string canonical_dump(const Json& value);

/// Parses JSON text; syntax errors become ParseError with 1-based line and column.
Json parse_json(std::string_view text);

std::string read_file(const std::filesystem::path& path);
/// Writes atomically enough for a CLI: truncate, write, check the stream.
void write_file(const std::filesystem::path& path, std::string_view content);

Json to_json(const Quaternion& q);
Json to_json(const QVector& v);
Json to_json(const QMatrix& m);  // bare row-major data

Json frame_to_json(const QuadFrame& f);
/// Shape and value checks report the offending path as ValidationError;
/// frame invariants propagate from build_frame.
QuadFrame frame_from_json(const Json& j);

Json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j);

Json gauge_to_json(const Gauge& u);
Gauge gauge_from_json(const Json& j);

/// {"points", "n", "weights", "blocks": [[block(p, q) for q] for p], "residuals"}.
Json kernel_to_json(const FrameKernel& k);

QuadFrame load_frame(const std::filesystem::path& path);
void save_frame(const QuadFrame& f, const std::filesystem::path& path);
QMatrix load_matrix(const std::filesystem::path& path);
void save_matrix(const QMatrix& m, const std::filesystem::path& path);
Gauge load_gauge(const std::filesystem::path& path);
void save_gauge(const Gauge& u, const std::filesystem::path& path);

/// FNV-1a 64-bit digest as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace qframe
