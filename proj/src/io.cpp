#include "qframe/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qframe/errors.hpp"

namespace qframe {

namespace {

void dump_number(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  out += buf;
}

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void dump(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner_pad(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::null: out += "null"; break;
    case Json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
    case Json::value_t::number_integer: out += std::to_string(j.get<std::int64_t>()); break;
    case Json::value_t::number_unsigned: out += std::to_string(j.get<std::uint64_t>()); break;
    case Json::value_t::number_float: dump_number(out, j.get<double>()); break;
    case Json::value_t::string: out += j.dump(); break;
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      const bool flat = std::all_of(j.begin(), j.end(), is_scalar);
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",";
        if (!flat) out += "\n" + inner_pad;
        dump(out, e, indent + 1);
        first = false;
      }
      if (!flat) out += "\n" + pad;
      out += ']';
      break;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      // nlohmann::json stores objects in a std::map, so iteration is sorted.
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        out += "\n" + inner_pad + Json(key).dump() + ": ";
        dump(out, value, indent + 1);
        first = false;
      }
      out += "\n" + pad + '}';
      break;
    }
    default: throw ValidationError("canonical_dump: unsupported JSON value");
  }
}

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) invalid(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) invalid(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t positive_count(const Json& j, const std::string& where) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) invalid(where, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v <= 0) invalid(where, "must be positive");
  return static_cast<std::size_t>(v);
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) invalid(where, "expected a number");
  return j.get<double>();
}

void require_version(const Json& j, const std::string& where) {
  const Json& v = field(j, "version", where);
  if (!v.is_number_integer() || v.get<std::int64_t>() != 1) invalid(where + ".version", "must be 1");
}

Quaternion quaternion_from(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) invalid(where, "expected a 4-element quaternion array");
  return {number(j[0], where + "[0]"), number(j[1], where + "[1]"), number(j[2], where + "[2]"),
          number(j[3], where + "[3]")};
}

QVector vector_from(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.size() != dim) {
    invalid(where, "expected " + std::to_string(dim) + " quaternions");
  }
  QVector v(dim);
  for (std::size_t k = 0; k < dim; ++k) v[k] = quaternion_from(j[k], where + "[" + std::to_string(k) + "]");
  return v;
}

QMatrix matrix_data_from(const Json& data, std::size_t rows, std::size_t cols,
                         const std::string& where) {
  if (!data.is_array() || data.size() != rows) {
    invalid(where, "expected " + std::to_string(rows) + " rows");
  }
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const QVector row = vector_from(data[r], cols, where + "[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

QMatrix bare_matrix_from(const Json& data, const std::string& where) {
  if (!data.is_array() || data.empty() || !data[0].is_array() || data[0].empty()) {
    invalid(where, "expected a nonempty nested array of quaternions");
  }
  return matrix_data_from(data, data.size(), data[0].size(), where);
}

}  // namespace

std::string canonical_dump(const Json& value) {
  std::string out;
  dump(out, value, 0);
  out += '\n';
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t byte = std::min<std::size_t>(e.byte, text.size() + 1);
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream os;
    os << "parse error at line " << line << ", column " << column << ": " << e.what();
    throw ParseError(os.str(), line, column);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

Json to_json(const Quaternion& q) { return Json::array({q.w, q.x, q.y, q.z}); }

Json to_json(const QVector& v) {
  Json a = Json::array();
  for (const auto& q : v.entries()) a.push_back(to_json(q));
  return a;
}

Json to_json(const QMatrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    a.push_back(std::move(row));
  }
  return a;
}

Json frame_to_json(const QuadFrame& f) {
  Json points = Json::array();
  for (const auto& p : f.points()) {
    Json vectors = Json::array();
    for (const auto& v : p.vectors) vectors.push_back(to_json(v));
    points.push_back({{"q", to_json(p.q)}, {"w", p.w}, {"vectors", std::move(vectors)}});
  }
  return {{"version", 1}, {"d", f.dim()}, {"n", f.rank()}, {"points", std::move(points)}};
}

QuadFrame frame_from_json(const Json& j) {
  const std::string root = "frame";
  require_version(j, root);
  const std::size_t d = positive_count(field(j, "d", root), root + ".d");
  const std::size_t n = positive_count(field(j, "n", root), root + ".n");
  const Json& pts = field(j, "points", root);
  if (!pts.is_array() || pts.empty()) invalid(root + ".points", "expected a nonempty array");
  std::vector<QuadPoint> points;
  points.reserve(pts.size());
  for (std::size_t m = 0; m < pts.size(); ++m) {
    const std::string where = root + ".points[" + std::to_string(m) + "]";
    QuadPoint p;
    p.q = quaternion_from(field(pts[m], "q", where), where + ".q");
    p.w = number(field(pts[m], "w", where), where + ".w");
    if (!(p.w > 0.0) || !std::isfinite(p.w)) invalid(where + ".w", "weight must be positive and finite");
    const Json& vecs = field(pts[m], "vectors", where);
    if (!vecs.is_array() || vecs.size() != n) {
      invalid(where + ".vectors", "expected " + std::to_string(n) + " vectors");
    }
    for (std::size_t i = 0; i < n; ++i) {
      p.vectors.push_back(vector_from(vecs[i], d, where + ".vectors[" + std::to_string(i) + "]"));
    }
    points.push_back(std::move(p));
  }
  return build_frame(std::move(points));
}

Json matrix_to_json(const QMatrix& m) {
  return {{"version", 1}, {"rows", m.rows()}, {"cols", m.cols()}, {"data", to_json(m)}};
}

QMatrix matrix_from_json(const Json& j) {
  if (j.is_array()) return bare_matrix_from(j, "matrix");
  const std::string root = "matrix";
  require_version(j, root);
  const std::size_t rows = positive_count(field(j, "rows", root), root + ".rows");
  const std::size_t cols = positive_count(field(j, "cols", root), root + ".cols");
  return matrix_data_from(field(j, "data", root), rows, cols, root + ".data");
}

Json gauge_to_json(const Gauge& u) {
  Json mats = Json::array();
  for (const auto& m : u) mats.push_back(to_json(m));
  return {{"version", 1}, {"n", u.empty() ? 0 : u.front().rows()}, {"gauge", std::move(mats)}};
}

Gauge gauge_from_json(const Json& j) {
  const std::string root = "gauge";
  require_version(j, root);
  const std::size_t n = positive_count(field(j, "n", root), root + ".n");
  const Json& mats = field(j, "gauge", root);
  if (!mats.is_array() || mats.empty()) invalid(root + ".gauge", "expected a nonempty array");
  Gauge u;
  for (std::size_t m = 0; m < mats.size(); ++m) {
    u.push_back(matrix_data_from(mats[m], n, n, root + ".gauge[" + std::to_string(m) + "]"));
  }
  return u;
}

Json kernel_to_json(const FrameKernel& k) {
  Json blocks = Json::array();
  for (std::size_t p = 0; p < k.points(); ++p) {
    Json row = Json::array();
    for (std::size_t q = 0; q < k.points(); ++q) row.push_back(to_json(k.block(p, q)));
    blocks.push_back(std::move(row));
  }
  const KernelResiduals& r = k.residuals();
  return {{"version", 1},
          {"points", k.points()},
          {"n", k.rank()},
          {"weights", k.weights()},
          {"blocks", std::move(blocks)},
          {"residuals",
           {{"min_diagonal", r.min_diagonal},
            {"diagonal_imag", r.diagonal_imag},
            {"hermitian", r.hermitian},
            {"reproducing", r.reproducing}}}};
}

QuadFrame load_frame(const std::filesystem::path& path) {
  return frame_from_json(parse_json(read_file(path)));
}

void save_frame(const QuadFrame& f, const std::filesystem::path& path) {
  write_file(path, canonical_dump(frame_to_json(f)));
}

QMatrix load_matrix(const std::filesystem::path& path) {
  return matrix_from_json(parse_json(read_file(path)));
}

void save_matrix(const QMatrix& m, const std::filesystem::path& path) {
  write_file(path, canonical_dump(matrix_to_json(m)));
}

Gauge load_gauge(const std::filesystem::path& path) {
  return gauge_from_json(parse_json(read_file(path)));
}

void save_gauge(const Gauge& u, const std::filesystem::path& path) {
  write_file(path, canonical_dump(gauge_to_json(u)));
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace qframe
