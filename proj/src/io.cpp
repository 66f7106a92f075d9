#include "latdim/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "latdim/error.hpp"

namespace latdim::io {

namespace {

[[noreturn]] void input_error(const std::string& source, std::size_t line, const std::string& what) {
  std::ostringstream os;
  os << source << ":" << line << ": " << what;
  throw Error(ErrorCode::InvalidInput, os.str());
}

}  // namespace

FiniteGroup read_cayley_text(std::istream& in, const std::string& source, const std::string& label) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t order = 0;
  bool have_order = false;
  std::vector<std::vector<Element>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_order) {
      std::string word;
      long long n = -1;
      if (!(ls >> word >> n) || word != "order" || n <= 0)
        input_error(source, lineno, "expected 'order n' with n >= 1");
      order = static_cast<std::size_t>(n);
      have_order = true;
      continue;
    }
    if (rows.size() == order) input_error(source, lineno, "more rows than the declared order");
    std::vector<Element> row;
    long long v;
    while (ls >> v) {
      if (v < 0) input_error(source, lineno, "negative element index");
      row.push_back(static_cast<Element>(v));
    }
    if (!ls.eof()) input_error(source, lineno, "non-integer entry");
    if (row.size() != order) {
      std::ostringstream os;
      os << "row has " << row.size() << " entries, expected " << order;
      input_error(source, lineno, os.str());
    }
    rows.push_back(std::move(row));
  }
  if (!have_order) input_error(source, lineno, "missing 'order n' header");
  if (rows.size() != order) {
    std::ostringstream os;
    os << "found " << rows.size() << " rows, expected " << order;
    input_error(source, lineno, os.str());
  }
  try {
    return FiniteGroup::from_cayley_table(rows, label);
  } catch (const Error& e) {
    throw Error(e.code(), source + ": " + e.what());
  }
}

FiniteGroup read_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  return read_cayley_text(in, path, std::filesystem::path(path).stem().string());
}

void write_cayley_text(std::ostream& out, const FiniteGroup& g) {
  out << "order " << g.order() << "\n";
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) out << (y ? " " : "") << g.mul(x, y);
    out << "\n";
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  const auto text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

FiniteGroup load_group(const std::string& spec) {
  if (std::filesystem::exists(spec)) {
    if (std::filesystem::path(spec).extension() == ".json") return group_from_json(read_json_file(spec));
    return read_cayley_file(spec);
  }
  return build_named(spec);
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["label"] = g.label();
  j["order"] = g.order();
  j["cayley"] = g.cayley();
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  try {
    auto table = j.at("cayley").get<std::vector<std::vector<Element>>>();
    const auto label = j.contains("label") ? j.at("label").get<std::string>() : std::string("G");
    if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
      throw Error(ErrorCode::InvalidInput, "'order' does not match the Cayley table");
    return FiniteGroup::from_cayley_table(table, label);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("group JSON: ") + e.what());
  }
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::InvalidInput, "complex number must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json cocycle_to_json(const Cocycle& c) {
  const auto n = c.group().order();
  Json table = Json::array();
  for (Element x = 0; x < n; ++x) {
    Json row = Json::array();
    for (Element y = 0; y < n; ++y) row.push_back(complex_to_json(c(x, y)));
    table.push_back(std::move(row));
  }
  Json j;
  j["label"] = c.label();
  j["order"] = n;
  j["table"] = std::move(table);
  return j;
}

Cocycle cocycle_from_json(const FiniteGroup& g, const Json& j) {
  try {
    const auto& table = j.at("table");
    const auto n = g.order();
    if (table.size() != n) throw Error(ErrorCode::DimensionMismatch, "cocycle table has wrong number of rows");
    std::vector<Complex> flat;
    flat.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      if (table[x].size() != n) {
        std::ostringstream os;
        os << "cocycle row " << x << " has " << table[x].size() << " entries, expected " << n;
        throw Error(ErrorCode::DimensionMismatch, os.str());
      }
      for (std::size_t y = 0; y < n; ++y) flat.push_back(complex_from_json(table[x][y]));
    }
    const auto label = j.contains("label") ? j.at("label").get<std::string>() : std::string("custom");
    return Cocycle(g, std::move(flat), label);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("cocycle JSON: ") + e.what());
  }
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::InvalidInput, "matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j[r].size()) != cols)
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "vector must be an array");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

Json rep_to_json(const ProjectiveRep& r) {
  Json mats = Json::array();
  for (const auto& m : r.matrices()) mats.push_back(matrix_to_json(m));
  Json j;
  j["label"] = r.label();
  j["dim"] = r.dim();
  j["matrices"] = std::move(mats);
  return j;
}

ProjectiveRep rep_from_json(const Cocycle& c, const Json& j) {
  try {
    std::vector<Matrix> mats;
    for (const auto& m : j.at("matrices")) mats.push_back(matrix_from_json(m));
    const auto label = j.contains("label") ? j.at("label").get<std::string>() : std::string("custom");
    return ProjectiveRep(c, std::move(mats), label);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("representation JSON: ") + e.what());
  }
}

Json algebra_element_to_json(const AlgebraElement& a) {
  Json j;
  j["cocycle"] = a.cocycle().label();
  j["coeffs"] = vector_to_json(a.coeffs());
  return j;
}

Json system_to_json(const MultiwindowSystem& sys) {
  Json windows = Json::array();
  for (std::size_t i = 0; i < sys.n; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < sys.d; ++k) row.push_back(vector_to_json(sys.window(i, k)));
    windows.push_back(std::move(row));
  }
  Json j;
  j["n"] = sys.n;
  j["d"] = sys.d;
  j["dim"] = sys.rep.dim();
  j["lattice_order"] = sys.lattice.order();
  j["windows"] = std::move(windows);
  return j;
}

Json frame_report_to_json(const FrameReport& r) {
  Json j;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["is_frame"] = r.is_frame;
  j["riesz_lower"] = r.riesz_lower;
  j["riesz_upper"] = r.riesz_upper;
  j["is_riesz_sequence"] = r.is_riesz_sequence;
  j["is_riesz_basis"] = r.is_riesz_basis;
  return j;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    const auto& f = fields[i];
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
      out << f;
      continue;
    }
    out << '"';
    for (char ch : f) {
      if (ch == '"') out << '"';
      out << ch;
    }
    out << '"';
  }
  out << "\r\n";
}

std::vector<std::vector<std::string>> read_csv(std::istream& in, const std::string& source) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, field_started = false;
  std::size_t line = 1, quote_line = 0;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    if (field_started || !row.empty()) {
      end_field();
      rows.push_back(std::move(row));
      row.clear();
    }
  };
  char ch;
  while (in.get(ch)) {
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        if (ch == '\n') ++line;
        field.push_back(ch);
      }
      continue;
    }
    switch (ch) {
      case '"':
        quoted = true;
        field_started = true;
        quote_line = line;
        break;
      case ',':
        end_field();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        ++line;
        break;
      default:
        field.push_back(ch);
        field_started = true;
    }
  }
  if (quoted) input_error(source, quote_line, "unterminated quoted field");
  end_row();
  return rows;
}

std::vector<Subgroup> parse_lattices(const FiniteGroup& g, const std::string& spec) {
  std::string s;
  for (char ch : spec)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s == "all") return all_subgroups(g);
  if (s.empty() || s == "trivial" || s == "()") return {trivial_subgroup(g)};
  if (s == "whole") return {whole_group(g)};

  std::vector<Element> gens;
  auto parse_tuple = [&](const std::string& body) {
    std::vector<std::size_t> coords;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t v = 0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
        throw Error(ErrorCode::InvalidInput, "lattice spec: bad coordinate '" + item + "' in " + spec);
      coords.push_back(v);
    }
    gens.push_back(g.from_coordinates(coords));
  };
  if (s.front() != '(') {
    parse_tuple(s);
  } else {
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] != '(') throw Error(ErrorCode::InvalidInput, "lattice spec: expected '(' in " + spec);
      const auto close = s.find(')', pos);
      if (close == std::string::npos) throw Error(ErrorCode::InvalidInput, "lattice spec: missing ')' in " + spec);
      const auto body = s.substr(pos + 1, close - pos - 1);
      if (!body.empty()) parse_tuple(body);
      pos = close + 1;
      if (pos < s.size()) {
        if (s[pos] != ',') throw Error(ErrorCode::InvalidInput, "lattice spec: expected ',' in " + spec);
        ++pos;
      }
    }
  }
  return {subgroup_generated(g, gens)};
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

}  // namespace latdim::io
