#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "latdim/frame.hpp"
#include "latdim/twisted_algebra.hpp"

namespace latdim::io {

using Json = nlohmann::ordered_json;

/// Reads "order n" followed by n rows of n indices. Errors carry
/// "source:line" context. Blank lines and lines starting with '#' are skipped.
FiniteGroup read_cayley_text(std::istream& in, const std::string& source, const std::string& label);
FiniteGroup read_cayley_file(const std::string& path);
void write_cayley_text(std::ostream& out, const FiniteGroup& g);

/// A builtin name (Z6, S3, D4, Q8, Z4xZ4, ...) or a path to a Cayley text
/// file or a JSON group.
FiniteGroup load_group(const std::string& spec);

Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// {"label": ..., "order": n, "table": [[[re,im], ...], ...]}
Json cocycle_to_json(const Cocycle& c);
Cocycle cocycle_from_json(const FiniteGroup& g, const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

/// {"label": ..., "dim": k, "matrices": [...]}
Json rep_to_json(const ProjectiveRep& r);
ProjectiveRep rep_from_json(const Cocycle& c, const Json& j);

Json algebra_element_to_json(const AlgebraElement& a);
Json system_to_json(const MultiwindowSystem& sys);
Json frame_report_to_json(const FrameReport& r);

/// Reads a whole file; throws InvalidInput naming the path on failure.
std::string read_file(const std::string& path);
Json read_json_file(const std::string& path);

/// RFC 4180 style: fields containing ',', '"' or newlines are quoted.
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);
/// Parses a CSV document into rows of fields. Throws InvalidInput with the
/// line number on an unterminated quote.
std::vector<std::vector<std::string>> read_csv(std::istream& in, const std::string& source);

/// Lattice grammar: "all", "trivial", "whole", or comma-separated tuples
/// "(2,0),(0,2)" in the group's coordinates. A bare integer "3" is
/// accepted for single-coordinate groups.
std::vector<Subgroup> parse_lattices(const FiniteGroup& g, const std::string& spec);

/// Shortest round-trip decimal representation.
std::string format_double(double v);

}  // namespace latdim::io
