#pragma once

#include "tph/assembly.hpp"
#include "tph/matrix.hpp"
#include "tph/problem.hpp"
#include "tph/sequence.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

// JSON documents exchanged by the CLI. Every scalar is a canonical rational
// string; JSON integers are accepted on input, floating literals never.
namespace tph::io {

using nlohmann::json;

/// [[ "1/2", "0" ], ...] <-> matrix; rows/cols are validated against the grid.
json grid_to_json(const ExactMatrix& m);
ExactMatrix grid_from_json(const json& grid, std::size_t rows, std::size_t cols);

/// {"rows": r, "cols": c, "entries": [[...], ...]}
json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& doc);

/// {"p","q","n","m","a": [n+m+1 grids, j = -m..n], "b": [n+m+1 grids, j = 0..n+m]}
json problem_to_json(const TphProblem& prob);
TphProblem problem_from_json(const json& doc);

struct ResultFile {
  std::string status = "ok";
  std::string sign = "plus";
  std::string method = "direct";
  ExactMatrix pinv;
  std::vector<int> indices;
  std::optional<int> alpha;
  std::optional<int> omega;
  bool invertible = false;
  bool transposed = false;
  bool zero_short_circuit = false;
  std::optional<Rational> det_const;
  std::map<std::string, bool> checks;

  friend bool operator==(const ResultFile&, const ResultFile&) = default;
};

ResultFile make_result_file(const TphResult& result);
json result_to_json(const ResultFile& result);
ResultFile result_from_json(const json& doc);

/// d_k, Delta_k, alpha, omega, indices and (lambda, nu) pairs.
json analysis_to_json(const IndexTable& table);

std::string to_string(Sign sign);
std::string to_string(Method method);
Sign parse_sign(const std::string& text);
Method parse_method(const std::string& text);

/// Reads and parses a JSON file; I/O or syntax failures are ParseError.
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& doc);

} // namespace tph::io
