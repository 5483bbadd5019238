#include "tph/io.hpp"

#include "tph/errors.hpp"

#include <fstream>
#include <sstream>

namespace tph::io {

namespace {

Rational scalar_from_json(const json& v) {
  if (v.is_string()) {
    return parse_rational(v.get<std::string>());
  }
  if (v.is_number_integer()) {
    return parse_rational(v.dump());
  }
  throw ParseError("matrix entry must be a rational string or an integer, got " + v.dump());
}

template <typename T>
T required(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field \"") + key + "\": " + e.what());
  }
}

int required_nat(const json& doc, const char* key) {
  const json& v = doc.contains(key) ? doc.at(key) : json();
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return static_cast<int>(v.get<long long>());
}

std::vector<ExactMatrix> blocks_from_json(const json& doc, const char* key, int count, int p, int q) {
  if (!doc.contains(key) || !doc.at(key).is_array()) {
    throw ParseError(std::string("field \"") + key + "\" must be an array of blocks");
  }
  const json& arr = doc.at(key);
  if (arr.size() != static_cast<std::size_t>(count)) {
    throw ParseError(std::string("field \"") + key + "\" must hold " + std::to_string(count) + " blocks");
  }
  std::vector<ExactMatrix> blocks;
  blocks.reserve(arr.size());
  for (const auto& g : arr) {
    blocks.push_back(grid_from_json(g, static_cast<std::size_t>(p), static_cast<std::size_t>(q)));
  }
  return blocks;
}

} // namespace

json grid_to_json(const ExactMatrix& m) {
  json grid = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(format_rational(m(r, c)));
    }
    grid.push_back(std::move(row));
  }
  return grid;
}

ExactMatrix grid_from_json(const json& grid, std::size_t rows, std::size_t cols) {
  if (!grid.is_array() || grid.size() != rows) {
    throw ParseError("grid must be an array of " + std::to_string(rows) + " rows");
  }
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = grid[r];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("grid row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = scalar_from_json(row[c]);
    }
  }
  return m;
}

json matrix_to_json(const ExactMatrix& m) {
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", grid_to_json(m)}};
}

ExactMatrix matrix_from_json(const json& doc) {
  const int rows = required_nat(doc, "rows");
  const int cols = required_nat(doc, "cols");
  if (!doc.contains("entries")) {
    throw ParseError("missing field \"entries\"");
  }
  return grid_from_json(doc.at("entries"), static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
}

json problem_to_json(const TphProblem& prob) {
  json a = json::array();
  json b = json::array();
  for (const auto& blk : prob.a) {
    a.push_back(grid_to_json(blk));
  }
  for (const auto& blk : prob.b) {
    b.push_back(grid_to_json(blk));
  }
  return json{{"p", prob.p}, {"q", prob.q}, {"n", prob.n}, {"m", prob.m}, {"a", a}, {"b", b}};
}

TphProblem problem_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw ParseError("problem document must be a JSON object");
  }
  TphProblem prob;
  prob.p = required_nat(doc, "p");
  prob.q = required_nat(doc, "q");
  prob.n = required_nat(doc, "n");
  prob.m = required_nat(doc, "m");
  if (prob.p == 0 || prob.q == 0) {
    throw ParseError("block sizes p and q must be positive");
  }
  const int count = prob.n + prob.m + 1;
  prob.a = blocks_from_json(doc, "a", count, prob.p, prob.q);
  prob.b = blocks_from_json(doc, "b", count, prob.p, prob.q);
  return prob;
}

std::string to_string(Sign sign) {
  return sign == Sign::plus ? "plus" : "minus";
}

std::string to_string(Method method) {
  return method == Method::direct ? "direct" : "blockwise";
}

Sign parse_sign(const std::string& text) {
  if (text == "plus") {
    return Sign::plus;
  }
  if (text == "minus") {
    return Sign::minus;
  }
  throw ParseError("sign must be \"plus\" or \"minus\"");
}

Method parse_method(const std::string& text) {
  if (text == "direct") {
    return Method::direct;
  }
  if (text == "blockwise") {
    return Method::blockwise;
  }
  throw ParseError("method must be \"direct\" or \"blockwise\"");
}

ResultFile make_result_file(const TphResult& result) {
  ResultFile file;
  file.sign = to_string(result.sign);
  file.method = to_string(result.method);
  file.pinv = result.pinv;
  if (result.table) {
    file.indices = result.table->mu;
    file.alpha = result.table->alpha;
    file.omega = result.table->omega;
  }
  file.invertible = result.invertible;
  file.transposed = result.transposed;
  file.zero_short_circuit = result.zero_short_circuit;
  file.det_const = result.det_const;
  file.checks = result.checks;
  for (const auto& [name, ok] : result.checks) {
    if (!ok) {
      file.status = "check_failed";
    }
  }
  return file;
}

json result_to_json(const ResultFile& result) {
  json doc{{"status", result.status},
           {"sign", result.sign},
           {"method", result.method},
           {"rows", result.pinv.rows()},
           {"cols", result.pinv.cols()},
           {"pinv", grid_to_json(result.pinv)},
           {"indices", result.indices},
           {"alpha", result.alpha ? json(*result.alpha) : json()},
           {"omega", result.omega ? json(*result.omega) : json()},
           {"invertible", result.invertible},
           {"transposed", result.transposed},
           {"zero_short_circuit", result.zero_short_circuit},
           {"det_const", result.det_const ? json(format_rational(*result.det_const)) : json()},
           {"checks", result.checks}};
  return doc;
}

ResultFile result_from_json(const json& doc) {
  ResultFile r;
  r.status = required<std::string>(doc, "status");
  r.sign = required<std::string>(doc, "sign");
  r.method = required<std::string>(doc, "method");
  const int rows = required_nat(doc, "rows");
  const int cols = required_nat(doc, "cols");
  if (!doc.contains("pinv")) {
    throw ParseError("missing field \"pinv\"");
  }
  r.pinv = grid_from_json(doc.at("pinv"), static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  r.indices = required<std::vector<int>>(doc, "indices");
  if (doc.contains("alpha") && !doc.at("alpha").is_null()) {
    r.alpha = required<int>(doc, "alpha");
  }
  if (doc.contains("omega") && !doc.at("omega").is_null()) {
    r.omega = required<int>(doc, "omega");
  }
  r.invertible = required<bool>(doc, "invertible");
  r.transposed = required<bool>(doc, "transposed");
  r.zero_short_circuit = required<bool>(doc, "zero_short_circuit");
  if (doc.contains("det_const") && !doc.at("det_const").is_null()) {
    r.det_const = parse_rational(required<std::string>(doc, "det_const"));
  }
  r.checks = required<std::map<std::string, bool>>(doc, "checks");
  return r;
}

json analysis_to_json(const IndexTable& table) {
  json d = json::array();
  for (int k = -table.m - 1; k <= table.n + 1; ++k) {
    d.push_back(json::array({k, table.d_at(k)}));
  }
  json delta = json::array();
  for (int k = -table.m; k <= table.n + 1; ++k) {
    delta.push_back(json::array({k, table.delta_at(k)}));
  }
  json distinct = json::array();
  for (const auto& [lambda, nu] : table.distinct) {
    distinct.push_back(json::array({lambda, nu}));
  }
  return json{{"status", "ok"},    {"p", table.p},         {"q", table.q},
              {"n", table.n},      {"m", table.m},         {"d", d},
              {"delta", delta},    {"alpha", table.alpha}, {"omega", table.omega},
              {"indices", table.mu}, {"distinct", distinct}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write " + path.string());
  }
  out << doc.dump(2) << '\n';
}

} // namespace tph::io
