#include "cli.hpp"

#include "tph/errors.hpp"
#include "tph/io.hpp"

#include "random_problems.hpp"
#include "small_problems.hpp"
#include "worked_example.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace tph;
using namespace tph::testing;
using io::json;

namespace {

namespace fs = std::filesystem;

class TempDir {
public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("tph_cli_test_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path file(const std::string& name) const { return path_ / name; }

private:
  fs::path path_;
};

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "tph");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream(path) << text;
}

} // namespace

TEST_CASE("matrix documents") {
  const ExactMatrix m = make_rational(1, 6) * ExactMatrix::from_rows({{3, -2}, {0, 12}});
  const json doc = io::matrix_to_json(m);
  CHECK(doc.at("rows") == 2);
  CHECK(doc.at("cols") == 2);
  CHECK(doc.at("entries") == json::parse(R"([["1/2","-1/3"],["0","2"]])"));
  CHECK(io::matrix_from_json(doc) == m);

  CHECK(io::matrix_from_json(json::parse(R"({"rows":1,"cols":2,"entries":[[1,"4/6"]]})")) ==
        make_rational(1, 3) * ExactMatrix::from_rows({{3, 2}}));
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[[0.5]]})")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[["1/0"]]})")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"rows":1,"cols":2,"entries":[["1"]]})")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"rows":1,"cols":1})")), ParseError);
}

TEST_CASE("problem documents round-trip") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const TphProblem prob = random_problem(rng);
    const json doc = io::problem_to_json(prob);
    const TphProblem back = io::problem_from_json(doc);
    CHECK(back.p == prob.p);
    CHECK(back.q == prob.q);
    CHECK(back.n == prob.n);
    CHECK(back.m == prob.m);
    CHECK(back.a == prob.a);
    CHECK(back.b == prob.b);
    CHECK(io::problem_to_json(back).dump() == doc.dump());
  }
}

TEST_CASE("problem documents are validated") {
  json doc = io::problem_to_json(worked_problem());
  doc["a"].erase(0);
  CHECK_THROWS_AS(io::problem_from_json(doc), ParseError);
  doc = io::problem_to_json(worked_problem());
  doc["p"] = 0;
  CHECK_THROWS_AS(io::problem_from_json(doc), ParseError);
  doc = io::problem_to_json(worked_problem());
  doc.erase("b");
  CHECK_THROWS_AS(io::problem_from_json(doc), ParseError);
  CHECK_THROWS_AS(io::problem_from_json(json::array()), ParseError);
}

TEST_CASE("result documents round-trip") {
  for (Sign sign : {Sign::plus, Sign::minus}) {
    for (Method method : {Method::direct, Method::blockwise}) {
      const TphResult res = pinv_tph(worked_problem(), sign, {method, true, false});
      const io::ResultFile file = io::make_result_file(res);
      CHECK(file.status == "ok");
      CHECK(file.indices == worked_indices());
      const json doc = io::result_to_json(file);
      CHECK(io::result_from_json(doc) == file);
      CHECK(io::result_to_json(io::result_from_json(doc)).dump() == doc.dump());
    }
  }
  const io::ResultFile zero = io::make_result_file(pinv_tph(zero_problem(1, 1, 1, 1), Sign::plus));
  CHECK(zero.zero_short_circuit);
  CHECK(io::result_from_json(io::result_to_json(zero)) == zero);
}

TEST_CASE("sign and method names") {
  CHECK(io::parse_sign(io::to_string(Sign::minus)) == Sign::minus);
  CHECK(io::parse_method(io::to_string(Method::blockwise)) == Method::blockwise);
  CHECK_THROWS_AS(io::parse_sign("times"), ParseError);
  CHECK_THROWS_AS(io::parse_method("fast"), ParseError);
}

TEST_CASE("cli: analyze and pinv on the worked example") {
  TempDir dir;
  const auto problem = dir.file("problem.json");
  io::write_json_file(problem, io::problem_to_json(worked_problem()));

  const Run analyze = run_cli({"analyze", problem.string()});
  REQUIRE(analyze.code == 0);
  const json report = json::parse(analyze.out);
  CHECK(report.at("indices") == json::array({-1, 0, 0, 1}));
  CHECK(report.at("alpha") == 0);
  CHECK(report.at("omega") == 0);

  const Run direct = run_cli({"pinv", problem.string(), "--check"});
  REQUIRE(direct.code == 0);
  const json doc = json::parse(direct.out);
  CHECK(doc.at("status") == "ok");
  CHECK(io::matrix_from_json(json{{"rows", doc.at("rows")}, {"cols", doc.at("cols")}, {"entries", doc.at("pinv")}}) ==
        make_rational(1, 20) * plus_inverse_times_20());

  const auto out_file = dir.file("minus.json");
  const Run minus = run_cli({"pinv", problem.string(), "--sign", "minus", "--out", out_file.string()});
  REQUIRE(minus.code == 0);
  CHECK(minus.out.empty());
  const Run blockwise = run_cli({"pinv", problem.string(), "--sign", "minus", "--method", "blockwise"});
  REQUIRE(blockwise.code == 0);
  const json bdoc = json::parse(blockwise.out);
  const json ddoc = io::read_json_file(out_file);
  CHECK(bdoc.at("pinv").dump() == ddoc.at("pinv").dump());
}

TEST_CASE("cli: dense, oracle and verify") {
  TempDir dir;
  const auto problem = dir.file("problem.json");
  io::write_json_file(problem, io::problem_to_json(worked_problem()));
  const auto a_file = dir.file("a.json");
  const auto x_file = dir.file("x.json");
  const auto bad_file = dir.file("bad.json");
  REQUIRE(run_cli({"dense", problem.string(), "--sign", "minus", "--out", a_file.string()}).code == 0);
  CHECK(io::matrix_from_json(io::read_json_file(a_file)) == tph_matrix(worked_problem(), Sign::minus));
  REQUIRE(run_cli({"oracle", a_file.string(), "--out", x_file.string()}).code == 0);

  const Run ok = run_cli({"verify", a_file.string(), x_file.string()});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out).at("is_g_inverse") == true);

  io::write_json_file(bad_file, io::matrix_to_json(make_rational(1, 180) * printed_minus_times_180()));
  const Run bad = run_cli({"verify", a_file.string(), bad_file.string()});
  CHECK(bad.code == 4);
  CHECK(json::parse(bad.out).at("is_g_inverse") == false);

  io::write_json_file(bad_file, io::matrix_to_json(ExactMatrix(3, 3)));
  CHECK(run_cli({"verify", a_file.string(), bad_file.string()}).code == 1);
}

TEST_CASE("cli: exit codes") {
  TempDir dir;
  const auto file = dir.file("p.json");

  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"pinv"}).code == 1);
  CHECK(run_cli({"pinv", file.string()}).code == 2);

  write_text(file, "{ not json");
  CHECK(run_cli({"analyze", file.string()}).code == 2);

  json doc = io::problem_to_json(worked_problem());
  doc["a"][0][0][0] = "1/0";
  io::write_json_file(file, doc);
  CHECK(run_cli({"pinv", file.string()}).code == 2);

  io::write_json_file(file, io::problem_to_json(all_ones_problem()));
  CHECK(run_cli({"pinv", file.string()}).code == 3);
  CHECK(run_cli({"pinv", file.string(), "--allow-transpose-fallback"}).code == 3);
  CHECK(run_cli({"analyze", file.string()}).code == 0);

  io::write_json_file(file, io::problem_to_json(tall_problem()));
  CHECK(run_cli({"pinv", file.string()}).code == 3);
  const Run fallback = run_cli({"pinv", file.string(), "--allow-transpose-fallback", "--check"});
  CHECK(fallback.code == 0);
  CHECK(json::parse(fallback.out).at("transposed") == true);

  io::write_json_file(file, io::problem_to_json(zero_problem(1, 1, 1, 1)));
  CHECK(run_cli({"analyze", file.string()}).code == 3);
  CHECK(run_cli({"pinv", file.string()}).code == 0);

  io::write_json_file(file, io::problem_to_json(worked_problem()));
  CHECK(run_cli({"pinv", file.string(), "--sign", "sideways"}).code == 1);
}

TEST_CASE("cli: TPH_CHECK forces verification") {
  TempDir dir;
  const auto file = dir.file("p.json");
  io::write_json_file(file, io::problem_to_json(worked_problem()));
  const Run plain = run_cli({"pinv", file.string()});
  CHECK(json::parse(plain.out).at("checks").empty());
  ::setenv("TPH_CHECK", "1", 1);
  const Run forced = run_cli({"pinv", file.string()});
  ::unsetenv("TPH_CHECK");
  REQUIRE(forced.code == 0);
  CHECK(json::parse(forced.out).at("checks").at("g_inverse") == true);
}
