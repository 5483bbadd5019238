#include "cli.hpp"

#include "tph/assembly.hpp"
#include "tph/errors.hpp"
#include "tph/io.hpp"
#include "tph/oracle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string_view>

namespace tph::cli {

namespace {

using io::json;

bool env_forces_check() {
  const char* v = std::getenv("TPH_CHECK");
  return v != nullptr && std::string_view(v) == "1";
}

void emit(const json& doc, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << doc.dump(2) << '\n';
  } else {
    io::write_json_file(out_path, doc);
  }
}

json report_to_json(const OracleReport& r) {
  return json{{"is_g_inverse", r.is_g_inverse},
              {"moore_penrose",
               {{"axa", r.satisfies_mp.axa},
                {"xax", r.satisfies_mp.xax},
                {"ax_symmetric", r.satisfies_mp.ax_sym},
                {"xa_symmetric", r.satisfies_mp.xa_sym}}},
              {"rank", r.rank},
              {"invertible", r.invertible}};
}

struct Options {
  std::string problem;
  std::string out;
  std::string sign = "plus";
  std::string method = "direct";
  bool check = false;
  bool transpose_fallback = false;
  std::string matrix_a;
  std::string matrix_x;
};

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  const TphProblem prob = io::problem_from_json(io::read_json_file(o.problem));
  const IndexTable table = compute_index_table(build_generating_sequence(prob));
  err << "alpha = " << table.alpha << ", omega = " << table.omega << '\n';
  emit(io::analysis_to_json(table), o.out, out);
  return kOk;
}

int cmd_pinv(const Options& o, std::ostream& out, std::ostream& err) {
  const TphProblem prob = io::problem_from_json(io::read_json_file(o.problem));
  PinvOptions opts;
  opts.method = io::parse_method(o.method);
  opts.check = o.check || env_forces_check();
  opts.allow_transpose_fallback = o.transpose_fallback;
  const TphResult result = pinv_tph(prob, io::parse_sign(o.sign), opts);
  if (result.det_const) {
    err << "det U_- = " << format_rational(*result.det_const) << '\n';
  }
  if (result.transposed) {
    err << "solved through the transposed problem\n";
  }
  const io::ResultFile file = io::make_result_file(result);
  emit(io::result_to_json(file), o.out, out);
  for (const auto& [name, ok] : file.checks) {
    if (!ok) {
      err << "check failed: " << name << '\n';
    }
  }
  return file.status == "ok" ? kOk : kCheckFailed;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const ExactMatrix a = io::matrix_from_json(io::read_json_file(o.matrix_a));
  const ExactMatrix x = io::matrix_from_json(io::read_json_file(o.matrix_x));
  const OracleReport report = is_g_inverse(a, x);
  out << report_to_json(report).dump(2) << '\n';
  if (!report.is_g_inverse) {
    err << "A X A != A\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream&) {
  const ExactMatrix a = io::matrix_from_json(io::read_json_file(o.problem));
  emit(io::matrix_to_json(one_inverse_oracle(a)), o.out, out);
  return kOk;
}

int cmd_dense(const Options& o, std::ostream& out, std::ostream&) {
  const TphProblem prob = io::problem_from_json(io::read_json_file(o.problem));
  emit(io::matrix_to_json(tph_matrix(prob, io::parse_sign(o.sign))), o.out, out);
  return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized inverses of block Toeplitz-plus/minus-Hankel matrices"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> signs{"plus", "minus"};

  auto* analyze = app.add_subcommand("analyze", "Report kernel dimensions, defects and indices");
  analyze->add_option("problem", o.problem, "Problem file (JSON)")->required();
  analyze->add_option("--out", o.out, "Write the report here instead of stdout");

  auto* pinv = app.add_subcommand("pinv", "Generalized inverse of T+H or T-H");
  pinv->add_option("problem", o.problem, "Problem file (JSON)")->required();
  pinv->add_option("--sign", o.sign, "plus or minus")->check(CLI::IsMember(signs));
  pinv->add_option("--method", o.method, "direct or blockwise")
      ->check(CLI::IsMember(std::vector<std::string>{"direct", "blockwise"}));
  pinv->add_flag("--check", o.check, "Verify the result exactly (also TPH_CHECK=1)");
  pinv->add_flag("--allow-transpose-fallback", o.transpose_fallback,
                 "Solve the transposed problem when the right defect is positive");
  pinv->add_option("--out", o.out, "Write the result here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check A X A = A for two dense matrix files");
  verify->add_option("A", o.matrix_a, "Matrix file")->required();
  verify->add_option("X", o.matrix_x, "Candidate generalized inverse")->required();

  auto* oracle = app.add_subcommand("oracle", "Dense reference generalized inverse of a matrix file");
  oracle->add_option("matrix", o.problem, "Matrix file (JSON)")->required();
  oracle->add_option("--out", o.out, "Write the result here instead of stdout");

  auto* dense = app.add_subcommand("dense", "Emit T+H or T-H of a problem as a matrix file");
  dense->add_option("problem", o.problem, "Problem file (JSON)")->required();
  dense->add_option("--sign", o.sign, "plus or minus")->check(CLI::IsMember(signs));
  dense->add_option("--out", o.out, "Write the matrix here instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*analyze) {
      return cmd_analyze(o, out, err);
    }
    if (*pinv) {
      return cmd_pinv(o, out, err);
    }
    if (*verify) {
      return cmd_verify(o, out, err);
    }
    if (*oracle) {
      return cmd_oracle(o, out, err);
    }
    return cmd_dense(o, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ShapeError& e) {
    err << "shape error: " << e.what() << '\n';
    return kUsage;
  } catch (const ZeroSequence& e) {
    err << "unsupported input: " << e.what() << '\n';
    return kUnsupported;
  } catch (const DefectUnsupported& e) {
    err << "unsupported input: " << e.what() << '\n';
    return kUnsupported;
  } catch (const Error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kCheckFailed;
  }
}

} // namespace tph::cli
