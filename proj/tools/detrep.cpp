#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>

#include <detrep/detrep.h>

namespace {

constexpr int kExitInequivalent = 1;
constexpr int kExitVerification = 2;
constexpr int kExitEffective = 3;
constexpr int kExitUsage = 4;

struct CfFree {
  void operator()(detrep_curvefile* p) const { detrep_curvefile_free(p); }
};
struct MatFree {
  void operator()(detrep_matrix* p) const { detrep_matrix_free(p); }
};
struct StrFree {
  void operator()(char* p) const { detrep_string_free(p); }
};
using CfPtr = std::unique_ptr<detrep_curvefile, CfFree>;
using MatPtr = std::unique_ptr<detrep_matrix, MatFree>;
using StrPtr = std::unique_ptr<char, StrFree>;

int exit_code_for(detrep_status s) {
  switch (s) {
    case DETREP_OK:
      return 0;
    case DETREP_E_EFFECTIVE_DIVISOR:
      return kExitEffective;
    case DETREP_E_SYNTAX:
    case DETREP_E_INHOMOGENEOUS:
    case DETREP_E_NOT_ZERO_DIMENSIONAL:
    case DETREP_E_NOT_SMOOTH:
    case DETREP_E_DEGREE_TOO_SMALL:
    case DETREP_E_POINT_NOT_ON_CURVE:
    case DETREP_E_FORM_VANISHES_ON_CURVE:
    case DETREP_E_WRONG_DEGREE:
    case DETREP_E_UNKNOWN_NAME:
    case DETREP_E_FILE_FORMAT:
      return kExitUsage;
    default:
      return kExitVerification;
  }
}

[[noreturn]] void die(detrep_status s) {
  std::cerr << "error: " << detrep_last_error_message();
  if (s == DETREP_E_EFFECTIVE_DIVISOR)
    std::cerr << " (h0 = " << detrep_last_error_payload() << ")";
  std::cerr << "\n";
  std::exit(exit_code_for(s));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) {
    std::cerr << "error: cannot read '" << path << "'\n";
    std::exit(kExitUsage);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

CfPtr load_curve(const std::string& path) {
  detrep_curvefile* cf = nullptr;
  detrep_status s = detrep_curvefile_parse(slurp(path).c_str(), &cf);
  if (s != DETREP_OK) die(s);
  return CfPtr(cf);
}

MatPtr load_matrix(const std::string& path) {
  detrep_matrix* m = nullptr;
  detrep_status s = detrep_matrix_parse(slurp(path).c_str(), &m);
  if (s != DETREP_OK) die(s);
  return MatPtr(m);
}

int thread_budget() {
  const char* env = std::getenv("DETREP_THREADS");
  if (!env) {
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? int(hw) : 1;
  }
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (!end || *end != '\0' || v <= 0) {
    std::cerr << "error: DETREP_THREADS must be a positive integer\n";
    std::exit(kExitUsage);
  }
  return int(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear determinantal representations of smooth plane curves"};
  app.require_subcommand(1);

  std::string curve_path, matrix_path, matrix_path2, divisor_name;
  int algorithm = 1;
  bool symmetric = false, monic = false, json = false;

  CLI::App* verify = app.add_subcommand("verify", "check that det(M) is a constant multiple of F");
  verify->add_option("curve", curve_path, "curve file")->required();
  verify->add_option("matrix", matrix_path, "matrix file")->required();

  CLI::App* represent =
      app.add_subcommand("represent", "construct a matrix for a named divisor class");
  represent->add_option("curve", curve_path, "curve file")->required();
  represent->add_option("divisor", divisor_name, "divisor name from the curve file")->required();
  represent->add_option("--alg", algorithm, "construction route: 1 kernel, 2 adjugate")
      ->check(CLI::IsMember({1, 2}));
  represent->add_flag("--symmetric", symmetric, "symmetric construction (theta classes)");
  represent->add_flag("--monic-det", monic, "rescale so det equals F exactly");
  represent->add_flag("--json", json, "JSON output");

  CLI::App* classify = app.add_subcommand("classify", "enumerate every degree g-1 class");
  classify->add_option("curve", curve_path, "curve file with an [mw] section")->required();
  classify->add_flag("--json", json, "JSON output");

  CLI::App* equiv = app.add_subcommand("equiv", "decide equivalence of two representations");
  equiv->add_option("curve", curve_path, "curve file")->required();
  equiv->add_option("matrix1", matrix_path, "first matrix file")->required();
  equiv->add_option("matrix2", matrix_path2, "second matrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  CfPtr cf = load_curve(curve_path);

  if (verify->parsed()) {
    MatPtr m = load_matrix(matrix_path);
    char* constant = nullptr;
    int sym = 0;
    detrep_status s = detrep_verify(cf.get(), m.get(), &constant, &sym);
    if (s != DETREP_OK) die(s);
    StrPtr owned(constant);
    std::cout << "det = c * F with c = " << constant << "\n";
    std::cout << "symmetric: " << (sym ? "yes" : "no") << "\n";
    return 0;
  }

  if (represent->parsed()) {
    detrep_matrix* raw = nullptr;
    detrep_status s = detrep_represent(cf.get(), divisor_name.c_str(), algorithm,
                                       symmetric ? 1 : 0, monic ? 1 : 0, &raw);
    if (s != DETREP_OK) die(s);
    MatPtr m(raw);
    char* text = nullptr;
    s = json ? detrep_matrix_json(cf.get(), m.get(), &text) : detrep_matrix_render(m.get(), &text);
    if (s != DETREP_OK) die(s);
    StrPtr owned(text);
    std::cout << text;
    return 0;
  }

  if (classify->parsed()) {
    char* report = nullptr;
    detrep_status s = detrep_classify(cf.get(), json ? 1 : 0, thread_budget(), &report);
    if (s != DETREP_OK) die(s);
    StrPtr owned(report);
    std::cout << report;
    return 0;
  }

  MatPtr a = load_matrix(matrix_path);
  MatPtr b = load_matrix(matrix_path2);
  int eq = 0;
  detrep_status s = detrep_equiv(cf.get(), a.get(), b.get(), &eq);
  if (s != DETREP_OK) die(s);
  std::cout << (eq ? "equivalent" : "inequivalent") << "\n";
  return eq ? 0 : kExitInequivalent;
}
