#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "detrep/detrep.h"
#include "json.hpp"

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

// Exercises the shared-library boundary only: every call goes through the C
// header, no C++ internals are linked in.

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CfDel {
  void operator()(detrep_curvefile* p) const { detrep_curvefile_free(p); }
};
struct MatDel {
  void operator()(detrep_matrix* p) const { detrep_matrix_free(p); }
};
struct StrDel {
  void operator()(char* p) const { detrep_string_free(p); }
};
using Cf = std::unique_ptr<detrep_curvefile, CfDel>;
using Mat = std::unique_ptr<detrep_matrix, MatDel>;
using Str = std::unique_ptr<char, StrDel>;

Cf load_curve(const std::string& name) {
  detrep_curvefile* cf = nullptr;
  REQUIRE(detrep_curvefile_parse(slurp(name).c_str(), &cf) == DETREP_OK);
  REQUIRE(cf != nullptr);
  return Cf(cf);
}

Mat load_matrix(const std::string& name) {
  detrep_matrix* m = nullptr;
  REQUIRE(detrep_matrix_parse(slurp(name).c_str(), &m) == DETREP_OK);
  REQUIRE(m != nullptr);
  return Mat(m);
}

}  // namespace

TEST_SUITE_BEGIN("capi");

TEST_CASE("curve files expose degree, genus and presentation flag") {
  auto klein = load_curve("klein.curve");
  CHECK(detrep_curvefile_degree(klein.get()) == 4);
  CHECK(detrep_curvefile_genus(klein.get()) == 3);
  CHECK(detrep_curvefile_has_mw(klein.get()) == 1);

  auto cubic = load_curve("cubic.curve");
  CHECK(detrep_curvefile_degree(cubic.get()) == 3);
  CHECK(detrep_curvefile_genus(cubic.get()) == 1);
}

TEST_CASE("parse failures report a message and the offending line") {
  detrep_curvefile* cf = nullptr;
  auto st = detrep_curvefile_parse("[points]\nP = (0, 0, 1)\n", &cf);
  CHECK(st == DETREP_E_FILE_FORMAT);
  CHECK(cf == nullptr);
  CHECK(std::string(detrep_last_error_message()) != "");

  st = detrep_curvefile_parse(
      "[curve]\nf = X^3*Y + Y^3*Z + Z^3*X\n[points]\nP = (1, 1, 1)\n", &cf);
  CHECK(st == DETREP_E_POINT_NOT_ON_CURVE);
  CHECK(detrep_last_error_payload() == 4);
}

TEST_CASE("verify reports the constant and symmetry") {
  auto klein = load_curve("klein.curve");
  auto m = load_matrix("klein_m.matrix");
  CHECK(detrep_matrix_size(m.get()) == 4);

  char* c = nullptr;
  int sym = -1;
  REQUIRE(detrep_verify(klein.get(), m.get(), &c, &sym) == DETREP_OK);
  Str cs(c);
  CHECK(std::string(cs.get()) == "-1");
  CHECK(sym == 1);

  auto n = load_matrix("klein_n.matrix");
  REQUIRE(detrep_verify(klein.get(), n.get(), &c, &sym) == DETREP_OK);
  Str ns(c);
  CHECK(std::string(ns.get()) == "1");
  CHECK(sym == 0);

  auto diag = load_matrix("diag_x.matrix");
  CHECK(detrep_verify(klein.get(), diag.get(), &c, &sym) ==
        DETREP_E_NOT_PROPORTIONAL);
}

TEST_CASE("represent round trips through render and parse") {
  auto klein = load_curve("klein.curve");
  detrep_matrix* raw = nullptr;
  REQUIRE(detrep_represent(klein.get(), "theta", 1, 1, 0, &raw) == DETREP_OK);
  Mat m(raw);

  char* text = nullptr;
  REQUIRE(detrep_matrix_render(m.get(), &text) == DETREP_OK);
  Str ts(text);
  detrep_matrix* again = nullptr;
  REQUIRE(detrep_matrix_parse(ts.get(), &again) == DETREP_OK);
  Mat m2(again);

  char* c = nullptr;
  int sym = -1;
  REQUIRE(detrep_verify(klein.get(), m2.get(), &c, &sym) == DETREP_OK);
  Str cs(c);
  CHECK(std::string(cs.get()) != "0");
  CHECK(sym == 1);

  detrep_matrix* monic_raw = nullptr;
  REQUIRE(detrep_represent(klein.get(), "c1", 1, 0, 1, &monic_raw) == DETREP_OK);
  Mat monic(monic_raw);
  REQUIRE(detrep_verify(klein.get(), monic.get(), &c, &sym) == DETREP_OK);
  Str ms(c);
  CHECK(std::string(ms.get()) == "1");
}

TEST_CASE("represent surfaces effective and lookup failures") {
  auto klein = load_curve("klein.curve");
  detrep_matrix* out = nullptr;
  CHECK(detrep_represent(klein.get(), "2P1", 1, 0, 0, &out) ==
        DETREP_E_EFFECTIVE_DIVISOR);
  CHECK(detrep_last_error_payload() == 1);
  CHECK(out == nullptr);

  CHECK(detrep_represent(klein.get(), "D", 1, 0, 0, &out) ==
        DETREP_E_WRONG_DEGREE);
  CHECK(detrep_represent(klein.get(), "nosuch", 1, 0, 0, &out) ==
        DETREP_E_UNKNOWN_NAME);
  CHECK(detrep_represent(klein.get(), "c1", 3, 0, 0, &out) ==
        DETREP_E_FILE_FORMAT);
}

TEST_CASE("matrix json carries the expected fields") {
  auto klein = load_curve("klein.curve");
  detrep_matrix* raw = nullptr;
  REQUIRE(detrep_represent(klein.get(), "c1", 2, 0, 0, &raw) == DETREP_OK);
  Mat m(raw);

  char* text = nullptr;
  REQUIRE(detrep_matrix_json(klein.get(), m.get(), &text) == DETREP_OK);
  Str ts(text);
  auto j = nlohmann::json::parse(ts.get());
  CHECK(j["d"] == 4);
  CHECK(j["matrix"].size() == 4);
  CHECK(j["matrix"][0].size() == 4);
  CHECK(j["det_constant"].is_string());
  CHECK(j["symmetric"].is_boolean());
}

TEST_CASE("classify emits schema-complete json") {
  auto cubic = load_curve("cubic.curve");
  char* text = nullptr;
  REQUIRE(detrep_classify(cubic.get(), 1, 2, &text) == DETREP_OK);
  Str ts(text);
  auto j = nlohmann::json::parse(ts.get());
  CHECK(j["d"] == 3);
  REQUIRE(j["classes"].size() == 3);
  for (const auto& cls : j["classes"]) {
    CHECK(cls.contains("label"));
    CHECK(cls.contains("effective"));
    CHECK(cls.contains("theta"));
    CHECK(cls.contains("matrix"));
    CHECK(cls.contains("det_constant"));
    CHECK(cls["effective"].is_boolean());
    CHECK((cls["matrix"].is_null() || cls["matrix"].is_array()));
  }
  CHECK(j["classes"][0]["matrix"].is_null());
  CHECK(j["classes"][1]["matrix"].is_array());

  char* report = nullptr;
  REQUIRE(detrep_classify(cubic.get(), 0, 1, &report) == DETREP_OK);
  Str rs(report);
  CHECK(std::string(rs.get()).find("all distinct") != std::string::npos);
}

TEST_CASE("classify requires a presentation") {
  auto text = slurp("cubic.curve");
  auto cut = text.substr(0, text.find("[mw]"));
  detrep_curvefile* cf = nullptr;
  REQUIRE(detrep_curvefile_parse(cut.c_str(), &cf) == DETREP_OK);
  Cf cubic(cf);
  CHECK(detrep_curvefile_has_mw(cubic.get()) == 0);

  char* report = nullptr;
  CHECK(detrep_classify(cubic.get(), 0, 1, &report) == DETREP_E_FILE_FORMAT);
}

TEST_CASE("equiv distinguishes recombinations from genuinely new classes") {
  auto klein = load_curve("klein.curve");
  auto m = load_matrix("klein_m.matrix");
  auto recomb = load_matrix("klein_m_recombined.matrix");
  auto n = load_matrix("klein_n.matrix");

  int eq = -1;
  REQUIRE(detrep_equiv(klein.get(), m.get(), recomb.get(), &eq) == DETREP_OK);
  CHECK(eq == 1);
  REQUIRE(detrep_equiv(klein.get(), m.get(), n.get(), &eq) == DETREP_OK);
  CHECK(eq == 0);
}

TEST_SUITE_END();
