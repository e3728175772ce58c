#include "detrep/detrep.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "inputfile.hpp"

struct detrep_curvefile {
  detrep::CurveFileData data;
};

struct detrep_matrix {
  detrep::LinMatrix m;
};

namespace {

using namespace detrep;

thread_local std::string g_message;
thread_local long g_payload = 0;

detrep_status to_status(Err code) {
  switch (code) {
    case Err::Syntax: return DETREP_E_SYNTAX;
    case Err::Inhomogeneous: return DETREP_E_INHOMOGENEOUS;
    case Err::NotZeroDimensional: return DETREP_E_NOT_ZERO_DIMENSIONAL;
    case Err::NotSmooth: return DETREP_E_NOT_SMOOTH;
    case Err::DegreeTooSmall: return DETREP_E_DEGREE_TOO_SMALL;
    case Err::PointNotOnCurve: return DETREP_E_POINT_NOT_ON_CURVE;
    case Err::FormVanishesOnCurve: return DETREP_E_FORM_VANISHES_ON_CURVE;
    case Err::WrongDegree: return DETREP_E_WRONG_DEGREE;
    case Err::EffectiveDivisor: return DETREP_E_EFFECTIVE_DIVISOR;
    case Err::InternalRankError: return DETREP_E_INTERNAL_RANK;
    case Err::DivisionFailure: return DETREP_E_DIVISION_FAILURE;
    case Err::NotThetaCharacteristic: return DETREP_E_NOT_THETA_CHARACTERISTIC;
    case Err::NotProportional: return DETREP_E_NOT_PROPORTIONAL;
    case Err::ZeroDeterminant: return DETREP_E_ZERO_DETERMINANT;
    case Err::NotDivisible: return DETREP_E_NOT_DIVISIBLE;
    case Err::BadPresentation: return DETREP_E_BAD_PRESENTATION;
    case Err::DegenerateAdjugate: return DETREP_E_DEGENERATE_ADJUGATE;
    case Err::NotAnAutomorphism: return DETREP_E_NOT_AN_AUTOMORPHISM;
    case Err::UnknownName: return DETREP_E_UNKNOWN_NAME;
    case Err::FileFormat: return DETREP_E_FILE_FORMAT;
    case Err::Internal: return DETREP_E_INTERNAL;
  }
  return DETREP_E_INTERNAL;
}

char* dup_cstr(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class Fn>
detrep_status guarded(Fn&& fn) {
  try {
    fn();
    return DETREP_OK;
  } catch (const Error& e) {
    g_message = e.what();
    g_payload = e.payload();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_message = e.what();
    g_payload = 0;
    return DETREP_E_INTERNAL;
  }
}

std::string label_text(const std::vector<long>& label) {
  std::string s = "[";
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(label[i]);
  }
  return s + "]";
}

std::string entry_text(const HomogPoly& e) { return e.is_zero() ? "0" : poly_to_string(e); }

nlohmann::ordered_json matrix_rows_json(const LinMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (const std::vector<HomogPoly>& row : m.entries) {
    auto r = nlohmann::ordered_json::array();
    for (const HomogPoly& e : row) r.push_back(entry_text(e));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string indent_grid(const LinMatrix& m) {
  std::istringstream in(render_matrix(m));
  std::string line, out;
  while (std::getline(in, line)) out += "  " + line + "\n";
  return out;
}

const MWPresentation& need_mw(const CurveFileData& data) {
  if (!data.mw) fail(Err::FileFormat, "curve file has no [mw] section");
  return *data.mw;
}

std::string classify_json(const CurveFileData& data, const ClassCatalog& cat) {
  nlohmann::ordered_json j;
  j["curve"] = poly_to_string(data.curve.f());
  j["d"] = data.curve.d();
  auto classes = nlohmann::ordered_json::array();
  for (const ClassEntry& e : cat.entries) {
    nlohmann::ordered_json c;
    c["label"] = e.label;
    c["effective"] = e.effective;
    c["theta"] = e.theta;
    if (e.matrix) {
      c["matrix"] = matrix_rows_json(*e.matrix);
      c["det_constant"] = e.matrix->det_constant->get_str();
    } else {
      c["matrix"] = nullptr;
      c["det_constant"] = nullptr;
    }
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  return j.dump(2) + "\n";
}

std::string classify_text(const CurveFileData& data, const ClassCatalog& cat) {
  std::ostringstream out;
  out << "curve: " << poly_to_string(data.curve.f()) << "\n";
  out << "degree " << data.curve.d() << ", genus " << data.curve.genus() << "\n";
  std::size_t eff = 0;
  for (const ClassEntry& e : cat.entries)
    if (e.effective) ++eff;
  out << "classes: " << cat.entries.size() << " total, " << eff << " effective, "
      << cat.entries.size() - eff << " non-effective\n";
  for (const ClassEntry& e : cat.entries) {
    out << "class " << label_text(e.label) << ":";
    if (e.effective) out << " effective";
    if (e.theta) out << (e.effective ? "," : "") << " theta";
    out << "\n";
    if (e.matrix) {
      out << indent_grid(*e.matrix);
      out << "  det constant: " << e.matrix->det_constant->get_str() << "\n";
    }
  }

  // certification: every produced matrix cuts its own divisor class
  std::vector<const ClassEntry*> reps;
  for (const ClassEntry& e : cat.entries)
    if (e.matrix) reps.push_back(&e);
  std::vector<Divisor> cuts;
  cuts.reserve(reps.size());
  for (const ClassEntry* e : reps) cuts.push_back(extract_class(data.curve, *e->matrix));
  std::size_t pairs = 0, coincident = 0;
  std::string collisions;
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (std::size_t j = i + 1; j < cuts.size(); ++j) {
      ++pairs;
      if (linearly_equivalent(data.curve, cuts[i], cuts[j])) {
        ++coincident;
        collisions +=
            "  equivalent: " + label_text(reps[i]->label) + " ~ " + label_text(reps[j]->label) + "\n";
      }
    }
  out << "pairwise inequivalence: " << reps.size() << " matrices, " << pairs
      << (pairs == 1 ? " pair, " : " pairs, ");
  if (coincident == 0)
    out << "all distinct\n";
  else
    out << coincident << " coincident\n" << collisions;
  return out.str();
}

}  // namespace

extern "C" {

const char* detrep_last_error_message(void) { return g_message.c_str(); }

long detrep_last_error_payload(void) { return g_payload; }

void detrep_string_free(char* s) { std::free(s); }

detrep_status detrep_curvefile_parse(const char* text, detrep_curvefile** out) {
  *out = nullptr;
  return guarded([&] {
    auto* cf = new detrep_curvefile{parse_curve_file(text ? text : "")};
    *out = cf;
  });
}

void detrep_curvefile_free(detrep_curvefile* cf) { delete cf; }

int detrep_curvefile_degree(const detrep_curvefile* cf) { return cf->data.curve.d(); }

int detrep_curvefile_genus(const detrep_curvefile* cf) { return cf->data.curve.genus(); }

int detrep_curvefile_has_mw(const detrep_curvefile* cf) { return cf->data.mw ? 1 : 0; }

detrep_status detrep_matrix_parse(const char* text, detrep_matrix** out) {
  *out = nullptr;
  return guarded([&] { *out = new detrep_matrix{parse_matrix_file(text ? text : "")}; });
}

void detrep_matrix_free(detrep_matrix* m) { delete m; }

int detrep_matrix_size(const detrep_matrix* m) { return m->m.size; }

detrep_status detrep_matrix_render(const detrep_matrix* m, char** text_out) {
  *text_out = nullptr;
  return guarded([&] { *text_out = dup_cstr(render_matrix(m->m)); });
}

detrep_status detrep_verify(const detrep_curvefile* cf, const detrep_matrix* m,
                            char** constant_out, int* symmetric_out) {
  if (constant_out) *constant_out = nullptr;
  return guarded([&] {
    Rat c = verify_detrep(cf->data.curve, m->m);
    if (constant_out) *constant_out = dup_cstr(c.get_str());
    if (symmetric_out) *symmetric_out = same_entries(m->m, transpose(m->m)) ? 1 : 0;
  });
}

detrep_status detrep_represent(const detrep_curvefile* cf, const char* divisor_name,
                               int algorithm, int symmetric, int monic, detrep_matrix** out) {
  *out = nullptr;
  return guarded([&] {
    if (algorithm != 1 && algorithm != 2)
      fail(Err::FileFormat, "algorithm must be 1 or 2");
    const Divisor& d = find_divisor(cf->data, divisor_name ? divisor_name : "");
    LinMatrix m;
    if (symmetric)
      m = symmetric_rep(cf->data.curve, d);
    else if (algorithm == 2)
      m = algorithm2(cf->data.curve, d);
    else
      m = algorithm1(cf->data.curve, d);
    if (monic) m = with_monic_det(cf->data.curve, m);
    m.det_constant = verify_detrep(cf->data.curve, m);
    *out = new detrep_matrix{std::move(m)};
  });
}

detrep_status detrep_matrix_json(const detrep_curvefile* cf, const detrep_matrix* m,
                                 char** json_out) {
  *json_out = nullptr;
  return guarded([&] {
    Rat c = verify_detrep(cf->data.curve, m->m);
    nlohmann::ordered_json j;
    j["curve"] = poly_to_string(cf->data.curve.f());
    j["d"] = cf->data.curve.d();
    j["matrix"] = matrix_rows_json(m->m);
    j["det_constant"] = c.get_str();
    j["symmetric"] = same_entries(m->m, transpose(m->m));
    *json_out = dup_cstr(j.dump(2) + "\n");
  });
}

detrep_status detrep_classify(const detrep_curvefile* cf, int as_json, int threads,
                              char** report_out) {
  *report_out = nullptr;
  return guarded([&] {
    const MWPresentation& mw = need_mw(cf->data);
    EnumerateOptions opt;
    opt.threads = threads >= 1 ? threads : 1;
    ClassCatalog cat = enumerate_classes(cf->data.curve, mw, opt);
    std::string report = as_json ? classify_json(cf->data, cat) : classify_text(cf->data, cat);
    *report_out = dup_cstr(report);
  });
}

detrep_status detrep_equiv(const detrep_curvefile* cf, const detrep_matrix* a,
                           const detrep_matrix* b, int* equivalent_out) {
  return guarded([&] {
    bool eq = equivalent_reps(cf->data.curve, a->m, b->m);
    if (equivalent_out) *equivalent_out = eq ? 1 : 0;
  });
}

}  // extern "C"
