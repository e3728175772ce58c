#include "inputfile.hpp"

#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

namespace detrep {
namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

[[noreturn]] void fail_line(long line, const std::string& msg, Err code = Err::FileFormat) {
  fail(code, "line " + std::to_string(line) + ": " + msg, line);
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

long to_long(const std::string& s, long line) {
  try {
    return std::stol(s);
  } catch (const std::exception&) {
    fail_line(line, "bad integer '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

HomogPoly parse_poly_at(const std::string& text, long line) {
  try {
    return parse_poly(text);
  } catch (const Error& e) {
    fail_line(line, e.what(), e.code());
  }
}

// NAME or k*NAME with +/- between terms; names may contain digits but a pure
// integer is never a term on its own
Divisor parse_combo(const CurveFileData& data, const std::string& text, long line) {
  Divisor acc = zero_divisor(data.curve);
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
    } else if (any) {
      fail_line(line, "expected '+' or '-' between divisor terms");
    }
    std::size_t start = i;
    while (i < text.size() && text[i] != '+' && text[i] != '-') ++i;
    std::string term = trim(text.substr(start, i - start));
    if (term.empty()) fail_line(line, "empty divisor term");
    long coef = 1;
    std::string name = term;
    if (std::size_t star = term.find('*'); star != std::string::npos) {
      std::string k = trim(term.substr(0, star));
      if (!is_integer(k)) fail_line(line, "coefficient '" + k + "' is not an integer");
      coef = to_long(k, line);
      name = trim(term.substr(star + 1));
    }
    if (name.empty()) fail_line(line, "missing divisor name");
    if (is_integer(name)) fail_line(line, "'" + name + "' is not a divisor name");
    Divisor part = zero_divisor(data.curve);
    if (name == "H") {
      part = hyperplane_divisor(data.curve);
    } else {
      auto it = data.divisors.find(name);
      if (it == data.divisors.end())
        fail_line(line, "unknown divisor '" + name + "'", Err::UnknownName);
      part = it->second;
    }
    acc = div_add(acc, div_scale(part, sign * coef));
    any = true;
  }
  if (!any) fail_line(line, "empty divisor expression");
  return acc;
}

void add_named(CurveFileData& data, const std::string& name, Divisor d, long line) {
  if (name.empty()) fail_line(line, "empty name");
  if (name == "H") fail_line(line, "'H' is reserved for the hyperplane divisor");
  if (is_integer(name)) fail_line(line, "'" + name + "' cannot be a name");
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      fail_line(line, "name '" + name + "' has characters outside [A-Za-z0-9_]");
  if (!data.divisors.emplace(name, std::move(d)).second)
    fail_line(line, "duplicate name '" + name + "'");
}

}  // namespace

CurveFileData parse_curve_file(const std::string& text) {
  enum class Sec { None, Curve, Points, Pairs, Divisors, Mw };
  Sec sec = Sec::None;
  std::optional<PlaneCurve> curve;
  std::optional<CurveFileData> data;
  std::vector<std::pair<std::string, long>> mw_gens;  // name:order, file order
  std::optional<std::string> mw_base;
  std::optional<long> mw_line;

  std::istringstream in(text);
  std::string raw;
  long line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (std::size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::string s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail_line(line, "unterminated section header");
      std::string name = trim(s.substr(1, s.size() - 2));
      if (name == "curve")
        sec = Sec::Curve;
      else if (name == "points")
        sec = Sec::Points;
      else if (name == "pairs")
        sec = Sec::Pairs;
      else if (name == "divisors")
        sec = Sec::Divisors;
      else if (name == "mw")
        sec = Sec::Mw;
      else
        fail_line(line, "unknown section '" + name + "'");
      if (sec == Sec::Mw && !mw_line) mw_line = line;
      continue;
    }
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) fail_line(line, "expected 'name = value'");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key.empty() || value.empty()) fail_line(line, "expected 'name = value'");

    switch (sec) {
      case Sec::None:
        fail_line(line, "content before the first section header");
      case Sec::Curve: {
        if (key != "f") fail_line(line, "the [curve] section only takes 'f'");
        if (curve) fail_line(line, "duplicate curve form");
        try {
          curve = new_curve(parse_poly_at(value, line));
        } catch (const Error& e) {
          fail_line(line, e.what(), e.code());
        }
        data = CurveFileData{*curve, {}, std::nullopt};
        break;
      }
      case Sec::Points: {
        if (!data) fail_line(line, "[points] before [curve]");
        std::string v = value;
        if (v.size() < 2 || v.front() != '(' || v.back() != ')')
          fail_line(line, "point must look like (a, b, c)");
        std::vector<std::string> parts = split(v.substr(1, v.size() - 2), ',');
        if (parts.size() != 3) fail_line(line, "point must have three coordinates");
        std::array<Int, 3> p;
        for (int i = 0; i < 3; ++i) {
          if (!is_integer(parts[std::size_t(i)]))
            fail_line(line, "coordinate '" + parts[std::size_t(i)] + "' is not an integer");
          p[std::size_t(i)] = Int(parts[std::size_t(i)]);
        }
        try {
          add_named(*data, key, as_divisor(point_divisor(data->curve, p)), line);
        } catch (const Error& e) {
          if (e.code() == Err::FileFormat) throw;
          fail_line(line, e.what(), e.code());
        }
        break;
      }
      case Sec::Pairs: {
        if (!data) fail_line(line, "[pairs] before [curve]");
        std::vector<HomogPoly> forms;
        for (const std::string& part : split(value, ';'))
          forms.push_back(parse_poly_at(part, line));
        try {
          add_named(*data, key, as_divisor(conjugate_pair_divisor(data->curve, std::move(forms))),
                    line);
        } catch (const Error& e) {
          if (e.code() == Err::FileFormat) throw;
          fail_line(line, e.what(), e.code());
        }
        break;
      }
      case Sec::Divisors: {
        if (!data) fail_line(line, "[divisors] before [curve]");
        Divisor d = parse_combo(*data, value, line);
        add_named(*data, key, std::move(d), line);
        break;
      }
      case Sec::Mw: {
        if (!data) fail_line(line, "[mw] before [curve]");
        if (key == "generators") {
          if (!mw_gens.empty()) fail_line(line, "duplicate generators line");
          for (const std::string& part : split(value, ',')) {
            std::size_t colon = part.find(':');
            if (colon == std::string::npos) fail_line(line, "generator must look like NAME:order");
            std::string gname = trim(part.substr(0, colon));
            std::string order = trim(part.substr(colon + 1));
            if (!is_integer(order)) fail_line(line, "order '" + order + "' is not an integer");
            if (data->divisors.find(gname) == data->divisors.end())
              fail_line(line, "unknown divisor '" + gname + "'", Err::UnknownName);
            mw_gens.emplace_back(gname, to_long(order, line));
          }
        } else if (key == "base") {
          if (mw_base) fail_line(line, "duplicate base line");
          if (data->divisors.find(value) == data->divisors.end())
            fail_line(line, "unknown divisor '" + value + "'", Err::UnknownName);
          mw_base = value;
        } else {
          fail_line(line, "the [mw] section only takes 'generators' and 'base'");
        }
        break;
      }
    }
  }
  if (!data) fail(Err::FileFormat, "no [curve] section", 0);
  if (mw_line) {
    if (mw_gens.empty()) fail_line(*mw_line, "the [mw] section needs a generators line");
    if (!mw_base) fail_line(*mw_line, "the [mw] section needs a base line");
    MWPresentation mw{{}, data->divisors.at(*mw_base)};
    for (const auto& [gname, order] : mw_gens)
      mw.generators.push_back(MWGenerator{data->divisors.at(gname), order});
    data->mw = std::move(mw);
  }
  return std::move(*data);
}

const Divisor& find_divisor(const CurveFileData& data, const std::string& name) {
  auto it = data.divisors.find(name);
  if (it == data.divisors.end()) fail(Err::UnknownName, "unknown divisor '" + name + "'");
  return it->second;
}

LinMatrix parse_matrix_file(const std::string& text) {
  LinMatrix m;
  std::istringstream in(text);
  std::string raw;
  long line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (std::size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    if (trim(raw).empty()) continue;
    std::vector<HomogPoly> row;
    for (const std::string& part : split(raw, ',')) {
      HomogPoly e = parse_poly_at(part, line);
      if (e.is_zero())
        e = HomogPoly::zero(1);
      else if (e.degree() != 1)
        fail_line(line, "entry '" + part + "' is not a linear form");
      row.push_back(std::move(e));
    }
    if (!m.entries.empty() && row.size() != m.entries.front().size())
      fail_line(line, "rows of unequal length");
    m.entries.push_back(std::move(row));
  }
  if (m.entries.empty()) fail(Err::FileFormat, "empty matrix file", 0);
  if (m.entries.size() != m.entries.front().size())
    fail(Err::FileFormat, "matrix is not square", 0);
  m.size = int(m.entries.size());
  return m;
}

std::string render_matrix(const LinMatrix& m) {
  std::string out;
  for (const std::vector<HomogPoly>& row : m.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ", ";
      out += row[j].is_zero() ? "0" : poly_to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace detrep
