#include "detconv/io.hpp"

#include <fstream>
#include <sstream>

#include "detconv/error.hpp"
#include "detconv/univariate.hpp"

namespace detconv::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw InputError("field '" + field + "': " + what);
}

std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string& field, const std::string& key) {
  return field.empty() ? key : field + "." + key;
}

const json& matrix_rows(const json& j, const std::string& field, std::string& rows_field, std::size_t& rows,
                        std::size_t& cols) {
  const json* entries = &j;
  rows_field = field;
  if (j.is_object()) {
    entries = &require_field(j, "entries", field);
    rows_field = dot(field, "entries");
  }
  if (!entries->is_array()) fail(rows_field, "expected an array of rows");
  rows = entries->size();
  cols = rows == 0 ? 0 : (*entries)[0].is_array() ? (*entries)[0].size() : 0;
  if (j.is_object()) {
    if (j.contains("rows") && size_from_json(j["rows"], dot(field, "rows")) != rows) {
      fail(dot(field, "rows"), "does not match the number of entry rows");
    }
    if (j.contains("cols")) {
      const std::size_t c = size_from_json(j["cols"], dot(field, "cols"));
      if (rows == 0) cols = c;
      else if (c != cols) fail(dot(field, "cols"), "does not match the entry row length");
    }
  }
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = (*entries)[i];
    if (!row.is_array()) fail(at(rows_field, i), "expected an array");
    if (row.size() != cols) fail(at(rows_field, i), "expected " + std::to_string(cols) + " entries");
  }
  return *entries;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InputError(path + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

const json& require_field(const json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) fail(field.empty() ? "<root>" : field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(dot(field, key), "missing");
  return *it;
}

std::size_t size_from_json(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected a non-negative integer");
  const auto v = j.get<long long>();
  if (v < 0) fail(field, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) fail(field, "expected a rational as \"n\" or \"n/d\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(field, e.what());
  }
}

json to_json(const MultiPoly& p) {
  json terms = json::array();
  // Highest grlex term first, matching str().
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    json e = json::array();
    for (unsigned v : it->first.values()) e.push_back(v);
    terms.push_back(json{{"exp", e}, {"coeff", to_json(it->second)}});
  }
  return json{{"arity", p.arity()}, {"terms", terms}, {"text", p.str()}};
}

MultiPoly poly_from_json(const json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return parse_univariate(j.get<std::string>());
    } catch (const std::exception& e) {
      fail(field, e.what());
    }
  }
  if (j.is_number_integer()) return MultiPoly(1, Rational(j.get<long long>()));
  const std::size_t arity = size_from_json(require_field(j, "arity", field), dot(field, "arity"));
  if (arity == 0) fail(dot(field, "arity"), "must be positive");
  const json& terms = require_field(j, "terms", field);
  if (!terms.is_array()) fail(dot(field, "terms"), "expected an array");
  MultiPoly p(arity);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tf = at(dot(field, "terms"), i);
    const json& exp = require_field(terms[i], "exp", tf);
    if (!exp.is_array() || exp.size() != arity) {
      fail(dot(tf, "exp"), "expected " + std::to_string(arity) + " exponents");
    }
    ExponentVector e(arity);
    for (std::size_t v = 0; v < arity; ++v) e[v] = static_cast<unsigned>(size_from_json(exp[v], at(dot(tf, "exp"), v)));
    p.add_term(e, rational_from_json(require_field(terms[i], "coeff", tf), dot(tf, "coeff")));
  }
  return p;
}

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(i, c)));
    rows.push_back(row);
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const MultiPoly& e = m(i, c);
      row.push_back(e.is_constant() ? to_json(e.constant_term()) : to_json(e));
    }
    rows.push_back(row);
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

RationalMatrix rational_matrix_from_json(const json& j, const std::string& field) {
  std::string rf;
  std::size_t rows = 0, cols = 0;
  const json& e = matrix_rows(j, field, rf, rows, cols);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(e[i][c], at(at(rf, i), c));
  return m;
}

PolyMatrix poly_matrix_from_json(const json& j, const std::string& field, std::size_t arity) {
  std::string rf;
  std::size_t rows = 0, cols = 0;
  const json& e = matrix_rows(j, field, rf, rows, cols);
  PolyMatrix m(rows, cols, arity);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c) {
      const json& v = e[i][c];
      const std::string f = at(at(rf, i), c);
      if (v.is_object()) {
        MultiPoly p = poly_from_json(v, f);
        if (p.arity() != arity) fail(f, "expected arity " + std::to_string(arity));
        m.set(i, c, std::move(p));
      } else {
        m.set(i, c, MultiPoly(arity, rational_from_json(v, f)));
      }
    }
  return m;
}

json to_json(const GsvcpCoeffs& c) {
  json grid = json::array();
  for (const auto& row : c.grid) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    grid.push_back(r);
  }
  return json{{"m", c.m}, {"s", c.s}, {"t", c.t}, {"grid", grid}};
}

GsvcpCoeffs gsvcp_coeffs_from_json(const json& j, const std::string& field) {
  const std::size_t m = size_from_json(require_field(j, "m", field), dot(field, "m"));
  const std::size_t s = size_from_json(require_field(j, "s", field), dot(field, "s"));
  const std::size_t t = size_from_json(require_field(j, "t", field), dot(field, "t"));
  const json& grid = require_field(j, "grid", field);
  const std::string gf = dot(field, "grid");
  if (!grid.is_array() || grid.size() != s + 1) fail(gf, "expected s+1 rows");
  GsvcpCoeffs c = GsvcpCoeffs::zeros(m, s, t);
  for (std::size_t a = 0; a <= s; ++a) {
    if (!grid[a].is_array() || grid[a].size() != t + 1) fail(at(gf, a), "expected t+1 entries");
    for (std::size_t b = 0; b <= t; ++b) c.grid[a][b] = rational_from_json(grid[a][b], at(at(gf, a), b));
  }
  return c;
}

GsvcpInstance gsvcp_instance_from_json(const json& j, const std::string& field) {
  RationalMatrix a1 = rational_matrix_from_json(require_field(j, "a1", field), dot(field, "a1"));
  RationalMatrix a2 = rational_matrix_from_json(require_field(j, "a2", field), dot(field, "a2"));
  if (a1.cols() != a2.cols()) fail(dot(field, "a2"), "must have as many columns as a1");
  return make_gsvcp_instance(std::move(a1), std::move(a2));
}

RankDecomposition rank_decomposition_from_json(const json& j, const std::string& field) {
  RankDecomposition dec;
  for (const char* key : {"a", "b"}) {
    const json& vs = require_field(j, key, field);
    const std::string vf = dot(field, key);
    if (!vs.is_array()) fail(vf, "expected an array of vectors");
    auto& out = key[0] == 'a' ? dec.a : dec.b;
    for (std::size_t r = 0; r < vs.size(); ++r) {
      if (!vs[r].is_array()) fail(at(vf, r), "expected an array");
      std::vector<Rational> v;
      for (std::size_t i = 0; i < vs[r].size(); ++i) v.push_back(rational_from_json(vs[r][i], at(at(vf, r), i)));
      out.push_back(std::move(v));
    }
  }
  if (dec.a.empty()) fail(dot(field, "a"), "need at least one vector");
  dec.n = dec.a[0].size();
  if (dec.a.size() != dec.b.size()) fail(dot(field, "b"), "must hold as many vectors as 'a'");
  for (std::size_t r = 0; r < dec.a.size(); ++r) {
    if (dec.a[r].size() != dec.n) fail(at(dot(field, "a"), r), "length differs from a[0]");
    if (dec.b[r].size() != dec.n) fail(at(dot(field, "b"), r), "length differs from a[0]");
  }
  return dec;
}

}  // namespace detconv::io
