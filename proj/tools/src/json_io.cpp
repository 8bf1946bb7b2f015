#include "json_io.hpp"

#include <string>

namespace shilov::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& j) {
  if (!j.is_number()) bad("expected a number, got " + j.dump());
  return j.get<double>();
}

int integer(const json& j) {
  if (!j.is_number_integer()) bad("expected an integer, got " + j.dump());
  return j.get<int>();
}

RMatrix real_rows(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) bad("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  RMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols) bad("ragged matrix rows");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = number(j[i][k]);
  }
  return m;
}

json rows_of(const RMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

json to_json(const polydisc::TorusPoint& t) {
  json turns = json::array();
  for (const auto& x : t.turns) turns.push_back(x.str());
  return {{"turns", turns}};
}

polydisc::TorusPoint torus_from_json(const json& j) {
  const json& turns = field(j, "turns");
  if (!turns.is_array() || turns.empty()) bad("'turns' must be a non-empty array");
  polydisc::TorusPoint t;
  for (const json& x : turns) {
    if (x.is_string()) {
      t.turns.push_back(polydisc::Turn::parse(x.get<std::string>()));
    } else if (x.is_number_integer()) {
      t.turns.emplace_back(x.get<std::int64_t>(), 1);
    } else {
      bad("turns are strings like \"3/4\"");
    }
  }
  return t;
}

json to_json(const CMatrix& m) { return {{"re", rows_of(m.real())}, {"im", rows_of(m.imag())}}; }

json to_json(Flavor flavor, const CMatrix& m) {
  json j = to_json(m);
  j["flavor"] = std::string(to_string(flavor));
  return j;
}

CMatrix matrix_from_json(const json& j) {
  const RMatrix re = real_rows(field(j, "re"));
  RMatrix im = RMatrix::Zero(re.rows(), re.cols());
  if (j.contains("im")) {
    im = real_rows(j.at("im"));
    if (im.rows() != re.rows() || im.cols() != re.cols()) fail(ErrorCode::DimensionMismatch, "re and im differ in shape");
  }
  CMatrix m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  return m;
}

CVector vector_from_json(const json& j) {
  const json& re = field(j, "re");
  if (!re.is_array() || re.empty()) bad("vector 're' must be a non-empty array");
  CVector v(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) v(static_cast<Eigen::Index>(i)) = number(re[i]);
  if (j.contains("im")) {
    const json& im = j.at("im");
    if (!im.is_array() || im.size() != re.size()) fail(ErrorCode::DimensionMismatch, "re and im differ in length");
    for (std::size_t i = 0; i < im.size(); ++i) v(static_cast<Eigen::Index>(i)) += cplx(0, number(im[i]));
  }
  return v;
}

json to_json(const models::MoebiusElement& g) { return to_json(g.flavor(), g.matrix()); }

json to_json(const lagrangian::LagrangianSubspace& l) {
  json cols = json::array();
  const RMatrix& b = l.basis();
  for (Eigen::Index k = 0; k < b.cols(); ++k) {
    json col = json::array();
    for (Eigen::Index i = 0; i < b.rows(); ++i) col.push_back(b(i, k));
    cols.push_back(std::move(col));
  }
  return {{"basis", cols}};
}

lagrangian::LagrangianSubspace lagrangian_from_json(const json& j, const Tolerances& eps) {
  // columns are stored as rows of the JSON array
  return lagrangian::LagrangianSubspace(real_rows(field(j, "basis")).transpose(), eps);
}

json to_json(const OrbitInvariant& inv) {
  return {{"r", inv.rank()},     {"n12", inv.n12()},   {"n23", inv.n23()},
          {"n31", inv.n31()},    {"n123", inv.n123()}, {"iota", inv.iota()}};
}

OrbitInvariant invariant_from_json(const json& j) {
  return OrbitInvariant(integer(field(j, "r")), integer(field(j, "n12")), integer(field(j, "n23")),
                        integer(field(j, "n31")), integer(field(j, "n123")), integer(field(j, "iota")));
}

json to_json(const MonotoneTuple& n) { return {{"N", n.values()}, {"r", n.rank()}}; }

MonotoneTuple tuple_from_json(const json& j, int rank) {
  const json& n = field(j, "N");
  if (!n.is_array() || n.size() != 5) bad("'N' must have five entries");
  std::array<int, 5> v{};
  for (std::size_t i = 0; i < 5; ++i) v[i] = integer(n[i]);
  if (j.contains("r")) rank = integer(j.at("r"));
  return MonotoneTuple(v, rank);
}

bool is_torus(const json& point) { return point.is_object() && point.contains("turns"); }

bool is_lagrangian(const json& point) { return point.is_object() && point.contains("basis"); }

}  // namespace shilov::cli
