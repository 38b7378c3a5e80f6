#include "tenscan/json_io.hpp"

#include "tenscan/error.hpp"

namespace tenscan::json_io {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorKind::ParseError, what);
}

std::uint64_t get_count(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    fail(std::string(what) + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

PrimeField field_of(const json& j) {
  if (!j.is_object() || !j.contains("p")) fail("document needs a modulus \"p\"");
  const std::uint64_t p = get_count(j.at("p"), "\"p\"");
  return PrimeField(p);
}

PrimeField::Residue residue(const json& j, const PrimeField& f) {
  if (!j.is_number_integer()) fail("entries must be integers");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::uint64_t>(v) >= f.modulus())
    fail("entry " + std::to_string(v) + " is outside [0, p)");
  return static_cast<PrimeField::Residue>(v);
}

std::vector<std::size_t> counts(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& v : j) out.push_back(get_count(v, what));
  return out;
}

}  // namespace

json to_json(const SpatialMatrix& a) {
  json slices = json::array();
  for (std::size_t k = 0; k < a.q(); ++k) slices.push_back(to_json(a.slice(k)));
  return {{"p", a.field().modulus()}, {"dims", {a.m(), a.n(), a.q()}}, {"slices", slices}};
}

SpatialMatrix tensor_from_json(const json& j) {
  const PrimeField f = field_of(j);
  if (!j.contains("dims") || !j.contains("slices")) fail("tensor needs \"dims\" and \"slices\"");
  const auto dims = counts(j.at("dims"), "\"dims\"");
  if (dims.size() != 3) fail("\"dims\" must have three entries");
  const json& slices = j.at("slices");
  if (!slices.is_array() || slices.size() != dims[2])
    fail("\"slices\" must hold q = " + std::to_string(dims[2]) + " slices");
  std::vector<Matrix> mats;
  for (const auto& s : slices) mats.push_back(matrix_from_json(s, f, dims[0], dims[1]));
  return SpatialMatrix(f, dims[0], dims[1], mats);
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    rows.push_back(std::vector<PrimeField::Residue>(r.begin(), r.end()));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, PrimeField field, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    fail("matrix must have " + std::to_string(rows) + " rows");
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      fail("matrix row must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = residue(row[c], field);
  }
  return m;
}

json to_json(const Poly& p) {
  auto c = p.coeffs();
  return std::vector<PrimeField::Residue>(c.begin(), c.end());
}

Poly poly_from_json(const json& j, PrimeField field) {
  if (!j.is_array()) fail("polynomial must be an array of coefficients");
  std::vector<PrimeField::Residue> c;
  for (const auto& v : j) c.push_back(residue(v, field));
  return Poly(field, std::move(c));
}

json to_json(const KroneckerForm& form) {
  json finite = json::array();
  for (const auto& chi : form.finite_polys()) finite.push_back(to_json(chi));
  return {{"right", form.sizes(BlockKind::RightSingular)},
          {"left", form.sizes(BlockKind::LeftSingular)},
          {"inf", form.sizes(BlockKind::Infinite)},
          {"finite", finite}};
}

json to_json(const CanonicalSum& sum) {
  json finite = json::array();
  for (const auto& chi : sum.finite) finite.push_back(to_json(chi));
  return {{"right", sum.right}, {"left", sum.left}, {"finite", finite}};
}

CanonicalSum canonical_sum_from_json(const json& j, PrimeField field) {
  if (!j.is_object() || !j.contains("right") || !j.contains("left") || !j.contains("finite"))
    fail("label needs \"right\", \"left\" and \"finite\"");
  CanonicalSum sum{counts(j.at("right"), "\"right\""), counts(j.at("left"), "\"left\""), {}};
  if (!j.at("finite").is_array()) fail("\"finite\" must be an array");
  for (const auto& chi : j.at("finite")) sum.finite.push_back(poly_from_json(chi, field));
  return sum;
}

json to_json(const TransformWitness& w) {
  return {{"p", w.R.field().modulus()}, {"R", to_json(w.R)}, {"S", to_json(w.S)},
          {"T", to_json(w.T)}};
}

TransformWitness witness_from_json(const json& j) {
  const PrimeField f = field_of(j);
  auto square = [&](const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) fail(std::string("witness needs \"") + key + "\"");
    const std::size_t n = j.at(key).size();
    return matrix_from_json(j.at(key), f, n, n);
  };
  return {square("R"), square("S"), square("T")};
}

json to_json(const RegularClass22& cls) {
  json out{{"label", std::string(to_string(cls.label))}};
  if (cls.param) out["v"] = cls.param->value();
  return out;
}

}  // namespace tenscan::json_io
