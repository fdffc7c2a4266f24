#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dihedral/matrix.hpp"

namespace dihedral {

using json = nlohmann::json;

// Fixed-point rendering with `precision` decimals; negative zero prints as zero.
std::string format_real(double x, int precision);
// "a+bi" / "a-bi".
std::string format_complex(const Complex& z, int precision);

// Scalar <-> JSON. Rationals are "p/q" strings, complex values [re, im] pairs,
// integers plain numbers.
json scalar_to_json(long long x);
json scalar_to_json(const Rational& x);
json scalar_to_json(const Complex& x);

template <class T>
T scalar_from_json(const json& j);

template <class T>
json matrix_to_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
Matrix<T> matrix_from_json(const json& rows) {
  if (!rows.is_array()) throw ParameterError("matrix JSON must be an array of rows");
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = n_rows == 0 ? 0 : rows.at(0).size();
  Matrix<T> m(n_rows, n_cols);
  for (std::size_t r = 0; r < n_rows; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n_cols) throw ParameterError("ragged matrix JSON");
    for (std::size_t c = 0; c < n_cols; ++c) m(r, c) = scalar_from_json<T>(rows[r][c]);
  }
  return m;
}

// Cell text used by CSV and plain-text output.
std::string format_cell(long long x, int precision);
std::string format_cell(const Rational& x, int precision);
std::string format_cell(const Complex& x, int precision);

// Row-major CSV, one matrix row per line.
template <class T>
std::string matrix_to_csv(const Matrix<T>& m, int precision = 6) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      out += format_cell(m(r, c), precision);
    }
    out += '\n';
  }
  return out;
}

}  // namespace dihedral
