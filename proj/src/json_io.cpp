#include "projconst/json_io.hpp"

#include <fstream>

#include "projconst/errors.hpp"

namespace projconst {

namespace {

cx entry_from_json(const ordered_json& e, Field field, const std::string& where) {
  if (e.is_number()) return cx(e.get<double>(), 0.0);
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    cx v(e[0].get<double>(), e[1].get<double>());
    if (field == Field::Real && v.imag() != 0.0)
      throw SchemaError(where + ": nonzero imaginary part in a real-field entry");
    return v;
  }
  throw SchemaError(where + ": expected a number or an [re, im] pair");
}

ordered_json entry_to_json(cx v, Field field) {
  if (field == Field::Real) return v.real();
  return ordered_json::array({v.real(), v.imag()});
}

Matrix matrix_from_json(const ordered_json& j, Field field, std::size_t cols,
                        const std::string& where) {
  if (!j.is_array() || j.empty()) throw SchemaError(where + ": expected a nonempty array of rows");
  Matrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto& row = j[r];
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != cols)
      throw SchemaError(rw + ": expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = entry_from_json(row[c], field, rw + "[" + std::to_string(c) + "]");
  }
  return m;
}

ordered_json matrix_to_json(const Matrix& m, Field field) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(entry_to_json(m(r, c), field));
    rows.push_back(std::move(row));
  }
  return rows;
}

Field field_from_json(const ordered_json& j) {
  if (!j.contains("field") || !j["field"].is_string())
    throw SchemaError("field: expected \"real\" or \"complex\"");
  return field_from_name(j["field"].get<std::string>());
}

std::size_t uint_from_json(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw SchemaError(std::string(key) + ": expected a nonnegative integer");
  return j[key].get<std::size_t>();
}

}  // namespace

ordered_json line_system_to_json(const LineSystem& s) {
  ordered_json j;
  j["field"] = field_name(s.field);
  j["n"] = s.n;
  j["vectors"] = matrix_to_json(s.vectors, s.field);
  if (s.weights)
    j["weights"] = *s.weights;
  else
    j["weights"] = nullptr;
  return j;
}

LineSystem line_system_from_json(const ordered_json& j) {
  LineSystem s;
  s.field = field_from_json(j);
  s.n = uint_from_json(j, "n");
  if (!j.contains("vectors")) throw SchemaError("vectors: missing");
  s.vectors = matrix_from_json(j["vectors"], s.field, s.n, "vectors");
  if (j.contains("weights") && !j["weights"].is_null()) {
    if (!j["weights"].is_array()) throw SchemaError("weights: expected an array or null");
    std::vector<double> w;
    for (std::size_t i = 0; i < j["weights"].size(); ++i) {
      if (!j["weights"][i].is_number())
        throw SchemaError("weights[" + std::to_string(i) + "]: expected a number");
      w.push_back(j["weights"][i].get<double>());
    }
    s.weights = std::move(w);
  }
  try {
    s.validate();
  } catch (const std::exception& e) {
    throw SchemaError(std::string("line system invalid: ") + e.what());
  }
  return s;
}

ordered_json basis_to_json(const SubspaceBasis& b) {
  ordered_json j;
  j["field"] = field_name(b.field);
  j["N"] = b.N;
  j["n"] = b.n;
  j["F"] = matrix_to_json(b.F, b.field);
  return j;
}

SubspaceBasis basis_from_json(const ordered_json& j) {
  SubspaceBasis b;
  b.field = field_from_json(j);
  b.N = uint_from_json(j, "N");
  b.n = uint_from_json(j, "n");
  if (!j.contains("F")) throw SchemaError("F: missing");
  b.F = matrix_from_json(j["F"], b.field, b.n, "F");
  if (b.F.rows() != b.N) throw SchemaError("F: expected " + std::to_string(b.N) + " rows");
  try {
    b.validate();
  } catch (const std::exception& e) {
    throw SchemaError(std::string("subspace basis invalid: ") + e.what());
  }
  return b;
}

ordered_json spec_to_json(const NormedSpaceSpec& s) {
  ordered_json j;
  j["field"] = field_name(s.field);
  j["n"] = s.n;
  j["functionals"] = matrix_to_json(s.functionals, s.field);
  if (s.label.empty())
    j["label"] = nullptr;
  else
    j["label"] = s.label;
  return j;
}

NormedSpaceSpec spec_from_json(const ordered_json& j) {
  NormedSpaceSpec s;
  s.field = field_from_json(j);
  s.n = uint_from_json(j, "n");
  if (!j.contains("functionals")) throw SchemaError("functionals: missing");
  s.functionals = matrix_from_json(j["functionals"], s.field, s.n, "functionals");
  if (j.contains("label") && j["label"].is_string()) s.label = j["label"].get<std::string>();
  try {
    s.validate();
  } catch (const std::exception& e) {
    throw SchemaError(std::string("norm spec invalid: ") + e.what());
  }
  return s;
}

ordered_json phi_state_to_json(const PhiState& s) {
  ordered_json j;
  j["field"] = field_name(s.field);
  j["n"] = s.n;
  j["N"] = s.N;
  j["Z"] = matrix_to_json(s.Z, s.field);
  j["Lambda"] = s.lambda;
  j["objective"] = s.objective;
  j["residuals"] = {{"orthonormality", s.orthonormality_residual}, {"mass", s.mass_residual}};
  j["seed"] = s.seed;
  return j;
}

PhiState phi_state_from_json(const ordered_json& j) {
  PhiState s;
  s.field = field_from_json(j);
  s.n = uint_from_json(j, "n");
  s.N = uint_from_json(j, "N");
  if (!j.contains("Z")) throw SchemaError("Z: missing");
  s.Z = matrix_from_json(j["Z"], s.field, s.n, "Z");
  if (s.Z.rows() != s.N) throw SchemaError("Z: expected " + std::to_string(s.N) + " rows");
  if (!j.contains("Lambda") || !j["Lambda"].is_array()) throw SchemaError("Lambda: expected an array");
  for (const auto& v : j["Lambda"]) {
    if (!v.is_number()) throw SchemaError("Lambda: expected numbers");
    s.lambda.push_back(v.get<double>());
  }
  if (s.lambda.size() != s.N) throw SchemaError("Lambda: expected N entries");
  if (j.contains("seed") && j["seed"].is_number_unsigned()) s.seed = j["seed"].get<std::uint64_t>();
  refresh_state(s);
  return s;
}

ordered_json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open file: " + path);
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace projconst
