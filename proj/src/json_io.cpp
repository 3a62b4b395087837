#include "pbm/json_io.hpp"

#include <string>

namespace pbm::json {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::kParse, what); }

template <typename T, typename ElemFn>
Grid<T> grid_from_json(const json& j, ElemFn elem) {
  if (!j.is_array() || j.empty()) parse_error("matrix must be a non-empty array of rows");
  const int rows = static_cast<int>(j.size());
  if (!j[0].is_array() || j[0].empty()) parse_error("matrix rows must be non-empty arrays");
  const int cols = static_cast<int>(j[0].size());
  Grid<T> out(rows, cols);
  for (int i = 1; i <= rows; ++i) {
    const json& row = j[i - 1];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix at row " + std::to_string(i));
    }
    for (int j2 = 1; j2 <= cols; ++j2) out(i, j2) = elem(row[j2 - 1]);
  }
  return out;
}

template <typename T, typename ElemFn>
json grid_to_json(const Grid<T>& g, ElemFn elem) {
  json out = json::array();
  for (int i = 1; i <= g.rows(); ++i) {
    json row = json::array();
    for (int j = 1; j <= g.cols(); ++j) row.push_back(elem(g(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

ExtMatrix ext_or_default(const json& doc, const char* key, int m, int n, ExtInt fill) {
  if (!doc.contains(key)) return ExtMatrix(m, n, fill);
  return ext_matrix_from_json(doc.at(key));
}

ExtMatrix required(const json& doc, const char* key) {
  if (!doc.contains(key)) parse_error(std::string("missing key \"") + key + "\"");
  return ext_matrix_from_json(doc.at(key));
}

}  // namespace

json to_json(ExtInt x) {
  if (x.is_finite()) return x.value();
  return x.to_string();
}

ExtInt ext_from_json(const json& j) {
  if (j.is_number_integer()) return ExtInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "-inf") return ExtInt::neg_inf();
    if (s == "+inf" || s == "inf") return ExtInt::pos_inf();
  }
  parse_error("expected an integer, \"-inf\" or \"+inf\", got " + j.dump());
}

json to_json(const IntMatrix& m) {
  return grid_to_json(m, [](long long v) { return json(v); });
}
json to_json(const ExtMatrix& m) {
  return grid_to_json(m, [](ExtInt v) { return to_json(v); });
}
json to_json(const SubsetMask& x) {
  return grid_to_json(x, [](char v) { return json(v ? 1 : 0); });
}

IntMatrix int_matrix_from_json(const json& j) {
  return grid_from_json<long long>(j, [](const json& e) -> long long {
    if (!e.is_number_integer()) parse_error("expected an integer entry, got " + e.dump());
    return e.get<long long>();
  });
}

ExtMatrix ext_matrix_from_json(const json& j) {
  return grid_from_json<ExtInt>(j, [](const json& e) { return ext_from_json(e); });
}

SubsetMask mask_from_json(const json& j) {
  return grid_from_json<char>(j, [](const json& e) -> char {
    if (e.is_boolean()) return e.get<bool>() ? 1 : 0;
    if (e.is_number_integer() && (e.get<int>() == 0 || e.get<int>() == 1)) {
      return static_cast<char>(e.get<int>());
    }
    parse_error("mask entries must be booleans or 0/1, got " + e.dump());
  });
}

PbmInstance instance_from_json(const json& doc) {
  if (!doc.is_object()) parse_error("instance document must be a JSON object");
  if (!doc.contains("m") || !doc.contains("n")) parse_error("missing key \"m\" or \"n\"");
  PbmInstance inst;
  inst.m = doc.at("m").get<int>();
  inst.n = doc.at("n").get<int>();
  if (inst.m <= 0 || inst.n <= 0) {
    throw Error(ErrorCode::kDimensionMismatch, "dimensions must be positive");
  }
  inst.phi1 = required(doc, "phi1");
  inst.gamma1 = required(doc, "gamma1");
  inst.phi2 = required(doc, "phi2");
  inst.gamma2 = required(doc, "gamma2");
  inst.f = ext_or_default(doc, "f", inst.m, inst.n, ExtInt::neg_inf());
  inst.g = ext_or_default(doc, "g", inst.m, inst.n, ExtInt::pos_inf());
  inst.alpha = doc.contains("alpha") ? ext_from_json(doc.at("alpha")) : ExtInt::neg_inf();
  inst.beta = doc.contains("beta") ? ext_from_json(doc.at("beta")) : ExtInt::pos_inf();
  return validate_instance(inst);
}

json to_json(const PbmInstance& inst) {
  return json{{"m", inst.m},
              {"n", inst.n},
              {"phi1", to_json(inst.phi1)},
              {"gamma1", to_json(inst.gamma1)},
              {"phi2", to_json(inst.phi2)},
              {"gamma2", to_json(inst.gamma2)},
              {"f", to_json(inst.f)},
              {"g", to_json(inst.g)},
              {"alpha", to_json(inst.alpha)},
              {"beta", to_json(inst.beta)}};
}

}  // namespace pbm::json
