#include "blob/serialize.hpp"

#include <algorithm>
#include <json.hpp>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

#include "blob/errors.hpp"

namespace blob {

namespace {

using json = nlohmann::ordered_json;

long long coefficient_as_int64(const Int& value) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (value < lo || value > hi) {
    throw std::overflow_error("coefficient " + value.str() +
                              " does not fit in the JSON integer range");
  }
  return value.convert_to<long long>();
}

json poly_to_json_value(const LaurentPoly& poly) {
  json terms = json::array();
  for (const auto& [e, c] : poly.terms()) {
    terms.push_back(json::array({e, coefficient_as_int64(c)}));
  }
  return terms;
}

LaurentPoly poly_from_json_value(const json& terms) {
  if (!terms.is_array()) {
    throw std::runtime_error("polynomial JSON must be an array of pairs");
  }
  LaurentPoly poly;
  for (const json& term : terms) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() ||
        !term[1].is_number_integer()) {
      throw std::runtime_error(
          "polynomial JSON terms must be [exponent, coefficient] pairs");
    }
    poly += LaurentPoly::monomial(term[0].get<int>(),
                                  Int(term[1].get<long long>()));
  }
  return poly;
}

}  // namespace

std::string poly_to_json(const LaurentPoly& poly) {
  return poly_to_json_value(poly).dump();
}

LaurentPoly poly_from_json(const std::string& text) {
  return poly_from_json_value(json::parse(text));
}

std::string decomp_to_json(const DecompMatrix& matrix) {
  json root;
  root["params"] = {{"n", matrix.params.n},
                    {"l", matrix.params.l},
                    {"m", matrix.params.m}};
  root["weights"] = matrix.weights;
  json columns = json::array();
  for (const DecompColumn& column : matrix.columns) {
    json col;
    col["lambda"] = column.index.lambda;
    col["kappa"] = column.index.position.kappa;
    col["m_set"] = column.index.entries;
    json entries = json::array();
    std::vector<int> sorted = column.index.entries;
    std::sort(sorted.begin(), sorted.end());
    for (int mu : sorted) {
      entries.push_back(
          {{"mu", mu}, {"poly", poly_to_json_value(column.entry(mu))}});
    }
    col["entries"] = entries;
    columns.push_back(col);
  }
  root["columns"] = columns;
  return root.dump(2) + "\n";
}

DecompMatrix decomp_from_json(const std::string& text) {
  const json root = json::parse(text);
  const BlobParams p = validate_params(root.at("params").at("l").get<int>(),
                                       root.at("params").at("m").get<int>(),
                                       root.at("params").at("n").get<int>());
  DecompMatrix matrix;
  matrix.params = p;
  matrix.weights = root.at("weights").get<std::vector<int>>();
  const AlcoveSystem sys = alcove_system(p);
  for (const json& col : root.at("columns")) {
    DecompColumn column;
    column.index.lambda = col.at("lambda").get<int>();
    column.index.position = classify_weight(column.index.lambda, sys);
    column.index.entries = col.at("m_set").get<std::vector<int>>();
    if (column.index.position.kappa != col.at("kappa").get<int>()) {
      throw std::runtime_error("kappa in JSON disagrees with (l, m)");
    }
    std::map<int, LaurentPoly> by_weight;
    for (const json& entry : col.at("entries")) {
      by_weight[entry.at("mu").get<int>()] =
          poly_from_json_value(entry.at("poly"));
    }
    for (int mu : column.index.entries) {
      column.entries.push_back(by_weight.at(mu));
    }
    matrix.columns.push_back(std::move(column));
  }
  return matrix;
}

std::string decomp_to_csv(const DecompMatrix& matrix) {
  std::ostringstream out;
  out << "mu,lambda,poly\n";
  for (int mu : matrix.weights) {
    for (const DecompColumn& column : matrix.columns) {
      out << mu << ',' << column.index.lambda << ','
          << column.entry(mu).to_string() << '\n';
    }
  }
  return out.str();
}

}  // namespace blob
