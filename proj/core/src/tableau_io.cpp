#include "rkstab/tableau_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rkstab {
namespace {

using nlohmann::json;

Rational entry(const json& value, const std::string& where) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long long>());
  throw std::invalid_argument(where + ": entries must be strings (\"p/q\", integer or decimal)");
}

std::vector<Rational> vector_field(const json& doc, const char* key, std::size_t s) {
  const auto& arr = doc.at(key);
  if (!arr.is_array() || arr.size() != s) {
    throw std::invalid_argument(std::string("field \"") + key + "\" must be an array of length s");
  }
  std::vector<Rational> out;
  out.reserve(s);
  for (std::size_t i = 0; i < s; ++i) out.push_back(entry(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
  return out;
}

json to_json_vector(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

}  // namespace

ButcherTableau parse_tableau(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("tableau document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("tableau document must be a JSON object");
  for (const char* key : {"s", "A", "b", "c"}) {
    if (!doc.contains(key)) throw std::invalid_argument(std::string("tableau is missing field \"") + key + "\"");
  }
  if (!doc["s"].is_number_integer() || doc["s"].get<long long>() < 1) {
    throw std::invalid_argument("field \"s\" must be a positive integer");
  }
  const auto s = static_cast<std::size_t>(doc["s"].get<long long>());

  ButcherTableau t;
  const auto& rows = doc["A"];
  if (!rows.is_array() || rows.size() != s) throw std::invalid_argument("field \"A\" must have s rows");
  t.a = RationalMatrix(s, s);
  for (std::size_t i = 0; i < s; ++i) {
    if (!rows[i].is_array() || rows[i].size() != s) {
      throw std::invalid_argument("row " + std::to_string(i) + " of \"A\" must have s entries");
    }
    for (std::size_t j = 0; j < s; ++j) {
      t.a(i, j) = entry(rows[i][j], "A[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  t.b = vector_field(doc, "b", s);
  t.c = vector_field(doc, "c", s);
  if (doc.contains("bhat") && !doc["bhat"].is_null()) t.bhat = vector_field(doc, "bhat", s);

  validate_tableau(t);
  return t;
}

ButcherTableau load_tableau(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open tableau file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_tableau(buffer.str());
}

std::string serialize_tableau(const ButcherTableau& t) {
  json doc;
  doc["s"] = t.stages();
  json rows = json::array();
  for (std::size_t i = 0; i < t.a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < t.a.cols(); ++j) row.push_back(to_string(t.a(i, j)));
    rows.push_back(std::move(row));
  }
  doc["A"] = std::move(rows);
  doc["b"] = to_json_vector(t.b);
  doc["c"] = to_json_vector(t.c);
  if (t.bhat) doc["bhat"] = to_json_vector(*t.bhat);
  return doc.dump(2);
}

}  // namespace rkstab
