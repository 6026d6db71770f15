// Copyright 2026 The Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bwo/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bwo/error.hpp"

namespace bwo {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_error(std::string_view origin, const std::string& path, const std::string& why) {
  throw Error(ErrorCode::ParseError, std::string(origin) + ": " + path + ": " + why);
}

Rational number(const Json& j, std::string_view origin, const std::string& path) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      schema_error(origin, path, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  schema_error(origin, path, "expected a number string such as \"1/2\" or \"0.5\"");
}

}  // namespace

const Experiment& Document::experiment(std::string_view name) const {
  for (const auto& [n, e] : experiments) {
    if (n == name) return e;
  }
  throw Error(ErrorCode::InvalidArgument, "no experiment named '" + std::string(name) + "'");
}

const Experiment& Document::experiment_or_first(std::string_view name) const {
  if (!name.empty()) return experiment(name);
  if (experiments.empty()) throw Error(ErrorCode::InvalidArgument, "document has no experiments");
  return experiments.front().second;
}

Document parse_document(std::string_view text, std::string_view origin) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                std::string(origin) + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  if (!root.is_object()) schema_error(origin, "/", "expected an object");

  Document doc;
  if (root.contains("options")) {
    const Json& o = root["options"];
    if (!o.is_array() || o.size() != 2 || !o[0].is_string() || !o[1].is_string() || o[0] == o[1]) {
      schema_error(origin, "/options", "expected two distinct option labels");
    }
    doc.options = {o[0].get<std::string>(), o[1].get<std::string>()};
  }

  bool allow_asymmetric = false;
  if (root.contains("allow_asymmetric")) {
    if (!root["allow_asymmetric"].is_boolean()) schema_error(origin, "/allow_asymmetric", "expected a boolean");
    allow_asymmetric = root["allow_asymmetric"].get<bool>();
  }

  if (!root.contains("states") || !root["states"].is_array()) schema_error(origin, "/states", "expected an array");
  std::vector<State> states;
  const Json& js = root["states"];
  for (std::size_t i = 0; i < js.size(); ++i) {
    const std::string path = "/states/" + std::to_string(i);
    const Json& s = js[i];
    if (!s.is_object() || !s.contains("prior") || !s.contains("u")) {
      schema_error(origin, path, "expected {\"prior\": ..., \"u\": [ux, uy]}");
    }
    if (!s["u"].is_array() || s["u"].size() != 2) schema_error(origin, path + "/u", "expected two utilities");
    states.push_back({number(s["prior"], origin, path + "/prior"), number(s["u"][0], origin, path + "/u/0"),
                      number(s["u"][1], origin, path + "/u/1")});
  }
  try {
    doc.env = Environment(std::move(states), allow_asymmetric ? SymmetryCheck::Skip : SymmetryCheck::Enforce);
  } catch (const Error& e) {
    throw Error(e.code(), std::string(origin) + ": " + e.what());
  }

  if (root.contains("experiments")) {
    const Json& je = root["experiments"];
    if (!je.is_object()) schema_error(origin, "/experiments", "expected an object of named matrices");
    for (const auto& [name, matrix] : je.items()) {
      const std::string path = "/experiments/" + name;
      if (!matrix.is_array()) schema_error(origin, path, "expected an array of rows");
      std::vector<std::vector<Rational>> rows;
      for (std::size_t w = 0; w < matrix.size(); ++w) {
        if (!matrix[w].is_array()) schema_error(origin, path + "/" + std::to_string(w), "expected a row array");
        std::vector<Rational> row;
        for (std::size_t s = 0; s < matrix[w].size(); ++s) {
          row.push_back(number(matrix[w][s], origin, path + "/" + std::to_string(w) + "/" + std::to_string(s)));
        }
        rows.push_back(std::move(row));
      }
      try {
        Experiment exp(std::move(rows));
        check_compatible(doc.env, exp);
        doc.experiments.emplace_back(name, std::move(exp));
      } catch (const Error& e) {
        throw Error(e.code(), std::string(origin) + ": " + path + ": " + e.what());
      }
    }
  }
  return doc;
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

std::string dump_document(const Document& doc) {
  Json root;
  root["options"] = {doc.options[0], doc.options[1]};
  Json states = Json::array();
  for (const auto& st : doc.env.states()) {
    states.push_back({{"prior", st.prior.str()}, {"u", {st.u_x.str(), st.u_y.str()}}});
  }
  root["states"] = std::move(states);
  Json exps = Json::object();
  for (const auto& [name, exp] : doc.experiments) {
    Json rows = Json::array();
    for (const auto& row : exp.rows()) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(v.str());
      rows.push_back(std::move(r));
    }
    exps[name] = std::move(rows);
  }
  root["experiments"] = std::move(exps);
  if (!doc.env.symmetric()) root["allow_asymmetric"] = true;
  return root.dump(2) + "\n";
}

}  // namespace bwo
