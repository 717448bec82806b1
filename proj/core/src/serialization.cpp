// Copyright 2026 The specdom Authors
//
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

#include "specdom/serialization.hpp"

#include <utility>

#include <json.hpp>

#include "specdom/errors.hpp"

namespace specdom {

namespace {

using nlohmann::json;

// Schema failures and JSON syntax failures both surface as ParseError; the
// json exception text carries the library's byte position where it has one.
[[noreturn]] void schema_error(const std::string& what) {
  throw ParseError("schema violation: " + what);
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(),
                     e.byte > 0 ? static_cast<std::size_t>(e.byte - 1) : 0);
  }
}

Rational rational_from(const json& j, const char* where) {
  if (!j.is_string()) schema_error(std::string(where) + " must be a string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    schema_error(std::string(where) + ": " + e.what());
  }
}

json box_to(const Box& b) {
  if (b.is_bottom()) return json{{"bottom", true}};
  json dims = json::array();
  for (const auto& iv : b.dims())
    dims.push_back(json::array({iv.first.str(), iv.second.str()}));
  return json{{"dims", std::move(dims)}};
}

Box box_from(const json& j) {
  if (!j.is_object()) schema_error("box must be an object");
  if (j.contains("bottom")) {
    if (j["bottom"] != json(true)) schema_error("\"bottom\" must be true");
    return Box::bottom();
  }
  if (!j.contains("dims") || !j["dims"].is_array())
    schema_error("box needs \"bottom\" or a \"dims\" array");
  std::vector<Box::Interval> dims;
  for (const auto& pair : j["dims"]) {
    if (!pair.is_array() || pair.size() != 2)
      schema_error("each box dimension must be a [lo, hi] pair");
    dims.push_back({rational_from(pair[0], "box lower bound"),
                    rational_from(pair[1], "box upper bound")});
  }
  return Box::make(std::move(dims));
}

Carrier carrier_from(const json& j) {
  if (!j.is_array() || j.size() != 2)
    schema_error("\"carrier\" must be a [lo, hi] pair");
  return Carrier(rational_from(j[0], "carrier lower end"),
                 rational_from(j[1], "carrier upper end"));
}

json open_set_to(const OpenSet& s) {
  json pieces = json::array();
  for (const auto& p : s.pieces()) {
    pieces.push_back(json::array(
        {p.lower ? json(p.lower->str()) : json("leftend"), p.upper.str()}));
  }
  return json{{"carrier",
               json::array({s.carrier().lo.str(), s.carrier().hi.str()})},
              {"pieces", std::move(pieces)}};
}

OpenSet open_set_from(const json& j) {
  if (!j.is_object() || !j.contains("carrier") || !j.contains("pieces"))
    schema_error("open set needs \"carrier\" and \"pieces\"");
  Carrier carrier = carrier_from(j["carrier"]);
  if (!j["pieces"].is_array()) schema_error("\"pieces\" must be an array");
  std::vector<HalfOpenPiece> raw;
  for (const auto& p : j["pieces"]) {
    if (!p.is_array() || p.size() != 2)
      schema_error("each piece must be a [lower, upper] pair");
    Rational upper = rational_from(p[1], "piece upper end");
    if (p[0] == json("leftend"))
      raw.push_back(HalfOpenPiece::from_left_end(std::move(upper)));
    else
      raw.push_back(HalfOpenPiece::open(
          rational_from(p[0], "piece lower end"), std::move(upper)));
  }
  return OpenSet(std::move(carrier), std::move(raw));
}

json stepfn_to(const StepFn& f) {
  json comps = json::array();
  for (const auto& c : f.components())
    comps.push_back(json{{"open", open_set_to(c.open)}, {"box", box_to(c.box)}});
  return json{{"carrier", json::array({f.carrier().lo.str(),
                                       f.carrier().hi.str()})},
              {"dim", f.dim()},
              {"components", std::move(comps)}};
}

StepFn stepfn_from(const json& j) {
  if (!j.is_object() || !j.contains("carrier") || !j.contains("dim") ||
      !j.contains("components"))
    schema_error("step function needs \"carrier\", \"dim\", \"components\"");
  Carrier carrier = carrier_from(j["carrier"]);
  if (!j["dim"].is_number_integer())
    schema_error("\"dim\" must be an integer");
  if (!j["components"].is_array())
    schema_error("\"components\" must be an array");
  std::vector<StepComponent> comps;
  for (const auto& c : j["components"]) {
    if (!c.is_object() || !c.contains("open") || !c.contains("box"))
      schema_error("each component needs \"open\" and \"box\"");
    comps.push_back({open_set_from(c["open"]), box_from(c["box"])});
  }
  return make_stepfn(std::move(carrier), j["dim"].get<int>(),
                     std::move(comps));
}

}  // namespace

std::string box_to_json(const Box& b) { return box_to(b).dump(); }

Box box_from_json(const std::string& text) {
  return box_from(parse_text(text));
}

std::string open_set_to_json(const OpenSet& s) { return open_set_to(s).dump(); }

OpenSet open_set_from_json(const std::string& text) {
  return open_set_from(parse_text(text));
}

std::string stepfn_to_json(const StepFn& f) { return stepfn_to(f).dump(); }

StepFn stepfn_from_json(const std::string& text) {
  return stepfn_from(parse_text(text));
}

std::string lattice_to_json(const FinDistLattice& L) {
  json elements = json::array();
  for (const auto& n : L.names()) elements.push_back(n);
  json leq = json::array();
  for (int a = 0; a < L.size(); ++a) {
    json row = json::array();
    for (int b = 0; b < L.size(); ++b) row.push_back(L.leq(a, b) ? 1 : 0);
    leq.push_back(std::move(row));
  }
  json out{{"elements", std::move(elements)}, {"leq", std::move(leq)}};
  if (L.labels()) {
    json labels = json::object();
    for (int i = 0; i < L.size(); ++i)
      labels[L.names()[i]] = open_set_to((*L.labels())[i]);
    out["labels"] = std::move(labels);
  }
  return out.dump();
}

FinDistLattice lattice_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("elements") || !j.contains("leq"))
    schema_error("lattice needs \"elements\" and \"leq\"");
  if (!j["elements"].is_array())
    schema_error("\"elements\" must be an array of names");
  std::vector<std::string> names;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) schema_error("element names must be strings");
    names.push_back(e.get<std::string>());
  }
  const std::size_t n = names.size();
  if (!j["leq"].is_array() || j["leq"].size() != n)
    schema_error("\"leq\" must be an n-by-n matrix");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    const auto& row = j["leq"][a];
    if (!row.is_array() || row.size() != n)
      schema_error("\"leq\" must be an n-by-n matrix");
    for (std::size_t b = 0; b < n; ++b) {
      const auto& cell = row[b];
      if (cell.is_boolean())
        leq[a][b] = cell.get<bool>();
      else if (cell.is_number_integer() &&
               (cell.get<int>() == 0 || cell.get<int>() == 1))
        leq[a][b] = cell.get<int>() == 1;
      else
        schema_error("\"leq\" entries must be 0/1 or booleans");
    }
  }
  std::optional<std::vector<OpenSet>> labels;
  if (j.contains("labels") && !j["labels"].is_null()) {
    if (!j["labels"].is_object())
      schema_error("\"labels\" must map element names to open sets");
    std::vector<OpenSet> ls;
    for (const auto& name : names) {
      if (!j["labels"].contains(name))
        schema_error("\"labels\" is missing element \"" + name + "\"");
      ls.push_back(open_set_from(j["labels"][name]));
    }
    labels = std::move(ls);
  }
  return FinDistLattice::from_leq(std::move(names), std::move(leq),
                                  std::move(labels));
}

std::string problem_to_json(const IvpProblem& p) {
  return json{{"n", p.field.dim()},
              {"t0", p.t0.str()},
              {"T", p.t1.str()},
              {"y0", box_to(p.y0)},
              {"field", p.field.source()}}
      .dump();
}

IvpProblem problem_from_json(const std::string& text, int pieces) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("t0") ||
      !j.contains("T") || !j.contains("y0") || !j.contains("field"))
    schema_error("problem needs \"n\", \"t0\", \"T\", \"y0\", \"field\"");
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
    schema_error("\"n\" must be a positive integer");
  if (!j["field"].is_string())
    schema_error("\"field\" must be a string expression");
  VectorField field = parse_field(j["field"].get<std::string>());
  if (field.dim() != j["n"].get<int>())
    throw DimensionMismatch("field has " + std::to_string(field.dim()) +
                            " components, \"n\" says " +
                            std::to_string(j["n"].get<int>()));
  return make_ivp(std::move(field), box_from(j["y0"]),
                  rational_from(j["t0"], "\"t0\""),
                  rational_from(j["T"], "\"T\""), pieces);
}

}  // namespace specdom
