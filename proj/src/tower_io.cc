// Copyright 2026 The normtower Authors
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

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "normtower/error.h"
#include "normtower/tower.h"
#include "text_cursor.h"

namespace normtower {

using internal::TextCursor;
using json = nlohmann::json;

namespace {

std::string RequireString(const json& obj, const char* field,
                          const std::string& where) {
  if (!obj.is_object() || !obj.contains(field)) {
    throw ConfigError(where + ": missing field \"" + field + "\"");
  }
  const json& v = obj.at(field);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  throw ConfigError(where + ": field \"" + field +
                    "\" must be a string (or a natural number)");
}

template <typename Fn>
auto Wrap(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ConfigError(where + ": " + e.what());
  } catch (const ConfigError& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

}  // namespace

TowerConfig ParseConfig(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "alpha" && key != "base" && key != "assignment") {
      throw ConfigError("unknown config field \"" + key + "\"");
    }
  }
  Ordinal alpha = Wrap("alpha", [&] {
    return ParseOrdinal(RequireString(doc, "alpha", "config"));
  });
  GroupSpec base = Wrap("base", [&] {
    return ParseGroupSpec(RequireString(doc, "base", "config"));
  });
  if (!doc.contains("assignment") || !doc.at("assignment").is_array()) {
    throw ConfigError("config: \"assignment\" must be a list");
  }
  std::vector<GroupInterval> assignment;
  std::size_t i = 0;
  for (const json& entry : doc.at("assignment")) {
    const std::string where = "assignment[" + std::to_string(i++) + "]";
    GroupInterval iv{
        Wrap(where + ".lo",
             [&] { return ParseOrdinal(RequireString(entry, "lo", where)); }),
        Wrap(where + ".hi",
             [&] { return ParseOrdinal(RequireString(entry, "hi", where)); }),
        Wrap(where + ".group", [&] {
          return ParseGroupSpec(RequireString(entry, "group", where));
        })};
    assignment.push_back(std::move(iv));
  }
  return TowerConfig(std::move(alpha), std::move(base), std::move(assignment));
}

TowerConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str());
}

std::string ConfigToJson(const TowerConfig& cfg) {
  json doc;
  doc["alpha"] = cfg.alpha().ToString();
  doc["base"] = cfg.base().ToString();
  doc["assignment"] = json::array();
  for (const auto& iv : cfg.assignment()) {
    doc["assignment"].push_back({{"lo", iv.lo.ToString()},
                                 {"hi", iv.hi.ToString()},
                                 {"group", iv.group.ToString()}});
  }
  return doc.dump(2);
}

namespace {

class ElementParser {
 public:
  ElementParser(const TowerConfig& cfg, std::string_view text)
      : cfg_(cfg), text_(text), in_(text_, pos_, "element") {}

  TowerElement ParseAll() {
    TowerElement x = ParseElem();
    if (!in_.AtEnd()) in_.Fail("trailing characters");
    return Finish(x);
  }

  TowerElement ParseExpressionAll() {
    TowerElement x = ParseProduct();
    if (!in_.AtEnd()) in_.Fail("trailing characters");
    return x;
  }

 private:
  TowerElement Finish(const TowerElement& raw) {
    TowerElement x = Canonicalize(cfg_, raw);
    ValidateElement(cfg_, x);
    return x;
  }

  TowerElement ParseElem() {
    if (in_.Consume("b(")) {
      BaseElement v = ParseBaseElementAt(cfg_.base(), text_, pos_);
      in_.Expect(')');
      return TowerElement::Base(std::move(v));
    }
    in_.Expect('{');
    in_.Expect("d=");
    const std::size_t end = text_.find(';', pos_);
    if (end == std::string_view::npos) in_.Fail("expected ';' after d=");
    Ordinal delta = ParseOrdinal(text_.substr(pos_, end - pos_));
    pos_ = end + 1;
    if (delta.IsZero() || delta >= cfg_.alpha()) {
      throw DomainError("level overflow: d=" + delta.ToString() +
                        " needs 1 <= d < alpha = " + cfg_.alpha().ToString());
    }
    const GroupSpec& acting = cfg_.ActingGroup(delta);
    in_.Expect("g=");
    BaseElement g = ParseBaseElementAt(acting, text_, pos_);
    in_.Expect(';');
    in_.Expect("f=");
    in_.Expect('{');
    TowerElement::Support f;
    if (!in_.Consume('}')) {
      do {
        BaseElement key = ParseBaseElementAt(acting, text_, pos_);
        in_.Expect(':');
        TowerElement value = ParseElem();
        for (const auto& entry : f) {
          if (entry.first == key) {
            in_.Fail("duplicate key " + key.ToString());
          }
        }
        f.emplace_back(std::move(key), std::move(value));
      } while (in_.Consume(','));
      in_.Expect('}');
    }
    in_.Expect('}');
    return TowerElement::MakeNode(std::move(delta), std::move(f), std::move(g));
  }

  TowerElement ParseProduct() {
    TowerElement x = ParseFactor();
    while (in_.Consume('*')) x = Mul(cfg_, x, ParseFactor());
    return x;
  }

  TowerElement ParseFactor() {
    if (in_.Consume("inv(")) {
      TowerElement x = ParseProduct();
      in_.Expect(')');
      return Inv(cfg_, x);
    }
    if (in_.Consume("conj(")) {
      TowerElement x = ParseProduct();
      in_.Expect(',');
      TowerElement y = ParseProduct();
      in_.Expect(')');
      return Conjugate(cfg_, x, y);
    }
    if (in_.Consume("id")) return IdentityElement(cfg_);
    if (in_.Consume('(')) {
      TowerElement x = ParseProduct();
      in_.Expect(')');
      return x;
    }
    return Finish(ParseElem());
  }

  const TowerConfig& cfg_;
  std::string_view text_;
  std::size_t pos_ = 0;
  TextCursor in_;
};

void Format(const TowerElement& x, std::string& out) {
  if (x.IsBase()) {
    out += "b(" + x.base_value().ToString() + ")";
    return;
  }
  const auto& node = x.node();
  out += "{d=" + node.delta.ToString() + "; g=" + node.g.ToString() + "; f={";
  for (std::size_t i = 0; i < node.f.size(); ++i) {
    if (i) out += ", ";
    out += node.f[i].first.ToString() + ": ";
    Format(node.f[i].second, out);
  }
  out += "}}";
}

}  // namespace

TowerElement ParseElement(const TowerConfig& cfg, std::string_view text) {
  return ElementParser(cfg, text).ParseAll();
}

std::string FormatElement(const TowerElement& x) {
  std::string out;
  Format(x, out);
  return out;
}

TowerElement EvaluateExpression(const TowerConfig& cfg, std::string_view text) {
  return ElementParser(cfg, text).ParseExpressionAll();
}

}  // namespace normtower
