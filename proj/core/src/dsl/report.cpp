// Copyright 2026 The catsheaf Authors
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

#include "catsheaf/dsl/report.hpp"

#include <sstream>

#include "json.hpp"

namespace catsheaf::dsl {
namespace {

using nlohmann::json;

template <class T>
json optional_json(const std::optional<T>& x) {
  return x ? json(*x) : json(nullptr);
}

json body_json(const ValidationReport& r) {
  json vs = json::array();
  for (const auto& v : r.violations) vs.push_back({{"law", v.law}, {"ids", v.ids}, {"detail", v.detail}});
  return {{"type", "validation"}, {"valid", r.valid()}, {"violations", vs}};
}

json body_json(const BijectionReport& r) {
  json collision = nullptr;
  if (r.collision) collision = {r.collision->first, r.collision->second};
  return {{"type", "bijection"},        {"source", r.source},
          {"target", r.target},         {"left_count", r.left_count},
          {"right_count", r.right_count}, {"injective", r.injective},
          {"collision", collision},     {"surjective", r.surjective},
          {"unmatched", optional_json(r.unmatched)},
          {"identity_available", r.identity_available},
          {"verdict", r.verdict}};
}

json body_json(const ListReport& r) {
  return {{"type", "list"}, {"count", r.items.size()}, {"items", r.items}};
}

json body_json(const FunctorCategoryReport& r) {
  return {{"type", "functor_category"}, {"objects", r.objects}, {"morphisms", r.morphisms}};
}

json body_json(const DecompositionReport& r) {
  return {{"type", "decomposition"},
          {"valid_sieve", r.valid_sieve},
          {"decomposed", r.decomposed},
          {"round_trip", r.round_trip},
          {"error", r.error},
          {"family", r.family},
          {"monoids", r.monoids},
          {"restriction_closed", r.restriction_closed},
          {"reverse_inclusion", r.reverse_inclusion},
          {"restriction_failures", r.restriction_failures},
          {"reverse_failures", r.reverse_failures}};
}

ReportBody body_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "validation") {
    ValidationReport r;
    for (const auto& v : j.at("violations")) {
      r.add(v.at("law").get<std::string>(), v.at("ids").get<std::vector<std::string>>(),
            v.at("detail").get<std::string>());
    }
    return r;
  }
  if (type == "bijection") {
    BijectionReport r;
    r.source = j.at("source").get<std::string>();
    r.target = j.at("target").get<std::string>();
    r.left_count = j.at("left_count").get<std::size_t>();
    r.right_count = j.at("right_count").get<std::size_t>();
    r.injective = j.at("injective").get<bool>();
    if (!j.at("collision").is_null()) {
      r.collision = {j.at("collision").at(0).get<std::string>(),
                     j.at("collision").at(1).get<std::string>()};
    }
    r.surjective = j.at("surjective").get<bool>();
    if (!j.at("unmatched").is_null()) r.unmatched = j.at("unmatched").get<std::string>();
    r.identity_available = j.at("identity_available").get<bool>();
    r.verdict = j.at("verdict").get<bool>();
    return r;
  }
  if (type == "list") return ListReport{j.at("items").get<std::vector<std::string>>()};
  if (type == "functor_category") {
    return FunctorCategoryReport{j.at("objects").get<std::vector<std::string>>(),
                                 j.at("morphisms").get<std::vector<std::string>>()};
  }
  if (type == "decomposition") {
    DecompositionReport r;
    r.valid_sieve = j.at("valid_sieve").get<bool>();
    r.decomposed = j.at("decomposed").get<bool>();
    r.round_trip = j.at("round_trip").get<bool>();
    r.error = j.at("error").get<std::string>();
    r.family = j.at("family").get<std::vector<std::string>>();
    r.monoids = j.at("monoids").get<std::map<std::string, std::vector<std::string>>>();
    r.restriction_closed = j.at("restriction_closed").get<bool>();
    r.reverse_inclusion = j.at("reverse_inclusion").get<bool>();
    r.restriction_failures = j.at("restriction_failures").get<std::vector<std::string>>();
    r.reverse_failures = j.at("reverse_failures").get<std::vector<std::string>>();
    return r;
  }
  throw Error(ErrorKind::kInvalidInput, "unknown report type '" + type + "'");
}

std::string call(const ReportRecord& r) {
  std::string out = r.command + "(";
  for (std::size_t i = 0; i < r.args.size(); ++i) out += (i ? ", " : "") + r.args[i];
  return out + ")";
}

void text_body(std::ostream& os, const ValidationReport& r) {
  if (r.valid()) {
    os << ": no violations\n";
    return;
  }
  os << ": " << r.violations.size() << " violation(s)\n";
  for (const auto& v : r.violations) {
    os << "  " << v.law;
    if (!v.ids.empty()) {
      os << " [";
      for (std::size_t i = 0; i < v.ids.size(); ++i) os << (i ? ", " : "") << v.ids[i];
      os << "]";
    }
    os << ": " << v.detail << "\n";
  }
}

void text_body(std::ostream& os, const BijectionReport& r) {
  os << ": |Hom(" << r.source << ", " << r.target << ")| = " << r.left_count << ", |Nat| = "
     << r.right_count << (r.injective ? ", injective" : ", not injective")
     << (r.surjective ? ", surjective" : ", not surjective") << "\n";
  if (r.collision) os << "  collision: " << r.collision->first << ", " << r.collision->second << "\n";
  if (r.unmatched) os << "  unmatched: " << *r.unmatched << "\n";
}

void text_body(std::ostream& os, const ListReport& r) {
  os << ": " << r.items.size() << " item(s)\n";
  for (const auto& i : r.items) os << "  " << i << "\n";
}

void text_body(std::ostream& os, const FunctorCategoryReport& r) {
  os << ": " << r.objects.size() << " object(s), " << r.morphisms.size() << " morphism(s)\n";
  for (const auto& o : r.objects) os << "  object " << o << "\n";
  for (const auto& m : r.morphisms) os << "  morphism " << m << "\n";
}

void text_body(std::ostream& os, const DecompositionReport& r) {
  os << (r.round_trip ? ": round trip ok" : ": round trip failed") << "\n";
  if (!r.error.empty()) os << "  error: " << r.error << "\n";
  for (const auto& v : r.family) {
    os << "  " << v << ":";
    auto it = r.monoids.find(v);
    if (it != r.monoids.end()) {
      for (const auto& m : it->second) os << " " << m;
    }
    os << "\n";
  }
  os << "  restriction closed: " << (r.restriction_closed ? "yes" : "no")
     << "; reverse inclusion: " << (r.reverse_inclusion ? "yes" : "no") << "\n";
  for (const auto& f : r.restriction_failures) os << "  restriction failure: " << f << "\n";
  for (const auto& f : r.reverse_failures) os << "  reverse inclusion failure: " << f << "\n";
}

}  // namespace

std::string to_json_line(const ReportRecord& r) {
  json j = {{"command", r.command}, {"args", r.args}, {"passed", r.passed},
            {"body", std::visit([](const auto& b) { return body_json(b); }, r.body)}};
  return j.dump();
}

ReportRecord from_json_line(std::string_view line) {
  try {
    json j = json::parse(line);
    ReportRecord r;
    r.command = j.at("command").get<std::string>();
    r.args = j.at("args").get<std::vector<std::string>>();
    r.passed = j.at("passed").get<bool>();
    r.body = body_from_json(j.at("body"));
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInvalidInput, std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const ReportRecord& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << call(r);
  std::visit([&](const auto& b) { text_body(os, b); }, r.body);
  return os.str();
}

std::string serialize_report(const ReportRecord& r, Format format) {
  return format == Format::kJson ? to_json_line(r) + "\n" : to_text(r);
}

}  // namespace catsheaf::dsl
