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

// Report records. The machine form is one JSON object per line with keys
// in sorted order; the text form is a short human summary.

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "catsheaf/validation.hpp"
#include "catsheaf/yoneda.hpp"

namespace catsheaf::dsl {

enum class Format { kJson, kText };

/// Canonical names, e.g. enumerated functors or sieve signatures.
struct ListReport {
  std::vector<std::string> items;

  bool operator==(const ListReport&) const = default;
};

struct FunctorCategoryReport {
  std::vector<std::string> objects;
  std::vector<std::string> morphisms;

  bool operator==(const FunctorCategoryReport&) const = default;
};

struct DecompositionReport {
  bool valid_sieve = true;
  bool decomposed = true;
  bool round_trip = true;
  std::string error;
  std::vector<std::string> family;                            // subcategory signatures
  std::map<std::string, std::vector<std::string>> monoids;    // member -> nat signatures
  bool restriction_closed = true;
  bool reverse_inclusion = true;
  std::vector<std::string> restriction_failures;
  std::vector<std::string> reverse_failures;

  bool operator==(const DecompositionReport&) const = default;
};

using ReportBody = std::variant<ValidationReport, BijectionReport, ListReport,
                                FunctorCategoryReport, DecompositionReport>;

struct ReportRecord {
  std::string command;
  std::vector<std::string> args;
  bool passed = true;
  ReportBody body;

  bool operator==(const ReportRecord&) const = default;
};

std::string to_json_line(const ReportRecord& r);

/// Inverse of to_json_line(). Throws Error(kInvalidInput) on malformed input.
ReportRecord from_json_line(std::string_view line);

std::string to_text(const ReportRecord& r);

/// One line for kJson, one or more for kText; always newline-terminated.
std::string serialize_report(const ReportRecord& r, Format format);

}  // namespace catsheaf::dsl
