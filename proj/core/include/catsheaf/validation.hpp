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

#pragma once

#include <string>
#include <vector>

namespace catsheaf {

struct Violation {
  std::string law;
  std::vector<std::string> ids;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const noexcept { return violations.empty(); }

  void add(std::string law, std::vector<std::string> ids, std::string detail) {
    violations.push_back({std::move(law), std::move(ids), std::move(detail)});
  }

  // Prefixes every merged law name with `scope` when non-empty.
  void merge(const ValidationReport& other, const std::string& scope = {});

  bool has_law(const std::string& law) const;

  bool operator==(const ValidationReport&) const = default;
};

}  // namespace catsheaf
