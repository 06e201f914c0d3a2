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

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catsheaf/error.hpp"
#include "catsheaf/validation.hpp"

namespace catsheaf {

// Dense indices into a category's sorted object and morphism lists.
using Obj = int;
using Mor = int;
inline constexpr int kNone = -1;

struct MorphismDecl {
  std::string name;
  std::string source;
  std::string target;
};

/// `second . first = result`, i.e. result = second after first.
struct CompositionEntry {
  std::string second;
  std::string first;
  std::string result;
};

/// A finite category given by explicit tables.
///
/// Objects and morphisms are stored sorted by name, so two categories with
/// the same data compare equal regardless of how they were built. The
/// composition table may have holes or wrong entries: construction only
/// checks that every name resolves, and validate_category() decides whether
/// the data is actually a category.
class FiniteCategory {
 public:
  FiniteCategory() = default;

  /// Throws Error(kDuplicateName / kUnknownId) on malformed references.
  static FiniteCategory from_tables(std::vector<std::string> objects,
                                    std::vector<MorphismDecl> morphisms,
                                    const std::map<std::string, std::string>& identities,
                                    const std::vector<CompositionEntry>& composition);

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t morphism_count() const noexcept { return morphisms_.size(); }
  bool empty() const noexcept { return objects_.empty() && morphisms_.empty(); }

  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<std::string>& morphisms() const noexcept { return morphisms_; }
  const std::string& object_name(Obj a) const { return objects_.at(a); }
  const std::string& morphism_name(Mor f) const { return morphisms_.at(f); }

  std::optional<Obj> find_object(std::string_view name) const;
  std::optional<Mor> find_morphism(std::string_view name) const;
  Obj object(std::string_view name) const;      // throws kUnknownId
  Mor morphism(std::string_view name) const;    // throws kUnknownId

  Obj source(Mor f) const { return source_.at(f); }
  Obj target(Mor f) const { return target_.at(f); }
  /// kNone when the identity slot was left unset.
  Mor identity(Obj a) const { return identity_.at(a); }
  bool is_identity(Mor f) const;

  /// Table entry for g after f, or kNone when the pair is not composable or
  /// the entry is missing.
  Mor composite(Mor g, Mor f) const {
    return composition_[static_cast<std::size_t>(g) * morphisms_.size() + f];
  }

  /// Checked composition: throws on unknown ids or non-composable pairs.
  Mor compose(Mor g, Mor f) const;
  std::string compose(std::string_view g, std::string_view f) const;

  /// Morphisms a -> b in index order.
  std::vector<Mor> hom(Obj a, Obj b) const;

  bool operator==(const FiniteCategory&) const = default;

 private:
  friend class CategoryEditor;

  std::vector<std::string> objects_;
  std::vector<std::string> morphisms_;
  std::vector<Obj> source_;
  std::vector<Obj> target_;
  std::vector<Mor> identity_;
  std::vector<Mor> composition_;  // row-major [g][f]
};

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

inline CategoryPtr share(FiniteCategory c) {
  return std::make_shared<const FiniteCategory>(std::move(c));
}

/// Raw table access for mutation tests and for builders that need to
/// produce deliberately broken data.
class CategoryEditor {
 public:
  explicit CategoryEditor(FiniteCategory cat) : cat_(std::move(cat)) {}

  void set_composite(Mor g, Mor f, Mor result);
  void set_identity(Obj a, Mor f);
  void set_source(Mor f, Obj a);
  void set_target(Mor f, Obj a);

  FiniteCategory release() && { return std::move(cat_); }
  const FiniteCategory& get() const { return cat_; }

 private:
  FiniteCategory cat_;
};

/// Assembles a category from its non-identity data. build() inserts an
/// identity `id_<object>` for every object, fills every composite with an
/// identity, and fills composites forced by a one-element hom-set.
class CategoryBuilder {
 public:
  CategoryBuilder& object(std::string name);
  CategoryBuilder& morphism(std::string name, std::string source, std::string target);
  CategoryBuilder& compose(std::string second, std::string first, std::string result);

  /// Throws Error(kInvalidInput) when a composable pair has no entry and no
  /// forced value. If `missing` is given, holes are reported there instead
  /// and left unset in the result.
  FiniteCategory build(std::vector<std::pair<std::string, std::string>>* missing = nullptr) const;

 private:
  std::vector<std::string> objects_;
  std::vector<MorphismDecl> morphisms_;
  std::vector<CompositionEntry> composition_;
};

std::string identity_name(std::string_view object);

ValidationReport validate_category(const FiniteCategory& cat);

FiniteCategory opposite(const FiniteCategory& cat);

/// One identity `id_<name>` per object, nothing else.
FiniteCategory trivially_discrete(const std::vector<std::string>& names);

/// The full restriction of `sup` to the given object and morphism subsets.
/// Composition entries whose result falls outside `mors` are left unset, so
/// the result is a category exactly when the subsets are closed.
FiniteCategory restrict(const FiniteCategory& sup, std::span<const Obj> objs,
                        std::span<const Mor> mors);

bool is_subcategory(const FiniteCategory& sub, const FiniteCategory& sup);

/// A subcategory described by index sets of its parent.
struct SubcategoryIndex {
  std::vector<Obj> objects;   // sorted
  std::vector<Mor> morphisms; // sorted

  auto operator<=>(const SubcategoryIndex&) const = default;
};

/// Every subcategory (identity- and composition-closed, not necessarily
/// full or wide), ordered by object set then morphism set. `cap` bounds the
/// number of candidate subsets examined.
std::vector<SubcategoryIndex> enumerate_subcategory_indices(const FiniteCategory& sup,
                                                            std::size_t cap);
std::vector<FiniteCategory> enumerate_subcategories(const FiniteCategory& sup,
                                                    std::size_t cap);

/// Stable name for a subcategory of a named base: `{a,b|id_a,id_b,f}`.
std::string subcategory_signature(const FiniteCategory& sub);

}  // namespace catsheaf
