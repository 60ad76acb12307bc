#pragma once

#include <filesystem>
#include <memory>
#include <vector>

#include "hk/classfun.hpp"
#include "hk/error.hpp"
#include "hk/json_io.hpp"

namespace hk {

/// The irreducible characters of a group. Rows are ordered with the trivial
/// character first, then by degree, then by value vectors (descending under
/// Cyclotomic::compare). Instances are always verified on construction.
class CharacterTable {
 public:
  /// Canonically sorts the rows and verifies every table invariant,
  /// throwing `failure` (and nothing else) when a check does not hold.
  CharacterTable(GroupPtr group, std::vector<std::vector<Cyclotomic>> rows,
                 ErrorCode failure = ErrorCode::InternalVerificationFailed);

  const GroupPtr& group() const { return group_; }
  int exponent() const { return group_->exponent(); }
  std::size_t size() const { return irreducibles_.size(); }
  const std::vector<ClassFunction>& irreducibles() const { return irreducibles_; }
  const ClassFunction& operator[](std::size_t i) const { return irreducibles_[i]; }
  const std::vector<long>& degrees() const { return degrees_; }
  std::vector<std::size_t> linear_indices() const;
  ClassFunction regular() const;
  /// Index of the row equal to chi, if chi is irreducible.
  std::optional<std::size_t> index_of(const ClassFunction& chi) const;

 private:
  GroupPtr group_;
  std::vector<ClassFunction> irreducibles_;
  std::vector<long> degrees_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

/// Computes (or fetches from the in-process cache) the table of G.
/// Abelian groups use the dual group; everything else uses Dixon's method.
TablePtr character_table(const GroupPtr& G);
/// Always recomputes, bypassing the cache.
CharacterTable compute_character_table(const GroupPtr& G);
/// Dixon's method even for abelian groups.
CharacterTable compute_character_table_dixon(const GroupPtr& G);
void clear_table_cache();
/// Installs a table computed elsewhere (e.g. read from disk) as the cached
/// table of G, rebinding it to G. Throws GroupMismatch.
TablePtr seed_table_cache(const GroupPtr& G, const CharacterTable& table);

/// Checks orthogonality, degree sum and degree divisibility; throws `failure`.
void verify_table(const GroupPtr& G, const std::vector<std::vector<Cyclotomic>>& rows, ErrorCode failure);

/// {"group", "exponent", "classes": [{"rep", "size"}], "irreducibles": [[cyclotomic]]}.
Json table_to_json(const CharacterTable& table);
CharacterTable table_from_json(const Json& j);
void save_table(const CharacterTable& table, const std::filesystem::path& path);
/// Reads a table file and re-verifies it (VerificationFailed on bad data,
/// SchemaError on malformed files).
CharacterTable load_table(const std::filesystem::path& path);

}  // namespace hk
