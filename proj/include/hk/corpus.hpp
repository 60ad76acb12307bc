#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hk/group.hpp"
#include "hk/json_io.hpp"

namespace hk {

struct CorpusEntry {
  std::string name;
  std::filesystem::path file;
  GroupPtr group;
};

struct CorpusSearch {
  std::string group;
  long long bound = 0;
};

struct CorpusSpec {
  std::vector<CorpusEntry> entries;
  std::vector<CorpusSearch> searches;
  std::size_t max_order = 120;
  std::size_t subgroup_cap = 60;
  std::size_t frobenius_max_order = 24;  // reciprocity and Mackey sweeps
  std::size_t uvdw_max_order = 24;       // UVdW decompositions and certificates
  std::size_t sct_max_classes = 8;

  const CorpusEntry& entry(const std::string& name) const;
};

/// Reads a manifest {"groups": [{"name", "file"}], "caps": {...}, "searches": [{"group", "bound"}]}.
/// Group files are resolved relative to the manifest. SchemaError on malformed input.
CorpusSpec load_corpus(const std::filesystem::path& manifest);

/// Runs every per-group check and the listed Heilbronn searches. The result
/// holds no timings or paths, so equal inputs give byte-identical dumps.
/// "violations" counts failed theorem-level checks.
Json run_corpus(const CorpusSpec& spec, unsigned jobs = 1);

}  // namespace hk
