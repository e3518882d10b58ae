#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "piw/finite_group.hpp"

namespace piw {

/// One record of a group file.
struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> generators;  // cycle notation, 1-based
  std::size_t line = 0;                 // first line of the record
};

/// Parses the text format:
///   name: S3        (optional)
///   degree: 3
///   gens:
///   (1,2)
///   (1,2,3)
/// Records are separated by blank lines and `#` starts a comment line.
/// Throws InputError naming the source and line.
std::vector<GroupSpec> parse_corpus(std::string_view text, const std::string& source = "<input>");

/// Reads a file, or every regular file of a directory in name order.
std::vector<GroupSpec> load_corpus(const std::filesystem::path& path);

/// The shipped corpus (same text as data/corpus.txt).
std::string_view builtin_corpus_text();
const std::vector<GroupSpec>& builtin_corpus();
std::optional<GroupSpec> find_builtin(std::string_view name);

/// Throws InputError for a malformed generator.
GroupPtr build_group(const GroupSpec& spec, const FiniteGroup::Options& options = {});

}  // namespace piw
