#include "piw/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "corpus_text.hpp"
#include "piw/errors.hpp"
#include "piw/perm_group.hpp"

namespace piw {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw InputError(source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

std::vector<GroupSpec> parse_corpus(std::string_view text, const std::string& source) {
  std::vector<GroupSpec> out;
  GroupSpec current;
  bool open = false;
  bool have_degree = false;
  bool in_gens = false;

  auto close = [&]() {
    if (!open) return;
    if (!have_degree) fail(source, current.line, "record has no `degree:` line");
    if (!in_gens && current.generators.empty()) fail(source, current.line, "record has no `gens:` line");
    if (current.name.empty()) current.name = source + ":" + std::to_string(current.line);
    out.push_back(std::move(current));
    current = GroupSpec{};
    open = have_degree = in_gens = false;
  };

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++lineno;
    if (line.empty()) {
      close();
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '#') continue;
    if (!open) {
      open = true;
      current.line = lineno;
    }
    if (line.front() == '(') {
      if (!in_gens) fail(source, lineno, "permutation outside a `gens:` block");
      try {
        Permutation::parse(line, current.degree);
      } catch (const InputError& e) {
        fail(source, lineno, e.what());
      }
      current.generators.emplace_back(line);
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(source, lineno, "expected `key: value`, got \"" + std::string(line) + "\"");
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));
    if (in_gens) fail(source, lineno, "key after `gens:` in the same record");
    if (key == "name") {
      if (value.empty()) fail(source, lineno, "empty name");
      current.name = std::string(value);
    } else if (key == "degree") {
      std::size_t d = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), d);
      if (ec != std::errc() || ptr != value.data() + value.size() || d == 0) {
        fail(source, lineno, "degree must be a positive integer");
      }
      current.degree = d;
      have_degree = true;
    } else if (key == "gens") {
      if (!have_degree) fail(source, lineno, "`gens:` before `degree:`");
      if (!value.empty()) fail(source, lineno, "generators go on the following lines");
      in_gens = true;
    } else {
      fail(source, lineno, "unknown key \"" + std::string(key) + "\"");
    }
  }
  close();
  return out;
}

std::vector<GroupSpec> load_corpus(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  } else if (fs::is_regular_file(path)) {
    files.push_back(path);
  } else {
    throw InputError("no such corpus file or directory: " + path.string());
  }
  std::vector<GroupSpec> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw InputError("cannot read " + f.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto specs = parse_corpus(buffer.str(), f.string());
    out.insert(out.end(), specs.begin(), specs.end());
  }
  return out;
}

std::string_view builtin_corpus_text() { return detail::kBuiltinCorpus; }

const std::vector<GroupSpec>& builtin_corpus() {
  static const std::vector<GroupSpec> corpus = parse_corpus(builtin_corpus_text(), "builtin");
  return corpus;
}

std::optional<GroupSpec> find_builtin(std::string_view name) {
  for (const auto& spec : builtin_corpus()) {
    if (spec.name == name) return spec;
  }
  return std::nullopt;
}

GroupPtr build_group(const GroupSpec& spec, const FiniteGroup::Options& options) {
  std::vector<Permutation> gens;
  for (const auto& g : spec.generators) gens.push_back(Permutation::parse(g, spec.degree));
  return make_finite_group(make_group(spec.degree, std::move(gens)), options);
}

}  // namespace piw
