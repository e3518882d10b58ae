// piwcheck: runs the pi-partial character checks over a corpus of permutation groups.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "piw/char_table.hpp"
#include "piw/corpus.hpp"
#include "piw/errors.hpp"
#include "piw/verify.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

std::vector<piw::GroupSpec> resolve_group(const std::string& arg) {
  if (std::filesystem::exists(arg)) return piw::load_corpus(arg);
  if (auto spec = piw::find_builtin(arg)) return {*spec};
  throw piw::InputError("--group: \"" + arg + "\" is neither a file nor a built-in group (see --list)");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw piw::InputError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify counting results for pi-partial characters over a corpus of permutation groups."};
  app.set_version_flag("--version", std::string(piw::kToolVersion));

  std::string pi_text = "each";
  std::string group_arg;
  std::string corpus_arg;
  std::string checks_text = "all";
  std::string report_path;
  std::string table_path;
  bool list = false;
  bool quiet = false;
  piw::VerifyOptions options;

  app.add_option("--pi", pi_text, "Comma-separated primes, `all`, `none` or `each` (every subset of the primes dividing |G|)")
      ->capture_default_str();
  auto* group_opt = app.add_option("--group", group_arg, "Group file, or the name of a built-in group");
  app.add_option("--corpus", corpus_arg, "Corpus file or directory (default: the built-in corpus)")
      ->excludes(group_opt);
  app.add_option("--checks", checks_text, "Subset of thmA,thmB,corC,awc,lemmas,basic,relative, or `all`")
      ->capture_default_str();
  app.add_option("--limit-order", options.limit_order, "Skip groups of larger order")->capture_default_str();
  app.add_option("--subgroup-limit", options.subgroup_limit, "Maximum number of subgroup classes per subgroup lattice")
      ->capture_default_str();
  app.add_option("--report", report_path, "Write the JSON report here instead of stdout");
  app.add_option("--seed", options.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--jobs", options.jobs, "Worker threads (0: hardware concurrency)")->capture_default_str();
  app.add_option("--export-table", table_path, "Write the character table of the single selected group as JSON");
  app.add_flag("--list", list, "List the built-in groups and exit");
  app.add_flag("-q,--quiet", quiet, "No summary on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  if (list) {
    for (const auto& spec : piw::builtin_corpus()) std::cout << spec.name << "\n";
    return 0;
  }

  try {
    const piw::PiSelection pi = piw::PiSelection::parse(pi_text);
    options.checks = piw::CheckSelection::parse(checks_text);
    if (options.jobs == 0) options.jobs = std::max(1U, std::thread::hardware_concurrency());

    std::vector<piw::GroupSpec> corpus;
    if (!group_arg.empty()) {
      corpus = resolve_group(group_arg);
    } else if (!corpus_arg.empty()) {
      corpus = piw::load_corpus(corpus_arg);
    } else {
      corpus = piw::builtin_corpus();
    }
    if (corpus.empty()) throw piw::InputError("the corpus is empty");

    if (!table_path.empty()) {
      if (corpus.size() != 1) throw piw::InputError("--export-table needs exactly one group");
      piw::FiniteGroup::Options fg;
      fg.max_order = options.limit_order;
      fg.seed = options.seed;
      write_text(table_path, piw::character_table(piw::build_group(corpus.front(), fg)).to_json() + "\n");
    }

    piw::Tally tally;
    const nlohmann::json report = piw::verify_corpus(corpus, pi, options, tally);
    const std::string text = report.dump(2) + "\n";
    if (report_path.empty()) {
      std::cout << text;
    } else {
      write_text(report_path, text);
    }
    if (!quiet) {
      std::cerr << "piwcheck: " << tally.run << " checks run, " << tally.passed << " passed, " << tally.failed
                << " failed, " << tally.skipped << " skipped";
      for (const auto& [reason, n] : tally.skip_reasons) std::cerr << " [" << reason << ": " << n << "]";
      std::cerr << "\n";
    }
    return tally.exit_code();
  } catch (const piw::InputError& e) {
    std::cerr << "piwcheck: input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const piw::ResourceError& e) {
    std::cerr << "piwcheck: resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "piwcheck: " << e.what() << "\n";
    return 1;
  }
}
