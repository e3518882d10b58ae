#include "piw/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <optional>
#include <thread>

#include "piw/errors.hpp"
#include "piw/glauberman.hpp"
#include "piw/numtheory.hpp"
#include "piw/perm_group.hpp"
#include "piw/pi_structure.hpp"
#include "piw/vertex_weights.hpp"

namespace piw {

using nlohmann::json;

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    out.push_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

json suite_json(const SuiteResult& s) {
  return json{{"instances", s.instances}, {"violations", s.violations}, {"messages", s.messages}};
}

}  // namespace

CheckSelection CheckSelection::parse(std::string_view text) {
  if (text == "all") return CheckSelection{};
  CheckSelection c{false, false, false, false, false, false, false};
  for (auto name : split(text, ',')) {
    if (name == "thmA") c.thm_a = true;
    else if (name == "thmB") c.thm_b = true;
    else if (name == "corC") c.cor_c = true;
    else if (name == "awc") c.awc = true;
    else if (name == "lemmas") c.lemmas = true;
    else if (name == "basic") c.basic = true;
    else if (name == "relative") c.relative = true;
    else throw InputError("unknown check \"" + std::string(name) + "\" (expected thmA,thmB,corC,awc,lemmas,basic,relative)");
  }
  return c;
}

PiSelection PiSelection::parse(std::string_view text) {
  PiSelection s;
  s.text = std::string(text);
  if (text == "each") return s;
  if (text == "all") {
    s.kind = Kind::All;
    s.pi = PiConfig::all();
    return s;
  }
  s.kind = Kind::List;
  if (text == "none") return s;
  std::set<std::uint64_t> primes;
  for (auto item : split(text, ',')) {
    std::uint64_t p = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), p);
    if (ec != std::errc() || ptr != item.data() + item.size() || !is_prime(p)) {
      throw InputError("--pi: \"" + std::string(item) + "\" is not a prime (use primes, all, each or none)");
    }
    primes.insert(p);
  }
  s.pi = PiConfig::of(std::move(primes));
  return s;
}

std::vector<PiConfig> enumerate_pi_choices(std::uint64_t group_order) {
  const auto primes = prime_divisors(group_order);
  std::vector<std::set<std::uint64_t>> subsets;
  for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
    std::set<std::uint64_t> s;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask >> i & 1U) s.insert(primes[i]);
    }
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<PiConfig> out;
  for (auto& s : subsets) out.push_back(PiConfig::of(std::move(s)));
  return out;
}

void Tally::merge(const Tally& other) {
  run += other.run;
  passed += other.passed;
  failed += other.failed;
  skipped += other.skipped;
  for (const auto& [k, v] : other.skip_reasons) skip_reasons[k] += v;
  resource_limited = resource_limited || other.resource_limited;
}

int Tally::exit_code() const {
  if (failed > 0) return 1;
  if (resource_limited) return 3;
  return 0;
}

json verify_group_pi(const GroupSpec& spec, const PiConfig& pi, const VerifyOptions& options, Tally& tally) {
  json r;
  r["group"] = spec.name;
  r["pi"] = pi.to_string();
  json& status = r["checks"];

  const std::vector<std::pair<std::string, bool>> selected = {
      {"basis", true},
      {"thmA", options.checks.thm_a},
      {"thmB", options.checks.thm_b},
      {"corC", options.checks.cor_c},
      {"awc", options.checks.awc},
      {"lemmas", options.checks.lemmas},
      {"basic", options.checks.basic},
      {"relative", options.checks.relative},
  };
  auto skip_all = [&](const std::string& reason) {
    r["skipped"] = reason;
    for (const auto& [name, on] : selected) {
      if (!on) continue;
      status[name] = "skip:" + reason;
      ++tally.skipped;
      ++tally.skip_reasons[reason];
    }
    return r;
  };

  std::vector<Permutation> gens;
  for (const auto& g : spec.generators) gens.push_back(Permutation::parse(g, spec.degree));
  PermutationGroup perm = make_group(spec.degree, std::move(gens));
  r["order"] = perm.order();
  if (perm.order() > options.limit_order) return skip_all("order_limit");
  FiniteGroup::Options fg_options;
  fg_options.max_order = std::max<std::uint64_t>(options.limit_order, 1);
  fg_options.seed = options.seed;
  GroupPtr group = make_finite_group(std::move(perm), fg_options);
  if (!is_pi_separable(*group, pi)) return skip_all("not_pi_separable");

  Workspace ws(group, Workspace::Options{options.subgroup_limit, 0, options.seed});
  const Node& g = ws.root_node();

  auto run = [&](const std::string& name, const std::function<bool()>& body) {
    ++tally.run;
    std::string verdict;
    try {
      verdict = body() ? "pass" : "fail";
    } catch (const ResourceError& e) {
      --tally.run;
      ++tally.skipped;
      ++tally.skip_reasons["resource_limit"];
      tally.resource_limited = true;
      r["errors"][name] = e.what();
      status[name] = "skip:resource_limit";
      return;
    } catch (const Unsupported& e) {
      --tally.run;
      ++tally.skipped;
      ++tally.skip_reasons["unsupported"];
      r["errors"][name] = e.what();
      status[name] = "skip:unsupported";
      return;
    } catch (const std::exception& e) {
      verdict = "fail";
      r["errors"][name] = e.what();
    }
    status[name] = verdict;
    if (verdict == "pass") {
      ++tally.passed;
    } else {
      ++tally.failed;
    }
  };

  run("basis", [&] {
    const PartialBasis& basis = g.basis(pi);
    r["pi_classes"] = g.pi_classes(pi)->size();
    r["I_count"] = basis.size();
    json members = json::array();
    for (const auto& phi : basis.members()) members.push_back({{"degree", phi.degree()}, {"lifts", phi.lifts()}});
    r["I"] = members;
    return basis.size() == g.pi_classes(pi)->size();
  });

  std::optional<std::vector<QRow>> rows;
  auto get_rows = [&]() -> const std::vector<QRow>& {
    if (!rows) {
      rows = theorem_rows(ws, pi);
      json per_q = json::array();
      for (const auto& row : *rows) {
        per_q.push_back({{"Q_order", row.q_order},
                         {"N_order", row.n_order},
                         {"I_G_Q", row.i_g_q},
                         {"I_N_Q", row.i_n_q},
                         {"weights", row.weights},
                         {"weights_bijective", row.weights_bijective},
                         {"thmA_ok", row.thm_a_ok},
                         {"thmB_hyp", row.thm_b_hyp},
                         {"thmB_ok", row.thm_b_ok}});
      }
      r["per_Q"] = per_q;
    }
    return *rows;
  };

  if (options.checks.thm_a) {
    run("thmA", [&] {
      const auto& rs = get_rows();
      return std::all_of(rs.begin(), rs.end(), [](const QRow& q) { return q.thm_a_ok; });
    });
  }
  if (options.checks.thm_b) {
    run("thmB", [&] {
      const auto& rs = get_rows();
      return std::all_of(rs.begin(), rs.end(), [](const QRow& q) { return q.thm_b_ok; });
    });
  }
  if (options.checks.cor_c) {
    run("corC", [&] {
      const CorollaryCResult c = corollary_C_check(ws, pi);
      r["corollaryC"] = {{"Q_order", c.q_order},     {"I_G_Q", c.i_g_q},
                         {"I_N_Q", c.i_n_q},         {"X_pi", c.x_pi},
                         {"Irr_N_mod_Q", c.irr_n_mod_q}, {"restriction_bijective", c.restriction_bijective},
                         {"ok", c.ok()}};
      return c.ok();
    });
  }
  if (options.checks.awc) {
    run("awc", [&] {
      const AwcResult a = awc_pi_check(ws, pi, get_rows());
      r["awc"] = {{"weight_classes", a.weight_classes},
                  {"pi_classes", a.pi_classes},
                  {"hall_nilpotent", a.hall_nilpotent},
                  {"asserted", a.hall_nilpotent},
                  {"ok", a.ok()}};
      return a.ok();
    });
  }
  if (options.checks.lemmas) {
    run("lemmas", [&] {
      std::vector<SuiteResult> suites;
      SuiteResult weights("weights_bijection");
      for (const auto& row : get_rows()) {
        ++weights.instances;
        if (!row.weights_bijective) weights.fail("weights of Q of order " + std::to_string(row.q_order));
      }
      suites.push_back(weights);
      suites.push_back(vertex_suite(ws, pi));
      suites.push_back(quotient_suite(ws, pi));
      suites.push_back(clifford_suite(ws, pi));
      suites.push_back(orbit_suite(ws, pi));
      suites.push_back(sum_formula_suite(ws, pi));
      suites.push_back(normalizer_vertex_suite(ws, pi));
      suites.push_back(pi_prime_quotient_suite(ws, pi));
      json out;
      bool ok = true;
      for (const auto& s : suites) {
        out[s.name] = suite_json(s);
        ok = ok && s.ok();
      }
      r["lemmas"] = out;
      return ok;
    });
  }
  if (options.checks.basic) {
    run("basic", [&] {
      std::size_t instances = 0, basic_rows = 0, unsupported = 0;
      json failures = json::array();
      for (const auto& [k, q] : coprime_instances(ws, pi)) {
        try {
          const CoprimeAction act = make_coprime_action(ws, k, q);
          const GlaubermanCheck c = check_glauberman(ws, act, options.seed);
          ++instances;
          if (!c.ok()) {
            failures.push_back({{"K_order", k.count()}, {"Q_order", q.count()}, {"detail", c.detail}});
          }
          for (auto tau : glauberman_map(ws, act).invariant) {
            const BasicRow row = basic_theorem_check(ws, pi, k, q, tau);
            ++basic_rows;
            if (!row.ok()) {
              failures.push_back({{"K_order", k.count()},
                                  {"Q_order", q.count()},
                                  {"tau", tau},
                                  {"left", row.left},
                                  {"right", row.right}});
            }
          }
        } catch (const Unsupported&) {
          ++unsupported;
        }
      }
      r["basic"] = {{"actions", instances}, {"rows", basic_rows}, {"unsupported_actions", unsupported},
                    {"failures", failures}};
      return failures.empty();
    });
  }
  if (options.checks.relative) {
    run("relative", [&] {
      json out = json::array();
      bool ok = true;
      for (const auto& row : relative_suite(ws, pi)) {
        out.push_back({{"Z_order", row.z_order},
                       {"lambda", row.lambda},
                       {"Q_order", row.q_order},
                       {"N_order", row.n_order},
                       {"left", row.left},
                       {"right", row.right},
                       {"hyp_b", row.hyp_b},
                       {"ok", row.ok_a && row.ok_b}});
        ok = ok && row.ok_a && row.ok_b;
      }
      r["relative"] = out;
      return ok;
    });
  }
  return r;
}

json verify_corpus(const std::vector<GroupSpec>& corpus, const PiSelection& selection, const VerifyOptions& options,
                   Tally& tally) {
  std::vector<std::pair<const GroupSpec*, PiConfig>> tasks;
  for (const auto& spec : corpus) {
    if (selection.kind != PiSelection::Kind::Each) {
      tasks.emplace_back(&spec, selection.pi);
      continue;
    }
    std::vector<Permutation> gens;
    for (const auto& g : spec.generators) gens.push_back(Permutation::parse(g, spec.degree));
    const std::uint64_t order = make_group(spec.degree, std::move(gens)).order();
    for (auto& pi : enumerate_pi_choices(order)) tasks.emplace_back(&spec, std::move(pi));
  }

  std::vector<json> results(tasks.size());
  std::vector<Tally> tallies(tasks.size());
  std::vector<std::string> input_errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = verify_group_pi(*tasks[i].first, tasks[i].second, options, tallies[i]);
      } catch (const InputError& e) {
        input_errors[i] = e.what();
      }
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(tasks.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : input_errors) {
    if (!e.empty()) throw InputError(e);
  }

  json report;
  report["schema"] = kReportSchema;
  report["tool"] = "piwcheck";
  report["version"] = kToolVersion;
  json checks = json::array();
  for (const auto& [name, on] : std::vector<std::pair<const char*, bool>>{{"thmA", options.checks.thm_a},
                                                                          {"thmB", options.checks.thm_b},
                                                                          {"corC", options.checks.cor_c},
                                                                          {"awc", options.checks.awc},
                                                                          {"lemmas", options.checks.lemmas},
                                                                          {"basic", options.checks.basic},
                                                                          {"relative", options.checks.relative}}) {
    if (on) checks.push_back(name);
  }
  report["options"] = {{"pi", selection.kind == PiSelection::Kind::Each ? std::string("each") : selection.pi.to_string()},
                       {"checks", checks},
                       {"limit_order", options.limit_order},
                       {"seed", options.seed}};
  report["results"] = json::array();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    report["results"].push_back(std::move(results[i]));
    tally.merge(tallies[i]);
  }
  report["summary"] = {{"checks_run", tally.run},
                       {"passed", tally.passed},
                       {"failed", tally.failed},
                       {"skipped", tally.skipped},
                       {"skip_reasons", tally.skip_reasons}};
  return report;
}

}  // namespace piw
