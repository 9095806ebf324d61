// Command-line front end: generate, analyze, verify and sweep.
//
// Exit codes: 0 success, 1 a verification or theorem check failed,
// 2 invalid parameters, 3 a size cap was exceeded, 4 malformed sequence file.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "cycloseq/analysis.hpp"
#include "cycloseq/errors.hpp"
#include "cycloseq/extfield.hpp"
#include "cycloseq/report.hpp"

namespace {

using namespace cycloseq;

constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCap = 3;
constexpr int kExitMalformed = 4;

constexpr Int kCliPeriodCap = 1'000'000;
constexpr Int kVerifyMaxN = 5000;

struct RunConfig {
  Int p = 3;
  Int q = 5;
  int m = 1;
  int n = 1;
  std::string map;
  std::string out = "-";
  std::string file;
  std::string format = "json";
  std::string pairs = "3:5,3:7,5:7,3:11";
  std::string exps = "1:1,2:1,1:2";
  std::string mappings = "default";
  Int cap = 0;
  bool degenerate = false;
  bool refined = false;
  unsigned jobs = 1;
};

Int effective_cap(const RunConfig& cfg) {
  if (cfg.cap > 0) return cfg.cap;
  if (const char* env = std::getenv("CYCLOSEQ_CAP")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<Int>(v);
    } catch (const std::exception&) {
    }
    throw InvalidParams(std::string("CYCLOSEQ_CAP is not a positive integer: ") + env);
  }
  return kCliPeriodCap;
}

Mapping mapping_of(const RunConfig& cfg) {
  return cfg.map.empty() ? Mapping::default_mapping() : Mapping::parse(cfg.map);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out == "-" || cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(cfg.out);
  if (!os) throw InvalidParams("cannot open " + cfg.out + " for writing");
  os << text;
}

std::string render_flat(const Json& row_set, const std::string& format) {
  // row_set: array of flat objects. CSV uses the keys of the first row.
  std::ostringstream os;
  if (row_set.empty()) return format == "csv" ? "\n" : "";
  std::vector<std::string> keys;
  for (auto it = row_set.front().begin(); it != row_set.front().end(); ++it) keys.push_back(it.key());
  auto cell = [](const Json& v) {
    if (v.is_null()) return std::string();
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  if (format == "csv") {
    for (std::size_t k = 0; k < keys.size(); ++k) os << (k ? "," : "") << keys[k];
    os << "\n";
    for (const auto& row : row_set) {
      for (std::size_t k = 0; k < keys.size(); ++k) {
        const std::string c = row.contains(keys[k]) ? cell(row[keys[k]]) : "";
        os << (k ? "," : "") << (c.find(',') != std::string::npos ? "\"" + c + "\"" : c);
      }
      os << "\n";
    }
  } else {
    for (const auto& row : row_set) {
      for (std::size_t k = 0; k < keys.size(); ++k) {
        os << (k ? "  " : "") << keys[k] << "=" << (row.contains(keys[k]) ? cell(row[keys[k]]) : "");
      }
      os << "\n";
    }
  }
  return os.str();
}

std::string render(const Json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  if (doc.is_array()) return render_flat(doc, format);
  Json flat = Json::object();
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!it.value().is_structured()) flat[it.key()] = it.value();
  }
  return render_flat(Json::array({flat}), format);
}

int cmd_generate(const RunConfig& cfg) {
  const CyclotomicSystem system(build_system_constants(cfg.p, cfg.q, cfg.m, cfg.n, effective_cap(cfg)));
  const auto seq = build_sequence(system, mapping_of(cfg), cfg.degenerate);
  emit(cfg, sequence_file_contents(seq));
  if (cfg.out != "-" && !cfg.out.empty()) {
    std::ofstream side(cfg.out + ".json");
    if (!side) throw InvalidParams("cannot write metadata sidecar");
    side << sequence_metadata(seq).dump(2) << "\n";
  }
  return 0;
}

std::vector<GF4> read_sequence_file(const std::string& path, Int cap) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw MalformedSequence("cannot read " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  auto symbols = parse_sequence_file(buf.str());
  const auto period = static_cast<Int>(symbols.size());
  if (period % 4 != 2) {
    throw MalformedSequence("sequence length " + std::to_string(period) +
                            " is not twice an odd number");
  }
  if (period > cap) throw CapExceeded("sequence length exceeds cap " + std::to_string(cap));
  return symbols;
}

int cmd_analyze(const RunConfig& cfg) {
  Json doc;
  if (!cfg.file.empty()) {
    const auto symbols = read_sequence_file(cfg.file, effective_cap(cfg));
    doc = to_json(analyze_symbols(symbols));
    doc["source"] = cfg.file;
  } else {
    const CyclotomicSystem system(
        build_system_constants(cfg.p, cfg.q, cfg.m, cfg.n, effective_cap(cfg)));
    const Mapping mapping = mapping_of(cfg);
    if (cfg.degenerate && !validate_mapping(cfg.p, mapping).empty()) {
      doc = to_json(analyze_degenerate(system, mapping));
    } else {
      doc = to_json(verify_theorem(system, mapping));
    }
    doc["mapping"] = mapping.to_string();
    doc["constants"] = constants_json(system.constants());
  }
  emit(cfg, render(doc, cfg.format));
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const Int cap = effective_cap(cfg);
  const auto constants = build_system_constants(cfg.p, cfg.q, cfg.m, cfg.n, cap);
  if (constants.half_period() > kVerifyMaxN) {
    throw CapExceeded("extension-field verification is limited to p^m q^n <= " +
                      std::to_string(kVerifyMaxN));
  }
  const CyclotomicSystem system(constants);  // throws PartitionViolation
  const Mapping mapping = mapping_of(cfg);
  const auto ctx = build_extension(constants);

  Json doc;
  doc["constants"] = constants_json(constants);
  doc["mapping"] = mapping.to_string();
  doc["partition"] = {{"ok", true}, {"period", system.period()}};

  std::vector<std::string> failures;
  const auto structural = check_structural_lemmas(system);
  doc["structural_lemmas"] = to_json(structural);
  if (!structural.ok()) {
    const auto& v = structural.violations.front();
    failures.push_back("structural lemma '" + v.lemma + "' fails at " + v.where +
                       " (witness " + std::to_string(v.witness) + ")");
  }

  // Side of 2 against the mod-8 rule for p, q (every prime power) and pq.
  Json residues = Json::array();
  auto expect_side = [](Int prime) { return (prime % 8 == 1 || prime % 8 == 7) ? 0 : 1; };
  auto residue_row = [&](const std::string& modulus, int got, int want) {
    residues.push_back({{"modulus", modulus}, {"side", got}, {"expected", want}});
    if (got != want) failures.push_back("2 lies in D_" + std::to_string(got) + " of " + modulus);
  };
  for (int i = 1; i <= cfg.m; ++i) {
    residue_row("p^" + std::to_string(i), residue_side_of_2(system, Shape::P, i, 0), expect_side(cfg.p));
  }
  for (int j = 1; j <= cfg.n; ++j) {
    residue_row("q^" + std::to_string(j), residue_side_of_2(system, Shape::Q, 0, j), expect_side(cfg.q));
  }
  residue_row("pq", residue_side_of_2(system, Shape::PQ, 1, 1), expect_side(cfg.q));
  doc["residue_lemmas"] = std::move(residues);

  const auto sums = verify_lemma_6_7(system, ctx);
  doc["char_sum_lemmas"] = to_json(sums);
  if (!sums.ok()) {
    const auto& v = sums.violations.front();
    failures.push_back("character sum " + v.cell + " expected " + std::to_string(v.expected) +
                       " got " + std::to_string(v.actual));
  }

  const auto cases = verify_case_table(system, ctx, mapping);
  doc["case_table"] = to_json(cases);
  if (cases.values.front() != mapping.e) failures.push_back("S(1) differs from e");
  if (cfg.refined) {
    if (!cases.refined_table_holds()) {
      failures.push_back("S(beta^k) differs from the refined prediction at k=" +
                         std::to_string(cases.refined_mismatches.front()));
    }
  } else if (!cases.case_table_holds()) {
    std::string why = "case (" + std::to_string(cases.case_number) + ") constant " +
                      std::string(1, cases.case_constant.digit());
    if (!cases.case_mismatches.empty()) {
      const Int k = cases.case_mismatches.front();
      why += " differs from S(beta^" + std::to_string(k) + ") = " +
             std::string(1, cases.values[static_cast<std::size_t>(k)].digit());
    } else {
      why += " checked against values outside GF(4) at k=" +
             std::to_string(cases.outside_base_field.front());
    }
    failures.push_back(why);
  }

  doc["ok"] = failures.empty();
  doc["failures"] = failures;
  emit(cfg, render(doc, cfg.format));
  if (!failures.empty()) {
    std::cerr << "verification failed: " << failures.front() << "\n";
    return kExitFailed;
  }
  return 0;
}

std::vector<std::pair<Int, Int>> parse_pairs(const std::string& text) {
  std::vector<std::pair<Int, Int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InvalidParams("grid entries look like 3:5, got " + item);
    try {
      out.emplace_back(std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw InvalidParams("bad grid entry " + item);
    }
  }
  return out;
}

std::vector<Mapping> sweep_mappings(const RunConfig& cfg, Int p) {
  if (!cfg.map.empty()) return {Mapping::parse(cfg.map)};
  std::vector<Mapping> out;
  for (const Mapping& mp : all_mappings()) {
    const bool valid = validate_mapping(p, mp).empty();
    if (cfg.degenerate) {
      if (!valid) out.push_back(mp);
    } else if (cfg.mappings == "all" || (cfg.mappings == "valid" && valid)) {
      out.push_back(mp);
    } else if (cfg.mappings == "first3" && valid && out.size() < 3) {
      out.push_back(mp);
    }
  }
  if (!cfg.degenerate && cfg.mappings == "default") out.push_back(Mapping::default_mapping());
  if (!cfg.degenerate && cfg.mappings != "default" && cfg.mappings != "all" &&
      cfg.mappings != "valid" && cfg.mappings != "first3") {
    throw InvalidParams("--mappings must be default, first3, valid or all");
  }
  return out;
}

struct SweepTask {
  Int p, q;
  int m, n;
  Mapping mapping;
};

Json sweep_row(const SweepTask& t, Int cap) {
  const CyclotomicSystem system(build_system_constants(t.p, t.q, t.m, t.n, cap));
  Json row;
  row["p"] = t.p;
  row["q"] = t.q;
  row["m"] = t.m;
  row["n"] = t.n;
  row["mapping"] = t.mapping.to_string();
  row["period"] = system.period();
  if (!validate_mapping(t.p, t.mapping).empty()) {
    const auto rep = analyze_degenerate(system, t.mapping);
    row["lc"] = rep.lc.lc_gcd;
    row["lc_bm"] = rep.lc.lc_bm;
    row["theorem_holds"] = rep.lc.theorem_holds;
    row["bound"] = rep.bound;
    row["meets_bound"] = rep.meets_bound;
    row["ok"] = rep.meets_bound;
  } else {
    const auto rep = verify_theorem(system, t.mapping);
    row["lc"] = rep.lc_gcd;
    row["lc_bm"] = rep.lc_bm;
    row["theorem_holds"] = rep.theorem_holds;
    row["bound"] = nullptr;
    row["meets_bound"] = nullptr;
    row["ok"] = rep.theorem_holds;
  }
  return row;
}

int cmd_sweep(const RunConfig& cfg) {
  const Int cap = effective_cap(cfg);
  std::vector<SweepTask> tasks;
  const auto exps = parse_pairs(cfg.exps);
  for (const auto& [p, q] : parse_pairs(cfg.pairs)) {
    for (const auto& [m, n] : exps) {
      // Validate up front so bad parameters exit 2 before any work.
      build_system_constants(p, q, static_cast<int>(m), static_cast<int>(n), cap);
      for (const Mapping& mp : sweep_mappings(cfg, p)) {
        tasks.push_back({p, q, static_cast<int>(m), static_cast<int>(n), mp});
      }
    }
  }

  std::vector<Json> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      try {
        rows[k] = sweep_row(tasks[k], cap);
      } catch (...) {
        const std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next = tasks.size();
      }
    }
  };
  const unsigned width = std::max(1U, cfg.jobs);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < width; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);

  Json table = Json::array();
  bool all_ok = true;
  for (auto& row : rows) {
    all_ok = all_ok && row["ok"].get<bool>();
    table.push_back(std::move(row));
  }
  if (cfg.format == "json") {
    emit(cfg, table.dump(2) + "\n");
  } else if (table.empty() && cfg.format == "csv") {
    emit(cfg, "p,q,m,n,mapping,period,lc,lc_bm,theorem_holds,bound,meets_bound,ok\n");
  } else {
    emit(cfg, render_flat(table, cfg.format));
  }
  return all_ok ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternary generalized cyclotomic sequences of period 2 p^m q^n"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_params = [&cfg](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "first odd prime");
    sub->add_option("--q", cfg.q, "second odd prime");
    sub->add_option("--m", cfg.m, "exponent of p");
    sub->add_option("--n", cfg.n, "exponent of q");
    sub->add_option("--map", cfg.map, "symbols a,b,c,d,e as digits 0..3 (2 = alpha)");
    sub->add_option("--cap", cfg.cap, "upper bound on the period (overrides CYCLOSEQ_CAP)");
    sub->add_option("--format", cfg.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-o,--out", cfg.out, "output path, - for stdout");
  };

  auto* generate = app.add_subcommand("generate", "write one period as a digit file");
  add_params(generate);
  generate->add_flag("--degenerate", cfg.degenerate, "allow mappings that break the constraint on e");

  auto* analyze = app.add_subcommand("analyze", "linear complexity of a sequence");
  add_params(analyze);
  analyze->add_option("--file", cfg.file, "sequence file to analyze instead of generating one");
  analyze->add_flag("--degenerate", cfg.degenerate, "allow mappings that break the constraint on e");

  auto* verify = app.add_subcommand("verify", "check the class structure and root evaluations");
  add_params(verify);
  verify->add_flag("--refined", cfg.refined,
                   "judge S(beta^k) against the per-k refined prediction instead of the "
                   "(p mod 8, q mod 8) case constant");

  auto* sweep = app.add_subcommand("sweep", "linear complexity over a parameter grid");
  add_params(sweep);
  sweep->add_option("--pairs", cfg.pairs, "prime pairs, e.g. 3:5,3:7");
  sweep->add_option("--exps", cfg.exps, "exponent pairs, e.g. 1:1,2:1");
  sweep->add_option("--mappings", cfg.mappings, "default, first3, valid or all");
  sweep->add_flag("--degenerate", cfg.degenerate, "sweep the mappings that break the constraint on e");
  sweep->add_option("-j,--jobs", cfg.jobs, "worker threads");
  cfg.format = "json";

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }
  if (sweep->parsed() && sweep->count("--format") == 0) cfg.format = "csv";

  try {
    if (generate->parsed()) return cmd_generate(cfg);
    if (analyze->parsed()) return cmd_analyze(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg);
  } catch (const MalformedSequence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const InvalidParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidMapping& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return 0;
}
