// g2bundle: rank and homology of genus-two surface bundle groups.
//
// Exit codes: 0 success, 1 expectation mismatch (table1, family),
// 2 usage or parse error, 3 I/O failure.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <array>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "g2bundle/g2bundle.hpp"
#include "g2bundle/table1_data.hpp"

namespace {

using namespace g2bundle;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetFlags {
  std::size_t max_steps = TietzeBudget{}.max_steps;
  std::size_t max_total_length = TietzeBudget{}.max_total_length;
  int max_degree = RankBudget{}.max_symmetric_degree;
  int max_affine_prime = RankBudget{}.max_affine_prime;
  std::size_t max_cosets = CosetLimits{}.max_cosets;
  bool no_pair_search = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-steps", max_steps, "Tietze elimination step budget")->capture_default_str();
    cmd->add_option("--max-length", max_total_length, "cap on total relator length during elimination")
        ->capture_default_str();
    cmd->add_option("--max-degree", max_degree, "largest symmetric group searched for quotients")
        ->check(CLI::Range(3, kMaxSymmetricDegree))
        ->capture_default_str();
    cmd->add_option("--max-affine-prime", max_affine_prime, "largest q for AGL(1,q) quotients (below 7 disables)")
        ->check(CLI::Range(0, kMaxAffinePrime))
        ->capture_default_str();
    cmd->add_option("--max-cosets", max_cosets, "coset budget for the generating-pair search")
        ->capture_default_str();
    cmd->add_flag("--no-pair-search", no_pair_search, "skip the generating-pair search");
  }

  RankBudget budget() const {
    RankBudget b;
    b.tietze.max_steps = max_steps;
    b.tietze.max_total_length = max_total_length;
    b.max_symmetric_degree = max_degree;
    b.max_affine_prime = max_affine_prime;
    b.cosets.max_cosets = max_cosets;
    b.pair_search = !no_pair_search;
    return b;
  }
};

FiberType fiber_option(const std::string& s) { return parse_fiber(s); }

unsigned resolve_jobs(unsigned jobs) {
  if (jobs > 0) return jobs;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Opens `path` for writing, or returns nullopt for "-"/empty (stdout).
std::optional<std::ofstream> open_output(const std::string& path) {
  if (path.empty() || path == "-") return std::nullopt;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  return out;
}

void finish_output(std::optional<std::ofstream>& file, const std::string& path) {
  if (!file) {
    std::cout.flush();
    return;
  }
  file->flush();
  if (!*file) throw IoError("write to " + path + " failed");
}

std::string describe(const QuotientWitness& w) {
  std::string s = w.group + ":";
  for (const auto& img : w.images) s += " " + format_cycles(img);
  return s;
}

// ---------------------------------------------------------------- rank

struct RankCommand {
  std::string word;
  std::string fiber = "closed";
  BudgetFlags flags;
  bool emit_presentation = false;
  bool emit_trace = false;
  bool json = false;

  int run() const {
    const TwistWord w = parse_twist_word(word);
    const FiberType f = fiber_option(fiber);
    const Presentation p = bundle_presentation(w, f);
    const RankBudget budget = flags.budget();
    const HomologySummary h = homology_of(p);
    const RankCertificate cert = certify_rank(p, budget);

    if (json) {
      nlohmann::json j = to_json(cert);
      j["word"] = to_string(w);
      j["fiber"] = std::string(to_string(f));
      j["beta1"] = h.betti_1;
      j["torsion"] = format_torsion(h.torsion);
      if (emit_presentation) j["presentation"] = to_json(p);
      if (emit_trace) j["trace"] = to_json(tietze_eliminate(p, budget.tietze), p);
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }

    std::cout << "word: " << (w.empty() ? "(empty)" : to_string(w)) << '\n'
              << "fiber: " << to_string(f) << '\n'
              << "beta1: " << h.betti_1 << '\n'
              << "torsion: " << (h.torsion.empty() ? "none" : format_torsion(h.torsion, ' ')) << '\n'
              << "rank: " << to_string(cert.status) << ' ';
    if (cert.status == RankStatus::exact)
      std::cout << cert.upper << '\n';
    else
      std::cout << cert.lower << ".." << cert.upper << '\n';
    std::cout << "lower: " << cert.lower << '\n' << "upper: " << cert.upper << '\n';
    if (cert.witness_quotient) std::cout << "quotient: " << describe(*cert.witness_quotient) << '\n';
    if (cert.generating_pair) std::cout << "generating pair: found by coset enumeration\n";
    if (cert.truncated) std::cout << "note: simplification budget exhausted\n";
    if (emit_presentation) {
      std::cout << "presentation: " << to_json(p).dump() << '\n';
      std::cout << "witness presentation: " << to_json(cert.witness_presentation).dump() << '\n';
    }
    if (emit_trace) std::cout << "trace: " << to_json(tietze_eliminate(p, budget.tietze), p).dump() << '\n';
    return kExitOk;
  }
};

// ---------------------------------------------------------------- family

bool parse_long(std::string_view s, long long& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && !s.empty();
}

std::array<int, 4> parse_eps(const std::string& text) {
  std::array<int, 4> eps{};
  std::stringstream in(text);
  std::string item;
  std::size_t k = 0;
  while (std::getline(in, item, ',')) {
    long long v = 0;
    if (k >= 4 || !parse_long(item, v) || (v != 1 && v != -1))
      throw ParseError("eps must be four entries from {1,-1}, got '" + text + "'", item);
    eps[k++] = static_cast<int>(v);
  }
  if (k != 4) throw ParseError("eps must have four entries, got '" + text + "'", text);
  return eps;
}

std::pair<long long, long long> parse_range(const std::string& text) {
  const auto dots = text.find("..", 1);
  long long a = 0, b = 0;
  if (dots == std::string::npos || !parse_long(std::string_view(text).substr(0, dots), a) ||
      !parse_long(std::string_view(text).substr(dots + 2), b))
    throw ParseError("range must look like a..b, got '" + text + "'", text);
  if (a > b) throw ParseError("empty range '" + text + "'", text);
  return {a, b};
}

struct FamilyCommand {
  std::string eps_text;
  std::string range_text;
  std::string fiber = "closed";
  BudgetFlags flags;

  int run() const {
    const auto eps = parse_eps(eps_text);
    const auto [lo, hi] = parse_range(range_text);
    const FiberType f = fiber_option(fiber);
    const RankBudget budget = flags.budget();
    int failures = 0;
    std::cout << "n,word,beta1,rank_lower,rank_upper,rank_status,reduced_generators\n";
    for (long long n = lo; n <= hi; ++n) {
      const TwistWord w = family_word(eps, n);
      const Presentation p = bundle_presentation(w, f);
      const RankCertificate cert = certify_rank(p, budget);
      const SimplificationTrace trace = tietze_eliminate(p, budget.tietze);
      std::string gens;
      for (const auto& g : trace.final.generators()) gens += (gens.empty() ? "" : " ") + g;
      const bool ok = cert.status == RankStatus::exact && cert.upper == 2;
      if (!ok) ++failures;
      std::cout << n << ',' << to_string(w) << ',' << homology_of(p).betti_1 << ',' << cert.lower << ','
                << cert.upper << ',' << to_string(cert.status) << ',' << gens << '\n';
    }
    std::cerr << (hi - lo + 1) << " bundles, " << failures << " not certified exact rank 2\n";
    return failures == 0 ? kExitOk : kExitMismatch;
  }
};

// ---------------------------------------------------------------- table1

struct Table1Command {
  std::string out_path;
  BudgetFlags flags;

  int run() const {
    auto file = open_output(out_path);
    std::ostream& csv = file ? static_cast<std::ostream&>(*file) : std::cout;
    std::ostream& report = file ? std::cout : std::cerr;
    const RankBudget budget = flags.budget();

    int beta_mismatches = 0, rank_mismatches = 0, listed_higher = 0;
    csv << census_csv_header() << '\n';
    for (const auto& row : parse_table1(kTable1Csv)) {
      for (FiberType f : {FiberType::closed, FiberType::once_punctured}) {
        const CensusRecord r = classify(row.word, f, budget);
        csv << to_csv_row(r) << '\n';
        const std::string label = to_string(row.word) + " (" + std::string(to_string(f)) + ")";
        if (r.betti_1 != row.expected_betti(f)) {
          ++beta_mismatches;
          report << "MISMATCH beta1 " << label << ": expected " << row.expected_betti(f) << ", got "
                 << r.betti_1 << '\n';
        }
        if (row.expected_rank(f) == 2) {
          if (r.rank_status != RankStatus::exact || r.rank_upper != 2) {
            ++rank_mismatches;
            report << "MISMATCH rank " << label << ": expected exact 2, got " << to_string(r.rank_status) << ' '
                   << r.rank_lower << ".." << r.rank_upper << '\n';
          }
        } else {
          ++listed_higher;
          report << "NOTE rank " << label << ": listed " << row.expected_rank(f) << ", computed "
                 << to_string(r.rank_status) << ' ' << r.rank_lower << ".." << r.rank_upper
                 << " (listed value treated as an upper bound)\n";
        }
      }
    }
    finish_output(file, out_path);
    report << "beta1 mismatches: " << beta_mismatches << '\n'
           << "rank-2 mismatches: " << rank_mismatches << '\n'
           << "entries listed above rank 2: " << listed_higher << '\n';
    return beta_mismatches + rank_mismatches == 0 ? kExitOk : kExitMismatch;
  }
};

// ---------------------------------------------------------------- census

struct CensusCommand {
  int max_len = 0;
  std::optional<std::size_t> random;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "csv";
  unsigned jobs = 0;
  std::string fiber = "closed";
  BudgetFlags flags;

  int run() const {
    const FiberType f = fiber_option(fiber);
    const CensusFormat fmt = format == "jsonl" ? CensusFormat::jsonl : CensusFormat::csv;
    const RankBudget budget = flags.budget();
    std::vector<CensusRecord> records;
    if (random) {
      const int len = max_len > 0 ? max_len : 20;
      records = random_search(*random, len, seed, f, budget, resolve_jobs(jobs));
    } else {
      if (max_len < 1) throw InputError("census needs --max-len or --random");
      if (max_len > kDefaultEnumerationCap)
        throw InputError("exhaustive census is capped at --max-len " + std::to_string(kDefaultEnumerationCap));
      records = exhaustive_census(max_len, f, budget, resolve_jobs(jobs));
    }
    auto file = open_output(out_path);
    write_census(file ? static_cast<std::ostream&>(*file) : std::cout, records, fmt);
    finish_output(file, out_path);
    return kExitOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank and homology of genus-two surface bundle groups"};
  app.require_subcommand(1);

  RankCommand rank;
  auto* rank_cmd = app.add_subcommand("rank", "certify the rank of one bundle group");
  rank_cmd->add_option("word", rank.word, "monodromy word, e.g. \"D1 D2^-1 D3\" (may be empty)")->required();
  rank_cmd->add_option("--fiber", rank.fiber, "closed or punctured")
      ->check(CLI::IsMember({"closed", "punctured"}))
      ->capture_default_str();
  rank_cmd->add_flag("--emit-presentation", rank.emit_presentation, "print presentations as JSON");
  rank_cmd->add_flag("--emit-trace", rank.emit_trace, "print the Tietze elimination trace as JSON");
  rank_cmd->add_flag("--json", rank.json, "print the whole report as one JSON object");
  rank.flags.attach(rank_cmd);

  FamilyCommand family;
  auto* family_cmd = app.add_subcommand("family", "sweep D2^e2 D1^e1 D3^e3 D4^e4 D5^n over a range of n");
  family_cmd->add_option("--eps", family.eps_text, "e1,e2,e3,e4 with entries 1 or -1")->required();
  family_cmd->add_option("--n-range", family.range_text, "a..b")->required();
  family_cmd->add_option("--fiber", family.fiber, "closed or punctured")
      ->check(CLI::IsMember({"closed", "punctured"}))
      ->capture_default_str();
  family.flags.attach(family_cmd);

  Table1Command table1;
  auto* table1_cmd = app.add_subcommand("table1", "classify the reference census and diff against it");
  table1_cmd->add_option("--out", table1.out_path, "CSV destination (report goes to stdout)");
  table1.flags.attach(table1_cmd);

  CensusCommand census;
  auto* census_cmd = app.add_subcommand("census", "exhaustive or random census");
  census_cmd->add_option("--max-len", census.max_len, "word length bound");
  census_cmd->add_option("--random", census.random, "number of random words");
  census_cmd->add_option("--seed", census.seed, "random seed")->capture_default_str();
  census_cmd->add_option("--out", census.out_path, "output file (default stdout)");
  census_cmd->add_option("--format", census.format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  census_cmd->add_option("--jobs", census.jobs, "worker threads (0: all cores)")->capture_default_str();
  census_cmd->add_option("--fiber", census.fiber, "closed or punctured")
      ->check(CLI::IsMember({"closed", "punctured"}))
      ->capture_default_str();
  census.flags.attach(census_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*rank_cmd) return rank.run();
    if (*family_cmd) return family.run();
    if (*table1_cmd) return table1.run();
    if (*census_cmd) return census.run();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (at '" << e.token() << "')\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
