// Command-line front end: exact tables of score-sequence counts and EGZ
// numbers with brute-force cross-checks, Lévy–Khintchine transforms of
// user-supplied sequences, exhaustive verification of the cyclic-shift
// correspondence, and the asymptotic-constant report. Tables go to
// stdout and are byte-identical across reruns; timings go to stderr.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error.

#include "scoreseq/bijection.hpp"
#include "scoreseq/lattice.hpp"
#include "scoreseq/lktransform.hpp"
#include "scoreseq/output.hpp"
#include "scoreseq/sequences.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <limits>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace scoreseq;

std::string int_str(const BigInt& z) { return z.get_str(); }
std::string rat_str(const BigRat& q) { return q.get_str(); }

std::string join(const std::vector<std::uint32_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

void emit(const OutputRecord& rec, const std::string& format) {
  if (format == "json")
    std::cout << rec.to_json();
  else if (format == "csv")
    std::cout << rec.to_csv();
  else
    std::cout << rec.to_text();
}

// One value per line, integers or "p/q" rationals; '#' starts a comment.
RatSeq parse_rational_lines(std::istream& in, const std::string& source) {
  RatSeq out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const char* ws = " \t\r";
    auto first = line.find_first_not_of(ws);
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(ws);
    std::string tok = line.substr(first, last - first + 1);

    auto fail = [&](const std::string& why) {
      throw std::invalid_argument(source + ": parse error at line " + std::to_string(lineno) +
                                  ": " + why + ": '" + tok + "'");
    };
    std::string num = tok, den = "1";
    if (auto slash = tok.find('/'); slash != std::string::npos) {
      if (tok.find('/', slash + 1) != std::string::npos) fail("more than one '/'");
      num = tok.substr(0, slash);
      den = tok.substr(slash + 1);
    }
    BigInt p, q;
    if (mpz_set_str(p.get_mpz_t(), num.c_str(), 10) != 0) fail("bad numerator");
    if (mpz_set_str(q.get_mpz_t(), den.c_str(), 10) != 0) fail("bad denominator");
    if (q == 0) fail("zero denominator");
    out.push_back(make_rat(p, q));
  }
  return out;
}

int run_egz(std::uint64_t n_max, std::optional<std::uint32_t> oracle_up_to,
            std::uint32_t bound, const std::string& format) {
  IntSeq table = egz_table(n_max);

  OutputRecord rec;
  rec.command = "egz";
  rec.parameters = {{"n_max", std::to_string(n_max)}};
  rec.columns = {"n", "N_n"};

  bool mismatch = false;
  if (oracle_up_to) {
    if (*oracle_up_to > n_max)
      throw std::invalid_argument("egz: --check-oracle exceeds n_max");
    rec.parameters.emplace_back("check_oracle", std::to_string(*oracle_up_to));
    rec.columns.insert(rec.columns.end(), {"brute_force", "verdict"});
  }
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    std::vector<std::string> row = {std::to_string(n), int_str(table[n])};
    if (oracle_up_to) {
      if (n <= *oracle_up_to) {
        BigInt brute = brute_force_egz(static_cast<std::uint32_t>(n), bound);
        bool ok = brute == table[n];
        mismatch = mismatch || !ok;
        row.push_back(int_str(brute));
        row.push_back(ok ? "ok" : "mismatch");
      } else {
        row.insert(row.end(), {"", ""});
      }
    }
    rec.rows.push_back(std::move(row));
  }
  if (oracle_up_to)
    rec.diagnostics.push_back(std::string("oracle check up to n = ") +
                              std::to_string(*oracle_up_to) + ": " +
                              (mismatch ? "MISMATCH" : "ok"));
  emit(rec, format);
  return mismatch ? 1 : 0;
}

int run_scores(std::uint64_t n_max, bool strong, bool parts,
               std::optional<std::uint32_t> oracle_up_to, std::uint32_t bound,
               const std::string& format) {
  OutputRecord rec;
  rec.command = "scores";
  rec.parameters = {{"n_max", std::to_string(n_max)}};

  if (parts) {
    rec.parameters.emplace_back("parts", "true");
    rec.columns = {"n", "m", "A_nm"};
    bool sums_ok = true;
    if (n_max >= 1) {
      PartsTable table = parts_table(n_max);
      IntSeq s = score_counts(n_max);
      for (std::uint64_t n = 1; n <= n_max; ++n) {
        BigInt row_sum = 0;
        for (std::uint64_t m = 1; m <= n; ++m) {
          rec.rows.push_back(
              {std::to_string(n), std::to_string(m), int_str(table.at(n, m))});
          row_sum += table.at(n, m);
        }
        if (row_sum != s[n]) sums_ok = false;
      }
    }
    rec.diagnostics.push_back(std::string("row sums equal S_n: ") +
                              (sums_ok ? "ok" : "MISMATCH"));
    emit(rec, format);
    return sums_ok ? 0 : 1;
  }

  IntSeq s = score_counts(n_max);
  rec.columns = {"n", "S_n"};
  IntSeq t;
  if (strong) {
    rec.parameters.emplace_back("strong", "true");
    rec.columns.push_back("T_n");
    if (n_max >= 1) t = strong_counts(n_max);
  }
  bool mismatch = false;
  if (oracle_up_to) {
    if (*oracle_up_to > n_max)
      throw std::invalid_argument("scores: --check-oracle exceeds n_max");
    rec.parameters.emplace_back("check_oracle", std::to_string(*oracle_up_to));
    rec.columns.insert(rec.columns.end(), {"enumerated", "verdict"});
  }
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    std::vector<std::string> row = {std::to_string(n), int_str(s[n])};
    if (strong) row.push_back(n >= 1 ? int_str(t[n]) : "");
    if (oracle_up_to) {
      if (n <= *oracle_up_to) {
        std::size_t count = enumerate_score_sequences(static_cast<std::uint32_t>(n), bound).size();
        bool ok = BigInt(static_cast<unsigned long>(count)) == s[n];
        mismatch = mismatch || !ok;
        row.push_back(std::to_string(count));
        row.push_back(ok ? "ok" : "mismatch");
      } else {
        row.insert(row.end(), {"", ""});
      }
    }
    rec.rows.push_back(std::move(row));
  }
  if (oracle_up_to)
    rec.diagnostics.push_back(std::string("oracle check up to n = ") +
                              std::to_string(*oracle_up_to) + ": " +
                              (mismatch ? "MISMATCH" : "ok"));
  emit(rec, format);
  return mismatch ? 1 : 0;
}

int run_lk(const std::string& input, const std::string& direction, bool check_id,
           const std::string& format) {
  RatSeq in;
  if (input == "-") {
    in = parse_rational_lines(std::cin, "<stdin>");
  } else {
    std::ifstream file(input);
    if (!file) throw std::invalid_argument("lk: cannot open input file '" + input + "'");
    in = parse_rational_lines(file, input);
  }
  if (in.empty()) throw std::invalid_argument("lk: input sequence is empty");

  const bool forward = direction == "forward";
  RatSeq out = forward ? lk_forward(in) : lk_inverse(in);

  int code = 0;
  std::string verdict;
  if (check_id) {
    std::uint64_t len = in.size() - 1;
    IntSeq egz = egz_table(std::max<std::uint64_t>(len, 1));
    IntSeq s = score_counts(egz, len);
    RatSeq want = to_ratseq(egz);
    want.resize(len + 1);
    bool ok = lk_forward(to_ratseq(s)) == want;
    verdict = "identity lk_forward(score_counts) = egz_numbers to n = " +
              std::to_string(len) + ": " + (ok ? "ok" : "FAIL");
    if (!ok) code = 1;
  }

  if (format == "lines") {
    for (const BigRat& v : out) std::cout << rat_str(v) << "\n";
    if (!verdict.empty()) std::cout << "# " << verdict << "\n";
    return code;
  }

  OutputRecord rec;
  rec.command = "lk";
  rec.parameters = {{"direction", direction}, {"input", input}};
  rec.columns = forward ? std::vector<std::string>{"n", "a_n", "a*_n"}
                        : std::vector<std::string>{"n", "a*_n", "a_n"};
  for (std::size_t n = 0; n < in.size(); ++n)
    rec.rows.push_back({std::to_string(n), rat_str(in[n]), rat_str(out[n])});
  if (!verdict.empty()) rec.diagnostics.push_back(verdict);
  emit(rec, format);
  return code;
}

int run_bijection(std::uint32_t n, std::uint32_t bound, const std::string& format) {
  BijectionReport report = verify_bijection(n, bound);

  OutputRecord rec;
  rec.command = "bijection";
  rec.parameters = {{"n", std::to_string(n)}};
  rec.columns = {"key", "value"};
  rec.rows = {{"n", std::to_string(report.n)},
              {"domain_size", std::to_string(report.domain_size)},
              {"codomain_size", std::to_string(report.codomain_size)},
              {"injective", report.injective ? "true" : "false"},
              {"surjective", report.surjective ? "true" : "false"}};
  std::string headline = "domain " + std::to_string(report.domain_size) + " = codomain " +
                         std::to_string(report.codomain_size) + ", " +
                         (report.bijective() ? "bijective" : "NOT bijective");
  rec.diagnostics.push_back(headline);
  for (const std::string& f : report.failures) rec.diagnostics.push_back("failure: " + f);
  emit(rec, format);
  return report.bijective() ? 0 : 1;
}

int run_asymptotics(std::uint64_t n_max, std::size_t truncation, int digits,
                    bool rv_diagnostic, const std::string& format) {
  const std::uint64_t table_len = std::max<std::uint64_t>(n_max, truncation);
  IntSeq egz = egz_table(table_len);
  IntSeq s = score_counts(egz, n_max);
  MoserResult constant = moser_constant(egz, truncation, digits);

  OutputRecord rec;
  rec.command = "asymptotics";
  rec.parameters = {{"n_max", std::to_string(n_max)},
                    {"K", std::to_string(truncation)},
                    {"digits", std::to_string(digits)}};
  rec.columns = {"n", "ratio", "ratio_over_C"};

  std::vector<std::uint64_t> schedule;
  for (std::uint64_t d : {8u, 4u, 2u, 1u}) {
    std::uint64_t n = n_max / d;
    if (n >= 1 && (schedule.empty() || schedule.back() != n)) schedule.push_back(n);
  }
  for (std::uint64_t n : schedule) {
    BigFloat ratio = moser_ratio(s[n], n, digits);
    BigFloat rel = ratio / constant.value;
    rec.rows.push_back(
        {std::to_string(n), ratio.to_string(digits), rel.to_string(digits)});
  }
  rec.diagnostics.push_back("C = " + constant.value.to_string(digits) + " at K = " +
                            std::to_string(truncation));
  rec.diagnostics.push_back("truncation tail bound <= " + constant.tail_bound.to_string(3));
  if (rv_diagnostic) {
    RatSeq star = scale_by_powers(to_ratseq(egz), BigRat(1, 4));
    auto d = regular_variation_diagnostic(star, n_max / 2);
    std::string line = "log2 transform ratio at n = " + std::to_string(n_max / 2) + ": ";
    if (d) {
      std::ostringstream os;
      os.precision(6);
      os << std::fixed << *d;
      line += os.str();
    } else {
      line += "unavailable";
    }
    rec.diagnostics.push_back(line);
  }
  emit(rec, format);
  return 0;
}

int run_enumerate(const std::string& kind, std::uint32_t n, std::uint32_t bound,
                  const std::string& format) {
  OutputRecord rec;
  rec.command = "enumerate";
  rec.parameters = {{"kind", kind}, {"n", std::to_string(n)}};
  if (kind == "scores") {
    rec.columns = {"index", "scores"};
    auto seqs = enumerate_score_sequences(n, bound);
    for (std::size_t i = 0; i < seqs.size(); ++i)
      rec.rows.push_back({std::to_string(i), join(seqs[i].scores())});
    rec.diagnostics.push_back("count: " + std::to_string(seqs.size()));
  } else {
    rec.columns = {"index", "down_steps", "area"};
    auto bridges = enumerate_bridges_area_zero_mod_n(n, bound);
    for (std::size_t i = 0; i < bridges.size(); ++i)
      rec.rows.push_back({std::to_string(i), join(bridges[i].down_steps()),
                          std::to_string(sawtooth_area(bridges[i]))});
    rec.diagnostics.push_back("count: " + std::to_string(bridges.size()));
  }
  emit(rec, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact score-sequence counts, EGZ numbers, and discrete "
               "Lévy–Khintchine transforms"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"text", "json", "csv"});
  const auto lk_formats = CLI::IsMember({"text", "json", "csv", "lines"});

  std::uint64_t n_max = 0;
  std::uint32_t n_small = 0;
  std::uint32_t bound = kDefaultEnumBound;
  std::optional<std::uint32_t> oracle_up_to;
  std::string format = "text";
  bool strong = false, parts = false, check_id = false, rv_diag = false;
  std::string input = "-", direction, kind;
  std::size_t truncation = 10000;
  int digits = 10;

  CLI::App* egz = app.add_subcommand("egz", "Table of EGZ numbers N_n");
  egz->add_option("n_max", n_max, "Largest index")->required()->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  egz->add_option("--check-oracle", oracle_up_to,
                  "Cross-check against subset counting up to this n");
  egz->add_option("--bound", bound, "Enumeration bound for the oracle");
  egz->add_option("--format", format, "text, json, or csv")->check(formats);

  CLI::App* scores = app.add_subcommand("scores", "Table of score-sequence counts S_n");
  scores->add_option("n_max", n_max, "Largest index")->required();
  CLI::Option* strong_opt =
      scores->add_flag("--strong", strong, "Add the strong-sequence counts T_n");
  CLI::Option* oracle_opt = scores->add_option(
      "--check-oracle", oracle_up_to, "Cross-check against enumeration up to this n");
  CLI::Option* parts_opt = scores->add_flag(
      "--parts", parts, "Long table A_nm of counts by number of irreducible parts");
  parts_opt->excludes(strong_opt)->excludes(oracle_opt);
  scores->add_option("--bound", bound, "Enumeration bound for the oracle");
  scores->add_option("--format", format, "text, json, or csv")->check(formats);

  CLI::App* lk = app.add_subcommand("lk", "Lévy–Khintchine transform of a sequence");
  lk->add_option("--input", input, "File with one value per line, or '-' for stdin");
  lk->add_option("--direction", direction, "forward or inverse")
      ->required()
      ->check(CLI::IsMember({"forward", "inverse"}));
  lk->add_flag("--check-id", check_id,
               "Also verify that score counts transform to EGZ numbers at this length");
  lk->add_option("--format", format, "text, json, csv, or lines")->check(lk_formats);

  CLI::App* bijection = app.add_subcommand("bijection", "Verify the cyclic-shift correspondence");
  bijection->add_option("n", n_small, "Half-length")->required()->check(CLI::Range(std::uint32_t{1}, std::numeric_limits<std::uint32_t>::max()));
  bijection->add_option("--bound", bound, "Enumeration bound");
  bijection->add_option("--format", format, "text, json, or csv")->check(formats);

  CLI::App* asym = app.add_subcommand("asymptotics", "Limit constant and convergence table");
  asym->add_option("n_max", n_max, "Largest table index")->required()->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  asym->add_option("--K", truncation, "Exponent-sum truncation")->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  asym->add_option("--digits", digits, "Significant digits")->check(CLI::Range(1, 100000));
  asym->add_flag("--rv-diagnostic", rv_diag, "Report the empirical regular-variation index");
  asym->add_option("--format", format, "text, json, or csv")->check(formats);

  CLI::App* enumerate = app.add_subcommand("enumerate", "Dump score sequences or bridges");
  enumerate->add_option("kind", kind, "scores or bridges")
      ->required()
      ->check(CLI::IsMember({"scores", "bridges"}));
  enumerate->add_option("n", n_small, "Length / half-length")->required();
  enumerate->add_option("--bound", bound, "Enumeration bound");
  enumerate->add_option("--format", format, "text, json, or csv")->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits 0; any parse problem is usage error
  }

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (egz->parsed())
      code = run_egz(n_max, oracle_up_to, bound, format);
    else if (scores->parsed())
      code = run_scores(n_max, strong, parts, oracle_up_to, bound, format);
    else if (lk->parsed())
      code = run_lk(input, direction, check_id, format);
    else if (bijection->parsed())
      code = run_bijection(n_small, bound, format);
    else if (asym->parsed())
      code = run_asymptotics(n_max, truncation, digits, rv_diag, format);
    else if (enumerate->parsed())
      code = run_enumerate(kind, n_small, bound, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::cerr << "# elapsed_ms: " << elapsed.count() << "\n";
  return code;
}
