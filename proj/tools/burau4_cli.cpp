// Command-line front end. Every subcommand is a thin adapter over the
// library: parse arguments, call one entry point, render the result.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "burau4/braid.hpp"
#include "burau4/burau.hpp"
#include "burau4/decomp.hpp"
#include "burau4/json_io.hpp"
#include "burau4/laurent.hpp"
#include "burau4/regularity.hpp"
#include "burau4/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;         // usage or parse errors
constexpr int kExitViolation = 2;     // violations / failed checks
constexpr int kExitInconclusive = 3;  // nothing decided (not decomposable,
                                      // no threshold, inconclusive trials)

constexpr const char* kSeedEnvVar = "BURAU4_SEED";

// Words over a/A/b/B parse as free-group words, words over s/S/sigma as
// braid words on 4 strands; the alphabets are disjoint.
burau4::decomp::Word parse_word(const std::string& text) {
  for (char c : text) {
    if (c == 'a' || c == 'A' || c == 'b' || c == 'B')
      return burau4::braid::parse_bv(text);
    if (c == 's' || c == 'S')
      return burau4::braid::parse_braid(text, 4);
  }
  if (text.find("\xcf\x83") != std::string::npos)
    return burau4::braid::parse_braid(text, 4);
  // No recognized letter: accept only the empty word, reject anything else
  // with a position-carrying error.
  return burau4::braid::parse_bv(text);
}

struct OutputTarget {
  std::string path;  // empty: stdout
  std::ofstream file;

  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(path, std::ios::binary | std::ios::trunc);
      if (!file) throw std::runtime_error("cannot open output file: " + path);
    }
    return file;
  }
};

uint64_t parse_seed_env() {
  if (const char* env = std::getenv(kSeedEnvVar)) {
    try {
      size_t used = 0;
      uint64_t v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string(kSeedEnvVar) +
                                 " must be an unsigned integer");
    }
  }
  return 0;
}

int run_eval(const std::string& word_text, const std::string& format,
             OutputTarget& out) {
  const auto word = parse_word(word_text);
  const burau4::burau::BurauMatrix m =
      std::holds_alternative<burau4::braid::BVWord>(word)
          ? burau4::burau::evaluate(std::get<burau4::braid::BVWord>(word))
          : burau4::burau::evaluate(std::get<burau4::braid::BraidWord>(word));
  if (format == "json")
    out.stream() << burau4::json_io::to_json(m) << '\n';
  else
    out.stream() << m.to_text() << '\n';
  return kExitOk;
}

void render_decomposition(const burau4::decomp::PQRDecomposition& d,
                          const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << burau4::json_io::to_json(d) << '\n';
    return;
  }
  os << "word: " << burau4::decomp::word_text(d.base_word) << '\n'
     << "n: " << d.n << '\n'
     << "P: " << d.P.to_text() << '\n'
     << "Q: " << d.Q.to_text() << '\n'
     << "R: " << d.R.to_text() << '\n'
     << "validated_depth: " << d.validated_depth << '\n';
}

// Shared by decompose and predict: find a validated decomposition, either at
// a fixed n or by minimal-n search; diagnostics go to the error stream.
std::optional<burau4::decomp::PQRDecomposition> obtain_decomposition(
    const burau4::decomp::Word& word, std::optional<int> n,
    std::optional<int> n_max, int depth) {
  if (n) {
    auto res = burau4::decomp::extract_pqr(word, *n);
    if (!res.ok()) {
      std::cerr << "not decomposable at n=" << *n << ": " << res.failure
                << '\n';
      return std::nullopt;
    }
    if (auto bad_m = burau4::decomp::validate(*res.decomposition, depth)) {
      std::cerr << "not decomposable at n=" << *n
                << ": prediction mismatch at m=" << *bad_m << '\n';
      return std::nullopt;
    }
    return std::move(res.decomposition);
  }
  const int cap = n_max ? *n_max : burau4::decomp::default_n_max(word);
  auto res = burau4::decomp::find_minimal_n(word, cap, depth);
  if (!res.ok()) {
    std::cerr << "no decomposition found for n <= " << cap << '\n';
    for (const auto& f : res.failures)
      std::cerr << "  n=" << f.n << ": " << f.reason << '\n';
    return std::nullopt;
  }
  return std::move(res.decomposition);
}

int run_decompose(const std::string& word_text, std::optional<int> n,
                  std::optional<int> n_max, int depth,
                  const std::string& format, OutputTarget& out) {
  auto dec = obtain_decomposition(parse_word(word_text), n, n_max, depth);
  if (!dec) return kExitInconclusive;
  render_decomposition(*dec, format, out.stream());
  return kExitOk;
}

int run_predict(const std::string& word_text, int m, std::optional<int> n,
                std::optional<int> n_max, int depth,
                const std::string& format, OutputTarget& out) {
  auto dec = obtain_decomposition(parse_word(word_text), n, n_max, depth);
  if (!dec) return kExitInconclusive;
  const auto [rho11, rho31] = burau4::decomp::predict(*dec, m);
  std::ostream& os = out.stream();
  if (format == "json") {
    nlohmann::json j;
    j["word"] = burau4::decomp::word_text(dec->base_word);
    j["n"] = dec->n;
    j["m"] = m;
    j["exponent"] = dec->n + m;
    j["rho11"] = rho11.to_text();
    j["rho31"] = rho31.to_text();
    os << j.dump() << '\n';
  } else {
    os << "word: " << burau4::decomp::word_text(dec->base_word) << '\n'
       << "n: " << dec->n << '\n'
       << "m: " << m << '\n'
       << "exponent: " << (dec->n + m) << '\n'
       << "rho11: " << rho11.to_text() << '\n'
       << "rho31: " << rho31.to_text() << '\n';
  }
  return kExitOk;
}

int run_check(const std::string& word_text, int m, int l,
              const std::string& format, OutputTarget& out) {
  const auto outcome =
      burau4::regularity::check_instance(burau4::braid::parse_bv(word_text),
                                         m, l);
  std::ostream& os = out.stream();
  if (format == "json") {
    os << burau4::json_io::to_json(outcome) << '\n';
  } else {
    auto opt_text = [](const std::optional<int>& v) {
      return v ? std::to_string(*v) : std::string("none");
    };
    os << "word: " << burau4::braid::to_text(outcome.word) << '\n'
       << "m: " << outcome.m << '\n'
       << "l: " << outcome.l << '\n'
       << "rho11_degmin: " << opt_text(outcome.rho11_degmin) << '\n'
       << "rho31_degmin: " << opt_text(outcome.rho31_degmin) << '\n'
       << "diff: " << opt_text(outcome.diff) << '\n'
       << "regular: " << (outcome.regular ? "true" : "false") << '\n'
       << "pure: " << (outcome.pure ? "true" : "false") << '\n';
  }
  return outcome.regular ? kExitOk : kExitViolation;
}

int run_kernel_filter(const std::string& word_text, OutputTarget& out) {
  const auto w = burau4::decomp::to_braid(parse_word(word_text));
  const auto r = burau4::regularity::kernel_filter(w);
  out.stream() << burau4::regularity::to_string(r) << '\n';
  return kExitOk;
}

int run_scan(const std::string& word_text, int m_min, int m_max, int l_min,
             int l_max, const std::string& format, OutputTarget& out) {
  const auto res = burau4::regularity::scan_thresholds(
      burau4::braid::parse_bv(word_text), m_min, m_max, l_min, l_max);
  std::ostream& os = out.stream();
  if (format == "json") {
    os << burau4::json_io::to_json(res) << '\n';
  } else {
    os << "word: " << word_text << '\n';
    os << "diff grid (rows m=" << m_min << ".." << m_max << ", cols l="
       << l_min << ".." << l_max << "; '.' marks regular):\n";
    for (int m = m_min; m <= m_max; ++m) {
      os << "  m=" << m << ":";
      for (int l = l_min; l <= l_max; ++l) {
        const auto& cell = res.at(m, l);
        if (cell.regular)
          os << " .";
        else if (cell.diff)
          os << ' ' << *cell.diff;
        else
          os << " x";
      }
      os << '\n';
    }
    if (res.threshold)
      os << "threshold: m0=" << res.threshold->first
         << " l0=" << res.threshold->second << '\n';
    else
      os << "threshold: not found in range\n";
  }
  return res.threshold ? kExitOk : kExitInconclusive;
}

int run_batch(const burau4::regularity::BatchConfig& config,
              OutputTarget& out) {
  const auto report = burau4::regularity::random_batch(config, &out.stream());
  std::cerr << "trials: " << report.trials
            << "  regular: " << report.regular_count
            << "  violations: " << report.violation_list.size()
            << "  inconclusive: " << report.inconclusive_list.size()
            << "  wall_time_s: " << report.wall_time_seconds << '\n';
  if (!report.violation_list.empty()) return kExitViolation;
  if (!report.inconclusive_list.empty()) return kExitInconclusive;
  return kExitOk;
}

int run_selftest(OutputTarget& out) {
  const auto checks = burau4::selftest::run_all();
  std::ostream& os = out.stream();
  size_t passed = 0;
  for (const auto& c : checks) {
    os << (c.pass ? "pass" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << '\n';
    if (c.pass) ++passed;
  }
  os << passed << "/" << checks.size() << " checks passed\n";
  return passed == checks.size() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced Burau representation of the 4-strand braid group: "
               "evaluation, P/Q/R decompositions, degree-regularity scans"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read defaults from a key=value file");
  app.get_config_formatter_base()->valueSeparator('=');

  std::string format = "text";
  std::string output_path;
  std::string word_text;

  auto add_common = [&](CLI::App* cmd, bool with_format = true) {
    cmd->add_option("--output,-o", output_path,
                    "Write results to a file instead of standard output");
    if (with_format)
      cmd->add_option("--format,-f", format, "Output format")
          ->check(CLI::IsMember({"text", "json"}))
          ->capture_default_str();
  };

  auto* c_eval = app.add_subcommand(
      "eval", "Evaluate the matrix of a word (a/A/b/B or s1..s3/S1..S3)");
  c_eval->add_option("word", word_text, "Word to evaluate");
  add_common(c_eval);

  std::optional<int> opt_n, opt_n_max;
  int depth = burau4::decomp::kDefaultDepth;
  auto* c_dec = app.add_subcommand(
      "decompose", "Find the P/Q/R decomposition of rho(a^n w)");
  c_dec->add_option("word", word_text, "Base word")->required();
  c_dec->add_option("--n", opt_n, "Fixed exponent n (default: search)");
  c_dec->add_option("--n-max", opt_n_max,
                    "Search cap (default: 2*length + 4)");
  c_dec->add_option("--depth", depth, "Validation depth in m")
      ->capture_default_str();
  add_common(c_dec);

  int pred_m = 1;
  auto* c_pred = app.add_subcommand(
      "predict", "Closed-form rho11/rho31 of a^(n+m) w from the decomposition");
  c_pred->add_option("word", word_text, "Base word")->required();
  c_pred->add_option("--m", pred_m, "Level m >= 0")->required();
  c_pred->add_option("--n", opt_n, "Fixed exponent n (default: search)");
  c_pred->add_option("--n-max", opt_n_max,
                     "Search cap (default: 2*length + 4)");
  c_pred->add_option("--depth", depth, "Validation depth in m")
      ->capture_default_str();
  add_common(c_pred);

  int chk_m = 0, chk_l = 0;
  auto* c_chk = app.add_subcommand(
      "check", "Degree regularity of a^m w a^-l by direct evaluation");
  c_chk->add_option("word", word_text, "Word over a/A/b/B");
  c_chk->add_option("--m", chk_m, "Left power of a")->required();
  c_chk->add_option("--l", chk_l, "Right power of a^-1")->required();
  add_common(c_chk);

  auto* c_ker = app.add_subcommand(
      "kernel-filter",
      "Classify a 4-strand braid word as kernel candidate or rejected");
  c_ker->add_option("word", word_text, "Word in either alphabet")->required();
  add_common(c_ker, false);

  int m_min = 0, m_max = 0, l_min = 0, l_max = 0;
  auto* c_scan = app.add_subcommand(
      "scan", "Regularity grid over ranges of m and l, with threshold");
  c_scan->add_option("word", word_text, "Word over a/A/b/B");
  c_scan->add_option("--m-min", m_min, "Smallest m")->required();
  c_scan->add_option("--m-max", m_max, "Largest m")->required();
  c_scan->add_option("--l-min", l_min, "Smallest l")->required();
  c_scan->add_option("--l-max", l_max, "Largest l")->required();
  add_common(c_scan);

  burau4::regularity::BatchConfig batch;
  auto* c_batch = app.add_subcommand(
      "batch", "Randomized conjugate-scan experiment, JSONL report");
  c_batch->add_option("--count", batch.count, "Number of trials")->required();
  c_batch->add_option("--length-min", batch.length_min,
                      "Smallest random-word length")->capture_default_str();
  c_batch->add_option("--length-max", batch.length_max,
                      "Largest random-word length")->capture_default_str();
  c_batch->add_option("--template", batch.word_template,
                      "Word template with one 'w' placeholder")
      ->capture_default_str();
  c_batch->add_option("--m-offset", batch.m_offset,
                      "Scan buffer beyond the word length")
      ->capture_default_str();
  std::optional<uint64_t> batch_seed;
  c_batch->add_option("--seed", batch_seed,
                      "Trial seed (default: $" + std::string(kSeedEnvVar) +
                          " or 0)");
  c_batch->add_option("--jobs", batch.jobs,
                      "Worker threads; the report is identical for any value")
      ->capture_default_str();
  c_batch->add_option("--redraw-cap", batch.redraw_cap,
                      "Draw attempts per trial before inconclusive")
      ->capture_default_str();
  add_common(c_batch, false);

  auto* c_self = app.add_subcommand(
      "selftest", "Run the frozen reference suite and print a table");
  add_common(c_self, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  OutputTarget out;
  out.path = output_path;
  try {
    if (c_eval->parsed()) return run_eval(word_text, format, out);
    if (c_dec->parsed())
      return run_decompose(word_text, opt_n, opt_n_max, depth, format, out);
    if (c_pred->parsed())
      return run_predict(word_text, pred_m, opt_n, opt_n_max, depth, format,
                         out);
    if (c_chk->parsed()) return run_check(word_text, chk_m, chk_l, format, out);
    if (c_ker->parsed()) return run_kernel_filter(word_text, out);
    if (c_scan->parsed())
      return run_scan(word_text, m_min, m_max, l_min, l_max, format, out);
    if (c_batch->parsed()) {
      batch.seed = batch_seed ? *batch_seed : parse_seed_env();
      return run_batch(batch, out);
    }
    if (c_self->parsed()) return run_selftest(out);
  } catch (const burau4::braid::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const burau4::laurent::PolyParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
