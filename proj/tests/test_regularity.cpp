#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "burau4/braid.hpp"
#include "burau4/burau.hpp"
#include "burau4/regularity.hpp"

using namespace burau4;
using braid::BVWord;
using braid::parse_braid;
using braid::parse_bv;
using braid::Rng;
using nlohmann::json;
using namespace burau4::regularity;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// The documented threshold rule, recomputed naively from the grid.
std::optional<std::pair<int, int>> naive_threshold(const ScanResult& res) {
  for (int m0 = res.m_min - 1; m0 < res.m_max; ++m0) {
    for (int l0 = res.l_min; l0 <= res.l_max; ++l0) {
      bool all = true;
      for (int m = m0 + 1; m <= res.m_max && all; ++m)
        for (int l = l0; l <= res.l_max && all; ++l)
          if (!res.at(m, l).regular) all = false;
      if (all) return std::make_pair(m0, l0);
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("single-instance degree data") {
  const auto e1 = check_instance(parse_bv("B A b"), 5, 0);
  CHECK(e1.rho11_degmin == -6);
  CHECK(e1.rho31_degmin == -5);
  CHECK(e1.diff == -1);
  CHECK(e1.regular);
  CHECK(e1.pure);

  const auto e2 = check_instance(parse_bv("b a^-2 B"), 6, 0);
  CHECK(e2.rho11_degmin == -10);
  CHECK(e2.rho31_degmin == -9);
  CHECK(e2.regular);
  CHECK(e2.pure);

  const auto e3 = check_instance(parse_bv("a b^2 a B"), 4, 0);
  CHECK(e3.rho11_degmin == -8);
  CHECK(e3.rho31_degmin == -7);
  CHECK(e3.regular);

  const auto id = check_instance(BVWord{}, 0, 0);
  CHECK(id.rho11_degmin == 0);
  CHECK_FALSE(id.rho31_degmin.has_value());
  CHECK_FALSE(id.diff.has_value());
  CHECK_FALSE(id.regular);
  CHECK(id.pure);

  CHECK_THROWS_AS((void)check_instance(BVWord{}, -1, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)check_instance(BVWord{}, 0, -2),
                  std::invalid_argument);
}

TEST_CASE("scan grid agrees with direct instances") {
  const BVWord sigma = parse_bv("B A b");
  const auto res = scan_thresholds(sigma, 0, 6, 0, 3);
  CHECK(res.m_min == 0);
  CHECK(res.m_max == 6);
  CHECK(res.l_min == 0);
  CHECK(res.l_max == 3);
  CHECK(res.grid.size() == 28);
  for (int m = 0; m <= 6; ++m)
    for (int l = 0; l <= 3; ++l) {
      const auto& cell = res.at(m, l);
      const auto direct = check_instance(sigma, m, l);
      CHECK(cell.m == m);
      CHECK(cell.l == l);
      CHECK(cell.rho11_degmin == direct.rho11_degmin);
      CHECK(cell.rho31_degmin == direct.rho31_degmin);
      CHECK(cell.diff == direct.diff);
      CHECK(cell.regular == direct.regular);
      CHECK(cell.pure == direct.pure);
    }
  CHECK_THROWS_AS((void)res.at(7, 0), std::out_of_range);
  CHECK_THROWS_AS((void)res.at(0, 4), std::out_of_range);
  CHECK_THROWS_AS((void)scan_thresholds(sigma, 2, 1, 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)scan_thresholds(sigma, -1, 1, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("threshold matches its defining property") {
  Rng rng(7);
  std::vector<BVWord> words = {parse_bv("B A b"), parse_bv("b a^-2 B"),
                               parse_bv("a b^2 a B")};
  for (int i = 0; i < 5; ++i)
    words.push_back(braid::random_reduced_bv_word(1 + rng.below(7), rng));
  for (const auto& sigma : words) {
    const auto res = scan_thresholds(sigma, 0, 8, 0, 2);
    CHECK(res.threshold == naive_threshold(res));
    if (res.threshold) {
      const auto [m0, l0] = *res.threshold;
      for (int m = m0 + 1; m <= res.m_max; ++m)
        for (int l = l0; l <= res.l_max; ++l) CHECK(res.at(m, l).regular);
    }
  }
}

TEST_CASE("kernel filter classification") {
  CHECK(kernel_filter(parse_braid("s1", 4)) ==
        KernelFilterResult::rejected_not_in_ker_phi);
  CHECK(kernel_filter(parse_braid("s2 s2", 4)) ==
        KernelFilterResult::rejected_not_in_ker_phi);
  CHECK(kernel_filter(parse_braid("s3 S1 s1 S3", 4)) ==
        KernelFilterResult::rejected_trivial);
  CHECK(kernel_filter(braid::BraidWord{}) ==
        KernelFilterResult::rejected_trivial);
  CHECK(kernel_filter(braid::bv_expand(parse_bv("a"))) ==
        KernelFilterResult::candidate);
  CHECK(kernel_filter(braid::bv_expand(parse_bv("b"))) ==
        KernelFilterResult::candidate);

  CHECK(to_string(KernelFilterResult::candidate) == "candidate");
  CHECK(to_string(KernelFilterResult::rejected_not_in_ker_phi) ==
        "rejected-not-in-ker-phi");
  CHECK(to_string(KernelFilterResult::rejected_trivial) ==
        "rejected-trivial");

  // Images of nonempty reduced words in the free kernel are candidates.
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const BVWord w = braid::random_reduced_bv_word(1 + rng.below(6), rng);
    CHECK(kernel_filter(braid::bv_expand(w)) ==
          KernelFilterResult::candidate);
  }
}

TEST_CASE("batch is deterministic and streams valid records") {
  BatchConfig cfg;
  cfg.count = 40;
  cfg.length_min = 4;
  cfg.length_max = 8;
  cfg.seed = 123;

  std::ostringstream out1, out2;
  const auto rep1 = random_batch(cfg, &out1);
  const auto rep2 = random_batch(cfg, &out2);
  CHECK(out1.str() == out2.str());
  CHECK(rep1.trials == 40);
  CHECK(rep1.regular_count == 40);
  CHECK(rep1.violation_list.empty());
  CHECK(rep1.inconclusive_list.empty());
  CHECK(rep2.regular_count == rep1.regular_count);

  const auto lines = lines_of(out1.str());
  REQUIRE(lines.size() == 41);
  for (size_t i = 0; i + 1 < lines.size(); ++i) {
    const json j = json::parse(lines[i]);
    CHECK(j.at("type") == "trial");
    CHECK(j.at("index") == i);
    CHECK(j.at("outcome") == "regular");
    CHECK(j.at("m0").get<int>() <= j.at("sigma_length").get<int>());
    // Purity of the instantiated template is decided by the random part.
    const BVWord w = parse_bv(j.at("w").get<std::string>());
    const BVWord sigma = braid::concat(
        parse_bv("a^3 b^3"), braid::concat(w, parse_bv("b^-3 a^-3")));
    CHECK(j.at("pure").get<bool>() ==
          braid::permutation(sigma).is_identity());
  }
  const json summary = json::parse(lines.back());
  CHECK(summary.at("type") == "summary");
  CHECK(summary.at("schema_version") == 1);
  CHECK(summary.at("trials") == 40);
  CHECK(summary.at("regular_count") == 40);
  CHECK(summary.at("violations") == 0);
  CHECK(summary.at("inconclusive") == 0);
  CHECK(summary.at("config").at("seed") == 123);
  CHECK(summary.at("config").at("template") == cfg.word_template);
  CHECK(summary.at("config").at("count") == 40);
}

TEST_CASE("batch output does not depend on the worker count") {
  BatchConfig cfg;
  cfg.count = 24;
  cfg.length_min = 4;
  cfg.length_max = 6;
  cfg.seed = 9001;

  std::ostringstream seq, par;
  (void)random_batch(cfg, &seq);
  cfg.jobs = 3;
  (void)random_batch(cfg, &par);

  auto seq_lines = lines_of(seq.str());
  auto par_lines = lines_of(par.str());
  REQUIRE(seq_lines.size() == par_lines.size());
  for (size_t i = 0; i + 1 < seq_lines.size(); ++i)
    CHECK(seq_lines[i] == par_lines[i]);
  // The summary echoes the configured jobs value and nothing else differs.
  json s = json::parse(seq_lines.back());
  json p = json::parse(par_lines.back());
  CHECK(s.at("config").at("jobs") == 1);
  CHECK(p.at("config").at("jobs") == 3);
  s["config"].erase("jobs");
  p["config"].erase("jobs");
  CHECK(s == p);
}

TEST_CASE("trials that cannot instantiate the template are inconclusive") {
  BatchConfig cfg;
  cfg.count = 2;
  cfg.length_min = 0;
  cfg.length_max = 0;  // w is always empty, so the template never reduces
  cfg.redraw_cap = 3;
  std::ostringstream out;
  const auto rep = random_batch(cfg, &out);
  CHECK(rep.trials == 2);
  CHECK(rep.regular_count == 0);
  CHECK(rep.inconclusive_list.size() == 2);
  for (const auto& rec : rep.inconclusive_list) {
    CHECK(rec.outcome == TrialOutcome::inconclusive);
    CHECK(rec.reason.find("after 3 draws") != std::string::npos);
  }
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 3);
  const json j = json::parse(lines[0]);
  CHECK(j.at("outcome") == "inconclusive");
  CHECK(j.contains("reason"));
  CHECK_FALSE(j.contains("sigma_length"));
  const json summary = json::parse(lines.back());
  CHECK(summary.at("inconclusive") == 2);
}

TEST_CASE("batch configuration validation") {
  BatchConfig cfg;
  cfg.count = 1;

  BatchConfig bad = cfg;
  bad.count = 0;
  CHECK_THROWS_AS((void)random_batch(bad, nullptr), std::invalid_argument);
  bad = cfg;
  bad.length_min = -1;
  CHECK_THROWS_AS((void)random_batch(bad, nullptr), std::invalid_argument);
  bad = cfg;
  bad.length_max = bad.length_min - 1;
  CHECK_THROWS_AS((void)random_batch(bad, nullptr), std::invalid_argument);
  bad = cfg;
  bad.m_offset = -1;
  CHECK_THROWS_AS((void)random_batch(bad, nullptr), std::invalid_argument);
  bad = cfg;
  bad.jobs = 0;
  CHECK_THROWS_AS((void)random_batch(bad, nullptr), std::invalid_argument);
  bad = cfg;
  bad.redraw_cap = 0;
  CHECK_THROWS_AS((void)random_batch(bad, nullptr), std::invalid_argument);
  bad = cfg;
  bad.word_template = "a b";  // no placeholder
  CHECK_THROWS_AS((void)random_batch(bad, nullptr), std::invalid_argument);
  bad = cfg;
  bad.word_template = "w a w";  // two placeholders
  CHECK_THROWS_AS((void)random_batch(bad, nullptr), std::invalid_argument);
}

TEST_CASE("trial records serialize violations losslessly") {
  TrialRecord rec;
  rec.index = 7;
  rec.w = "aB";
  rec.sigma = "a^3 b^3 a B b^-3 a^-3";
  rec.sigma_length = 14;
  rec.pure = false;
  rec.outcome = TrialOutcome::violation;
  rec.last_irregular = 20;
  rec.scan_max = 22;
  rec.full_word = "a^20 ... a^-20";
  InstanceFailure f;
  f.m = 20;
  f.l = 20;
  f.rho11 = "1+t";
  f.rho31 = "0";
  f.rho11_degmin = 0;
  rec.failures.push_back(f);

  const json j = json::parse(trial_json(rec));
  CHECK(j.at("type") == "trial");
  CHECK(j.at("index") == 7);
  CHECK(j.at("outcome") == "violation");
  CHECK(j.at("m0") == 20);
  CHECK(j.at("scan_max") == 22);
  CHECK(j.at("sigma") == "a^3 b^3 a B b^-3 a^-3");
  CHECK(j.at("full_word") == "a^20 ... a^-20");
  REQUIRE(j.at("failures").size() == 1);
  const auto& jf = j.at("failures").at(0);
  CHECK(jf.at("m") == 20);
  CHECK(jf.at("rho11") == "1+t");
  CHECK(jf.at("rho11_degmin") == 0);
  CHECK(jf.at("rho31_degmin").is_null());
}
