#include "burau4/selftest.hpp"

#include <array>
#include <functional>
#include <sstream>

#include "burau4/braid.hpp"
#include "burau4/burau.hpp"
#include "burau4/decomp.hpp"
#include "burau4/laurent.hpp"
#include "burau4/templieb.hpp"

namespace burau4::selftest {

namespace {

using braid::parse_braid;
using braid::parse_bv;
using burau::BurauMatrix;
using burau::evaluate;
using laurent::LaurentPoly;

// Collects mismatches for one named check; empty detail means pass.
struct Scope {
  std::ostringstream detail;
  bool pass = true;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (!pass) detail << "; ";
    pass = false;
    detail << what;
  }

  void expect_poly(const LaurentPoly& got, const char* want,
                   const char* label) {
    if (got.to_text() == want) return;
    expect(false, std::string(label) + ": expected " + want + ", got " +
                      got.to_text());
  }

  void expect_matrix(const BurauMatrix& got,
                     const std::array<const char*, 9>& want,
                     const char* label) {
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        const char* w = want[static_cast<size_t>((i - 1) * 3 + (j - 1))];
        if (got.at(i, j).to_text() != w)
          expect(false, std::string(label) + "(" + std::to_string(i) + "," +
                            std::to_string(j) + "): expected " + w +
                            ", got " + got.at(i, j).to_text());
      }
  }
};

Check run_check(const std::string& name,
                const std::function<void(Scope&)>& body) {
  Check c;
  c.name = name;
  Scope s;
  try {
    body(s);
    c.pass = s.pass;
    c.detail = s.detail.str();
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = std::string("exception: ") + e.what();
  }
  return c;
}

BurauMatrix braid_matrix(const char* text) {
  return evaluate(parse_braid(text, 4));
}

// Obtains the validated decomposition of a^2 w and checks the three parts.
void check_decomposition(Scope& s, const char* word, const char* p,
                         const char* q, const char* r,
                         decomp::PQRDecomposition* out = nullptr) {
  auto res = decomp::extract_pqr(decomp::Word(parse_bv(word)), 2);
  s.expect(res.ok(), std::string(word) + ": " + res.failure);
  if (!res.ok()) return;
  auto& d = *res.decomposition;
  const auto bad = decomp::validate(d, 4);
  s.expect(!bad.has_value(),
           std::string(word) + ": prediction mismatch at m=" +
               (bad ? std::to_string(*bad) : ""));
  s.expect_poly(d.P, p, "P");
  s.expect_poly(d.Q, q, "Q");
  s.expect_poly(d.R, r, "R");
  if (out) *out = d;
}

void check_prediction(Scope& s, const decomp::PQRDecomposition& d, int m,
                      const char* rho11, const char* rho31) {
  const auto [r11, r31] = decomp::predict(d, m);
  s.expect_poly(r11, rho11, "rho11");
  s.expect_poly(r31, rho31, "rho31");
  const auto direct = evaluate(braid::power(parse_bv("a"), d.n + m)) *
                      evaluate(decomp::to_braid(d.base_word));
  s.expect(r11 == direct.at(1, 1) && r31 == direct.at(3, 1),
           "closed form differs from direct evaluation at m=" +
               std::to_string(m));
}

}  // namespace

std::vector<Check> run_all() {
  std::vector<Check> checks;

  checks.push_back(run_check("generator matrices", [](Scope& s) {
    s.expect_matrix(braid_matrix("s1"),
                    {"-t^-1", "0", "0", "t^-1", "1", "0", "0", "0", "1"},
                    "s1");
    s.expect_matrix(braid_matrix("s2"),
                    {"1", "1", "0", "0", "-t^-1", "0", "0", "t^-1", "1"},
                    "s2");
    s.expect_matrix(braid_matrix("s3"),
                    {"1", "0", "0", "0", "1", "1", "0", "0", "-t^-1"},
                    "s3");
  }));

  checks.push_back(run_check("generator inverses", [](Scope& s) {
    const auto id = BurauMatrix::identity();
    s.expect(braid_matrix("s1") * braid_matrix("S1") == id, "s1 S1 != 1");
    s.expect(braid_matrix("s2") * braid_matrix("S2") == id, "s2 S2 != 1");
    s.expect(braid_matrix("s3") * braid_matrix("S3") == id, "s3 S3 != 1");
  }));

  checks.push_back(run_check("braid relations", [](Scope& s) {
    s.expect(braid_matrix("s1 s2 s1") == braid_matrix("s2 s1 s2"),
             "s1 s2 s1 != s2 s1 s2");
    s.expect(braid_matrix("s2 s3 s2") == braid_matrix("s3 s2 s3"),
             "s2 s3 s2 != s3 s2 s3");
    s.expect(braid_matrix("s1 s3") == braid_matrix("s3 s1"),
             "s1 s3 != s3 s1");
  }));

  checks.push_back(run_check("generator determinants", [](Scope& s) {
    for (const char* g : {"s1", "s2", "s3"})
      s.expect_poly(braid_matrix(g).det(), "-t^-1",
                    (std::string("det ") + g).c_str());
  }));

  checks.push_back(run_check("kernel letter matrices", [](Scope& s) {
    s.expect_matrix(evaluate(parse_bv("a")),
                    {"-t^-1+1", "-t^-1+t", "-t^-1", "0", "-t", "0", "-1",
                     "0", "0"},
                    "a");
    s.expect_matrix(evaluate(parse_bv("b")),
                    {"-t", "0", "0", "1", "1", "1", "0", "0", "-t^-1"},
                    "b");
    s.expect_matrix(evaluate(parse_bv("A")),
                    {"0", "0", "-1", "0", "-t^-1", "0", "-t", "t^-1-t",
                     "1-t"},
                    "A");
    s.expect_matrix(evaluate(parse_bv("B")),
                    {"-t^-1", "0", "0", "t^-1", "1", "t", "0", "0", "-t"},
                    "B");
  }));

  checks.push_back(run_check("kernel letters expand", [](Scope& s) {
    for (const char* letter : {"a", "b", "A", "B"}) {
      const auto w = parse_bv(letter);
      s.expect(evaluate(w) == evaluate(braid::bv_expand(w)),
               std::string(letter) + " != its expansion");
      s.expect(burau::artin_trivial(braid::phi(braid::bv_expand(w))),
               std::string(letter) + " expansion leaves the kernel");
    }
  }));

  checks.push_back(run_check("reference decomposition 1", [](Scope& s) {
    decomp::PQRDecomposition d;
    check_decomposition(s, "B A b", "t^-2", "0", "-1+t-t^3+t^4", &d);
    if (!s.pass) return;
    check_prediction(s, d, 0, "-t^-3+t^-2-1+2*t-t^2-t^3+2*t^4-t^5",
                     "-t^-2+1-t+t^3-t^4");
    check_prediction(
        s, d, 3,
        "t^-6-t^-5+t^-4-t^-3+t^-2-1+2*t-2*t^2+t^3-t^5+2*t^6-2*t^7+t^8",
        "t^-5-t^-4+t^-3-t^-2+1-2*t+2*t^2-t^3-t^4+2*t^5-2*t^6+t^7");
  }));

  checks.push_back(run_check("reference decomposition 2", [](Scope& s) {
    decomp::PQRDecomposition d;
    check_decomposition(s, "b a^-2 B", "-t^-5+t^-4-t^-2", "t^-1", "0", &d);
    if (!s.pass) return;
    check_prediction(s, d, 0, "t^-6-2*t^-5+t^-4+t^-3-t^-2+t^-1",
                     "t^-5-t^-4+t^-2-t^-1");
    check_prediction(s, d, 4,
                     "t^-10-2*t^-9+2*t^-8-t^-7+t^-6-t^-5+t^-3-t^-2+t^-1",
                     "t^-9-2*t^-8+2*t^-7-t^-6+t^-5-t^-3+t^-2-t^-1");
  }));

  checks.push_back(run_check("reference decomposition 3", [](Scope& s) {
    decomp::PQRDecomposition d;
    check_decomposition(s, "a b^2 a B", "t^-5-t^-4+t^-2-2*t^-1+1",
                        "-t^-4+t^-3-2*t^-1+2-t", "1-t^2+t^3", &d);
    if (!s.pass) return;
    check_prediction(s, d, 0,
                     "-t^-6+2*t^-5-2*t^-4+3*t^-2-5*t^-1+4-2*t-t^2+2*t^3-t^4",
                     "-t^-5+2*t^-4-t^-3-t^-2+4*t^-1-4+t+t^2-t^3");
    check_prediction(s, d, 2,
                     "-t^-8+2*t^-7-2*t^-6+t^-5+t^-4-3*t^-3+4*t^-2-5*t^-1+4"
                     "-2*t+t^3-2*t^4+2*t^5-t^6",
                     "-t^-7+2*t^-6-2*t^-5+t^-4+2*t^-3-4*t^-2+5*t^-1-4+2*t"
                     "-2*t^3+2*t^4-t^5");
  }));

  checks.push_back(run_check("reference decomposition 4", [](Scope& s) {
    decomp::PQRDecomposition d1, d2;
    check_decomposition(
        s, "b^6 a B A b^-6 a^-6",
        "t^-8-3*t^-7+6*t^-6-9*t^-5+11*t^-4-11*t^-3+8*t^-2-2*t^-1-7+16*t"
        "-22*t^2+23*t^3-20*t^4+14*t^5-5*t^6-4*t^7+10*t^8-12*t^9+11*t^10"
        "-9*t^11+6*t^12-3*t^13+t^14",
        "-t^-1+2-2*t+t^2-2*t^4+4*t^5-6*t^6+6*t^7-4*t^8+t^9+t^10-2*t^11"
        "+3*t^12-3*t^13+2*t^14-t^15",
        "-t^-6+3*t^-5-6*t^-4+9*t^-3-11*t^-2+11*t^-1-7-t+10*t^2-18*t^3"
        "+23*t^4-22*t^5+17*t^6-8*t^7-t^8+8*t^9-11*t^10+11*t^11-9*t^12"
        "+6*t^13-3*t^14+t^15",
        &d1);
    check_decomposition(
        s, "b^6 a B A b^-6 a^-9",
        "t^-8-3*t^-7+6*t^-6-9*t^-5+11*t^-4-12*t^-3+11*t^-2-8*t^-1+1+8*t"
        "-16*t^2+21*t^3-23*t^4+23*t^5-19*t^6+12*t^7-4*t^8-3*t^9+8*t^10"
        "-11*t^11+12*t^12-11*t^13+9*t^14-6*t^15+3*t^16-t^17",
        "-t^-1+2-2*t+t^2-t^4+2*t^5-4*t^6+6*t^7-6*t^8+4*t^9-2*t^10+t^11"
        "-t^13+2*t^14-3*t^15+3*t^16-2*t^17+t^18",
        "-t^-6+3*t^-5-6*t^-4+9*t^-3-11*t^-2+12*t^-1-10+5*t+2*t^2-10*t^3"
        "+17*t^4-21*t^5+22*t^6-20*t^7+14*t^8-7*t^9+5*t^11-9*t^12+11*t^13"
        "-11*t^14+9*t^15-6*t^16+3*t^17-t^18",
        &d2);
    if (!s.pass) return;
    s.expect(d1.P.deg_min() == d2.P.deg_min(), "deg_min P mismatch");
    s.expect(d1.Q.deg_min() == d2.Q.deg_min(), "deg_min Q mismatch");
    s.expect(d1.R.deg_min() == d2.R.deg_min(), "deg_min R mismatch");
    s.expect(d1.P.deg_min() == -8, "deg_min P != -8");
    s.expect(d1.Q.deg_min() == -1, "deg_min Q != -1");
    s.expect(d1.R.deg_min() == -6, "deg_min R != -6");
  }));

  checks.push_back(run_check("diagram relations", [](Scope& s) {
    using templieb::TLElement;
    for (int n : {3, 4}) {
      for (int i = 1; i < n; ++i) {
        const auto g = templieb::TLDiagram::generator(n, i);
        const auto u = TLElement::from_diagram(g);
        s.expect(templieb::tl_mul(u, u) ==
                     TLElement::from_diagram(g, templieb::loop_delta()),
                 "U" + std::to_string(i) + "^2 != delta U" +
                     std::to_string(i) + " in TL" + std::to_string(n));
      }
      for (int i = 1; i + 1 < n; ++i) {
        const auto u = TLElement::from_diagram(
            templieb::TLDiagram::generator(n, i));
        const auto v = TLElement::from_diagram(
            templieb::TLDiagram::generator(n, i + 1));
        s.expect(templieb::tl_mul(templieb::tl_mul(u, v), u) == u,
                 "UVU != U in TL" + std::to_string(n));
        s.expect(templieb::tl_mul(templieb::tl_mul(v, u), v) == v,
                 "VUV != V in TL" + std::to_string(n));
      }
    }
    const auto u1 =
        TLElement::from_diagram(templieb::TLDiagram::generator(4, 1));
    const auto u3 =
        TLElement::from_diagram(templieb::TLDiagram::generator(4, 3));
    s.expect(templieb::tl_mul(u1, u3) == templieb::tl_mul(u3, u1),
             "distant generators do not commute");
  }));

  checks.push_back(run_check("diagram representation", [](Scope& s) {
    for (const char* g : {"s1", "s2", "s3"}) {
      const auto w = parse_braid(g, 4);
      const auto prod = templieb::tl_mul(
          templieb::theta(w, 4), templieb::theta(braid::inverse(w), 4));
      s.expect(prod == templieb::TLElement::unit(4),
               std::string(g) + ": theta inverse fails");
    }
    s.expect(templieb::theta(parse_braid("s1 s2 s1", 4), 4) ==
                 templieb::theta(parse_braid("s2 s1 s2", 4), 4),
             "theta breaks the braid relation");
  }));

  checks.push_back(run_check("projection square", [](Scope& s) {
    for (const char* g : {"s1", "S1", "s2", "S2", "s3", "S3"}) {
      const auto w = parse_braid(g, 4);
      s.expect(templieb::psi(templieb::theta(w, 4)) ==
                   templieb::theta(braid::phi(w), 3),
               std::string(g) + ": projections disagree");
    }
  }));

  return checks;
}

bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace burau4::selftest
