#include "burau4/templieb.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace burau4::templieb {

// --- TLDiagram -----------------------------------------------------------------

namespace {

void check_n(int n) {
  if (n != 3 && n != 4) throw std::invalid_argument("TL rank must be 3 or 4");
}

}  // namespace

TLDiagram TLDiagram::identity(int n) {
  check_n(n);
  TLDiagram d;
  d.n_ = n;
  const int pts = 2 * n;
  for (int p = 1; p <= pts; ++p)
    d.partner_[static_cast<size_t>(p - 1)] = static_cast<uint8_t>(pts - p);
  return d;
}

TLDiagram TLDiagram::generator(int n, int i) {
  check_n(n);
  if (i < 1 || i > n - 1) throw std::out_of_range("TL generator index");
  TLDiagram d = identity(n);
  const int pts = 2 * n;
  auto link = [&](int p, int q) {
    d.partner_[static_cast<size_t>(p - 1)] = static_cast<uint8_t>(q - 1);
    d.partner_[static_cast<size_t>(q - 1)] = static_cast<uint8_t>(p - 1);
  };
  link(i, i + 1);
  link(pts - i, pts + 1 - i);
  return d;
}

TLDiagram TLDiagram::from_pairing(int n, const std::array<uint8_t, 8>& partner) {
  check_n(n);
  TLDiagram d;
  d.n_ = n;
  d.partner_ = partner;
  const int pts = 2 * n;
  for (int p = 0; p < pts; ++p) {
    const int q = partner[static_cast<size_t>(p)];
    if (q < 0 || q >= pts || q == p ||
        partner[static_cast<size_t>(q)] != p)
      throw std::invalid_argument("not a perfect matching");
  }
  if (!d.noncrossing())
    throw std::invalid_argument("matching is not planar (crossing arcs)");
  return d;
}

bool TLDiagram::noncrossing() const {
  // Points 1..2n are in cyclic boundary order, so arcs (p, P) and (q, Q)
  // cross exactly when p < q < P < Q.
  const int pts = 2 * n_;
  for (int p = 1; p <= pts; ++p) {
    const int P = partner(p);
    if (P <= p) continue;
    for (int q = p + 1; q < P; ++q) {
      const int Q = partner(q);
      if (Q < p || Q > P) return false;
    }
  }
  return true;
}

std::string TLDiagram::to_text() const {
  std::string out;
  const int pts = 2 * n_;
  for (int p = 1; p <= pts; ++p) {
    const int q = partner(p);
    if (q <= p) continue;
    out += '(';
    out += std::to_string(p);
    out += ' ';
    out += std::to_string(q);
    out += ')';
  }
  return out;
}

DiagramProduct diagram_mul(const TLDiagram& x, const TLDiagram& y) {
  if (x.n() != y.n())
    throw std::invalid_argument("TL rank mismatch in diagram product");
  const int n = x.n();
  const int pts = 2 * n;
  // Nodes 0..pts-1 are x's points, pts..2*pts-1 are y's points (0-based).
  // x's bottom row is numbered right to left and y's top row left to right,
  // so x's point n+k glues to y's point n+1-k (1-based), k = 1..n.
  auto matching = [&](int node) {
    if (node < pts) return static_cast<int>(x.partner(node + 1) - 1);
    return pts + static_cast<int>(y.partner(node - pts + 1) - 1);
  };
  auto is_middle = [&](int node) {
    if (node < pts) return node >= n;        // x bottom
    return node - pts < n;                   // y top
  };
  auto glue = [&](int node) {
    if (node < pts) return pts + (pts - 1 - node);  // x bottom -> y top
    return pts - 1 - (node - pts);                  // y top -> x bottom
  };

  std::array<bool, 32> seen{};
  std::array<uint8_t, 8> result{};
  auto emit = [&](int from, int to) {
    // External nodes map to result points: x top keeps its number, y bottom
    // keeps its number.
    auto point = [&](int node) {
      return node < pts ? node : node - pts;
    };
    result[static_cast<size_t>(point(from))] =
        static_cast<uint8_t>(point(to));
    result[static_cast<size_t>(point(to))] =
        static_cast<uint8_t>(point(from));
  };

  for (int start = 0; start < 2 * pts; ++start) {
    if (is_middle(start) || seen[static_cast<size_t>(start)]) continue;
    if (start < pts && start >= n) continue;
    int cur = start;
    seen[static_cast<size_t>(cur)] = true;
    for (;;) {
      cur = matching(cur);
      seen[static_cast<size_t>(cur)] = true;
      if (!is_middle(cur)) break;
      cur = glue(cur);
      seen[static_cast<size_t>(cur)] = true;
    }
    emit(start, cur);
  }

  int loops = 0;
  for (int start = 0; start < 2 * pts; ++start) {
    if (!is_middle(start) || seen[static_cast<size_t>(start)]) continue;
    ++loops;
    int cur = start;
    while (!seen[static_cast<size_t>(cur)]) {
      seen[static_cast<size_t>(cur)] = true;
      cur = matching(cur);
      seen[static_cast<size_t>(cur)] = true;
      cur = glue(cur);
    }
  }

  return DiagramProduct{TLDiagram::from_pairing(n, result), loops};
}

// --- TLElement -------------------------------------------------------------------

TLElement TLElement::unit(int n) {
  return from_diagram(TLDiagram::identity(n));
}

TLElement TLElement::from_diagram(TLDiagram d, LaurentPoly c) {
  TLElement e(d.n());
  e.add_term(d, c);
  return e;
}

void TLElement::add_term(const TLDiagram& d, const LaurentPoly& c) {
  if (d.n() != n_) throw std::invalid_argument("TL rank mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLElement& TLElement::operator+=(const TLElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("TL rank mismatch");
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

std::string TLElement::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += '(';
    out += c.to_text();
    out += ")*";
    out += d.to_text();
  }
  return out;
}

// --- scalars ----------------------------------------------------------------------

const LaurentPoly& loop_delta() {
  static const LaurentPoly d = LaurentPoly::parse("-t^-2-t^2");
  return d;
}

const LaurentPoly& bracket_a() {
  static const LaurentPoly a = LaurentPoly::t_power(1);
  return a;
}

const LaurentPoly& bracket_a_inv() {
  static const LaurentPoly a = LaurentPoly::t_power(-1);
  return a;
}

// --- multiplication and theta --------------------------------------------------------

TLElement tl_mul(const TLElement& x, const TLElement& y) {
  if (x.n() != y.n())
    throw std::invalid_argument("TL rank mismatch in tl_mul");
  TLElement r(x.n());
  for (const auto& [dx, cx] : x.terms()) {
    for (const auto& [dy, cy] : y.terms()) {
      DiagramProduct p = diagram_mul(dx, dy);
      LaurentPoly c = cx * cy;
      for (int k = 0; k < p.loops; ++k) c *= loop_delta();
      r.add_term(p.diagram, c);
    }
  }
  return r;
}

TLElement theta(const braid::BraidWord& w, int n) {
  check_n(n);
  if (w.strands != n)
    throw std::invalid_argument("strand count must match TL rank");
  TLElement r = TLElement::unit(n);
  for (const auto& l : w.letters) {
    TLElement factor(n);
    const TLDiagram u = TLDiagram::generator(n, l.index);
    if (l.sign > 0) {
      factor.add_term(TLDiagram::identity(n), bracket_a());
      factor.add_term(u, bracket_a_inv());
    } else {
      factor.add_term(TLDiagram::identity(n), bracket_a_inv());
      factor.add_term(u, bracket_a());
    }
    r = tl_mul(r, factor);
  }
  return r;
}

// --- basis table and psi ---------------------------------------------------------------

namespace {

struct BasisTable {
  std::vector<TLDiagram> diagrams;                    // sorted
  std::map<TLDiagram, std::vector<uint8_t>> words;    // loop-free words
};

// Breadth-first closure of {identity} under right multiplication by the
// generators, keeping only loop-free products; every diagram has a reduced
// generator word, and each of its prefixes is again loop-free, so this
// reaches the whole basis. The expected sizes are the Catalan numbers.
BasisTable build_basis(int n) {
  BasisTable table;
  const TLDiagram id = TLDiagram::identity(n);
  table.words[id] = {};
  std::deque<TLDiagram> queue{id};
  while (!queue.empty()) {
    TLDiagram d = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n - 1; ++i) {
      DiagramProduct p = diagram_mul(d, TLDiagram::generator(n, i));
      if (p.loops != 0) continue;
      if (table.words.contains(p.diagram)) continue;
      std::vector<uint8_t> word = table.words[d];
      word.push_back(static_cast<uint8_t>(i));
      table.words[p.diagram] = std::move(word);
      queue.push_back(p.diagram);
    }
  }
  const size_t expected = (n == 3) ? 5 : 14;
  if (table.words.size() != expected)
    throw std::logic_error("TL basis enumeration did not close");
  for (const auto& [d, w] : table.words) table.diagrams.push_back(d);
  std::sort(table.diagrams.begin(), table.diagrams.end());
  return table;
}

const BasisTable& basis_table(int n) {
  check_n(n);
  static const BasisTable t3 = build_basis(3);
  static const BasisTable t4 = build_basis(4);
  return n == 3 ? t3 : t4;
}

// psi images of the TL_4 basis diagrams, computed once from their words.
const std::map<TLDiagram, TLElement>& psi_images() {
  static const std::map<TLDiagram, TLElement> images = [] {
    std::map<TLDiagram, TLElement> m;
    for (const TLDiagram& d : basis_table(4).diagrams) {
      TLElement img = TLElement::unit(3);
      for (uint8_t i : basis_table(4).words.at(d)) {
        const int j = (i == 3) ? 1 : i;  // U1 -> U1, U2 -> U2, U3 -> U1
        img = tl_mul(img, TLElement::from_diagram(TLDiagram::generator(3, j)));
      }
      m.emplace(d, std::move(img));
    }
    return m;
  }();
  return images;
}

}  // namespace

const std::vector<TLDiagram>& basis(int n) { return basis_table(n).diagrams; }

const std::vector<uint8_t>& basis_word(const TLDiagram& d) {
  const auto& table = basis_table(d.n());
  auto it = table.words.find(d);
  if (it == table.words.end())
    throw std::invalid_argument("diagram is not a basis diagram");
  return it->second;
}

TLElement psi(const TLElement& x) {
  if (x.n() != 4) throw std::invalid_argument("psi expects a TL_4 element");
  TLElement r(3);
  for (const auto& [d, c] : x.terms()) {
    const TLElement& img = psi_images().at(d);
    for (const auto& [d3, c3] : img.terms()) r.add_term(d3, c * c3);
  }
  return r;
}

}  // namespace burau4::templieb
