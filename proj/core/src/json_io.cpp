#include "burau4/json_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace burau4::json_io {

using nlohmann::json;

namespace {

json poly_value(const laurent::LaurentPoly& p) {
  json arr = json::array();
  for (const auto& [exp, coeff] : p.terms()) {
    json pair = json::array();
    pair.push_back(exp);
    if (coeff.fits_int64())
      pair.push_back(coeff.as_int64());
    else
      pair.push_back(coeff.str());
    arr.push_back(std::move(pair));
  }
  return arr;
}

json matrix_value(const burau::BurauMatrix& m) {
  json rows = json::array();
  for (int i = 1; i <= 3; ++i) {
    json row = json::array();
    for (int j = 1; j <= 3; ++j) row.push_back(poly_value(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json outcome_value(const regularity::RegularityOutcome& o) {
  json j;
  j["word"] = braid::to_text(o.word);
  j["m"] = o.m;
  j["l"] = o.l;
  j["rho11_degmin"] = o.rho11_degmin ? json(*o.rho11_degmin) : json(nullptr);
  j["rho31_degmin"] = o.rho31_degmin ? json(*o.rho31_degmin) : json(nullptr);
  j["diff"] = o.diff ? json(*o.diff) : json(nullptr);
  j["regular"] = o.regular;
  j["pure"] = o.pure;
  return j;
}

laurent::Coeff coeff_from_value(const json& v) {
  if (v.is_string())
    return laurent::Coeff::from_decimal(v.get<std::string>());
  if (v.is_number_integer()) return laurent::Coeff(v.get<long long>());
  throw std::invalid_argument(
      "polynomial coefficient must be an integer or a decimal string");
}

}  // namespace

std::string to_json(const laurent::LaurentPoly& p) {
  return poly_value(p).dump();
}

laurent::LaurentPoly poly_from_json(std::string_view text) {
  const json j = json::parse(text);
  if (!j.is_array())
    throw std::invalid_argument("polynomial JSON must be an array of pairs");
  std::vector<laurent::LaurentPoly::Term> terms;
  terms.reserve(j.size());
  for (const json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 ||
        !pair[0].is_number_integer())
      throw std::invalid_argument(
          "polynomial term must be an [exponent, coefficient] pair");
    terms.emplace_back(pair[0].get<int>(), coeff_from_value(pair[1]));
  }
  return laurent::LaurentPoly::from_terms(std::move(terms));
}

std::string to_json(const burau::BurauMatrix& m) {
  return matrix_value(m).dump();
}

std::string to_json(const templieb::TLElement& e) {
  json j;
  j["n"] = e.n();
  json terms = json::array();
  for (const auto& [diagram, coeff] : e.terms()) {
    json term;
    json pairing = json::array();
    for (int p = 1; p <= diagram.points(); ++p)
      pairing.push_back(diagram.partner(p));
    term["pairing"] = std::move(pairing);
    term["coeff"] = poly_value(coeff);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

std::string to_json(const decomp::PQRDecomposition& d) {
  json j;
  j["word"] = decomp::word_text(d.base_word);
  j["n"] = d.n;
  j["P"] = d.P.to_text();
  j["Q"] = d.Q.to_text();
  j["R"] = d.R.to_text();
  j["validated_depth"] = d.validated_depth;
  return j.dump();
}

std::string to_json(const regularity::RegularityOutcome& o) {
  return outcome_value(o).dump();
}

std::string to_json(const regularity::ScanResult& s) {
  json j;
  j["m_min"] = s.m_min;
  j["m_max"] = s.m_max;
  j["l_min"] = s.l_min;
  j["l_max"] = s.l_max;
  if (s.threshold) {
    json th = json::array();
    th.push_back(s.threshold->first);
    th.push_back(s.threshold->second);
    j["threshold"] = std::move(th);
  } else {
    j["threshold"] = nullptr;
  }
  json grid = json::array();
  for (const auto& cell : s.grid) grid.push_back(outcome_value(cell));
  j["grid"] = std::move(grid);
  return j.dump();
}

}  // namespace burau4::json_io
