#pragma once

#include <string>
#include <string_view>

#include "burau4/burau.hpp"
#include "burau4/decomp.hpp"
#include "burau4/laurent.hpp"
#include "burau4/regularity.hpp"
#include "burau4/templieb.hpp"

// Stable JSON renderings of the library's value types. All output is
// deterministic: keys are emitted in sorted order and term lists follow the
// canonical orders of the types themselves.
namespace burau4::json_io {

// Sorted array of [exponent, coefficient] pairs; coefficients that fit a
// 64-bit integer are JSON numbers, larger ones decimal strings.
std::string to_json(const laurent::LaurentPoly& p);
laurent::LaurentPoly poly_from_json(std::string_view text);

// 3x3 array of polynomial arrays, row major.
std::string to_json(const burau::BurauMatrix& m);

// {"n": ..., "terms": [{"pairing": [1-based partners], "coeff": ...}, ...]}
std::string to_json(const templieb::TLElement& e);

// {"word", "n", "P", "Q", "R", "validated_depth"} with canonical polynomial
// text for the three parts.
std::string to_json(const decomp::PQRDecomposition& d);

// Degree data of one instance; absent degrees are null.
std::string to_json(const regularity::RegularityOutcome& o);

// Grid plus the threshold summary; grid cells in row-major (m, l) order.
std::string to_json(const regularity::ScanResult& s);

}  // namespace burau4::json_io
