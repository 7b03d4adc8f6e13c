#pragma once

#include <complex>
#include <string>

#include "json.hpp"
#include "szkit/int_poly.hpp"
#include "szkit/series.hpp"

namespace szkit {

using Json = nlohmann::ordered_json;

// Accepts either the human form "x^2-x-1" (variable letter x or z, optional
// '*', case-insensitive) or a JSON array of decimal coefficient strings in
// descending degree, e.g. ["1","-1","-1"].
IntPoly parse_poly(const std::string& text);

// Canonical wire form: descending-degree decimal strings.
Json poly_to_json(const IntPoly& p);

Json rat_to_json(const Rat& q);          // "n" or "n/d"
Json series_to_json(const TruncatedSeries& f);
Json complex_to_json(const std::complex<double>& z);  // [re, im]

}  // namespace szkit
