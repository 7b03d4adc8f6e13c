#include "szkit/poly_io.hpp"

#include <cctype>

namespace szkit {

namespace {

[[noreturn]] void bad_poly(const std::string& text, const std::string& why) {
  throw std::invalid_argument(
      "cannot parse polynomial \"" + text + "\": " + why +
      " (accepted formats: human form like \"x^2-x-1\", or a JSON array of "
      "decimal coefficient strings in descending degree like [\"1\",\"-1\",\"-1\"])");
}

IntPoly parse_json_array(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    bad_poly(text, e.what());
  }
  if (!j.is_array()) bad_poly(text, "JSON value is not an array");
  std::vector<Int> desc;
  for (const auto& item : j) {
    std::string s;
    if (item.is_string()) s = item.get<std::string>();
    else if (item.is_number_integer()) s = std::to_string(item.get<long long>());
    else bad_poly(text, "array entries must be decimal strings or integers");
    try {
      desc.emplace_back(s);
    } catch (const std::exception&) {
      bad_poly(text, "'" + s + "' is not a decimal integer");
    }
  }
  std::vector<Int> asc(desc.rbegin(), desc.rend());
  return IntPoly(std::move(asc));
}

IntPoly parse_human(const std::string& text) {
  std::vector<Int> asc;
  auto add = [&](std::size_t deg, const Int& c) {
    if (asc.size() <= deg) asc.resize(deg + 1, Int(0));
    asc[deg] += c;
  };
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i == n) bad_poly(text, "empty input");
  bool any = false;
  while (true) {
    skip_ws();
    if (i == n) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (any) {
      bad_poly(text, "expected '+' or '-' between terms");
    }
    std::string digits;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    skip_ws();
    if (i < n && text[i] == '*') { ++i; skip_ws(); }
    bool has_var = false;
    std::size_t deg = 0;
    if (i < n && (std::tolower(static_cast<unsigned char>(text[i])) == 'x' ||
                  std::tolower(static_cast<unsigned char>(text[i])) == 'z')) {
      has_var = true;
      deg = 1;
      ++i;
      skip_ws();
      if (i < n && text[i] == '^') {
        ++i;
        skip_ws();
        std::string e;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) e += text[i++];
        if (e.empty()) bad_poly(text, "missing exponent after '^'");
        deg = std::stoul(e);
      }
    }
    if (digits.empty() && !has_var) bad_poly(text, "dangling sign or symbol");
    Int coeff = digits.empty() ? Int(1) : Int(digits);
    add(deg, sign * coeff);
    any = true;
  }
  if (!any) bad_poly(text, "no terms found");
  return IntPoly(std::move(asc));
}

}  // namespace

IntPoly parse_poly(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '[') return parse_json_array(text);
  return parse_human(text);
}

Json poly_to_json(const IntPoly& p) {
  Json arr = Json::array();
  for (long i = p.degree(); i >= 0; --i) arr.push_back(p.at(static_cast<std::size_t>(i)).get_str());
  if (arr.empty()) arr.push_back("0");
  return arr;
}

Json rat_to_json(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Json series_to_json(const TruncatedSeries& f) {
  Json arr = Json::array();
  for (const auto& c : f.coeffs()) arr.push_back(rat_to_json(c));
  return arr;
}

Json complex_to_json(const std::complex<double>& z) {
  return Json::array({z.real(), z.imag()});
}

}  // namespace szkit
