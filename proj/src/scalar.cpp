#include "penta/scalar.hpp"

#include <cctype>
#include <cstdio>

#include "penta/errors.hpp"

namespace penta {

std::string ScalarTraits<double>::to_string(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty()) throw ParseError("empty number");
  try {
    auto slash = text.find('/');
    auto dot = text.find_first_of(".eE");
    if (slash == std::string::npos && dot != std::string::npos) {
      // decimal literal, read exactly: mantissa / 10^digits * 10^exp
      std::string mant = text, expo = "0";
      auto e = text.find_first_of("eE");
      if (e != std::string::npos) {
        mant = text.substr(0, e);
        expo = text.substr(e + 1);
      }
      long scale = 0;
      auto p = mant.find('.');
      if (p != std::string::npos) {
        scale = static_cast<long>(mant.size() - p - 1);
        mant.erase(p, 1);
      }
      if (mant.empty() || mant == "-" || mant == "+") throw ParseError("bad decimal '" + raw + "'");
      if (mant[0] == '+') mant.erase(0, 1);
      long ex = std::stol(expo) - scale;
      mpz_class num(mant, 10), pow10;
      mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(ex < 0 ? -ex : ex));
      Rational r = ex < 0 ? Rational(num, pow10) : Rational(num * pow10);
      r.canonicalize();
      return r;
    }
    std::string t = text;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    Rational r(t, 10);
    if (slash != std::string::npos && sgn(r.get_den()) == 0) throw ParseError("zero denominator");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a number: '" + raw + "'");
  }
}

}  // namespace penta
