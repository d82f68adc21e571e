#include "stablelab/rational.hpp"

#include "stablelab/error.hpp"

namespace stablelab {

std::string to_string(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    require(!s.empty(), ErrorKind::InvalidInput, "empty rational component");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    require(i < s.size(), ErrorKind::InvalidInput, "bad rational: " + std::string(text));
    for (std::size_t j = i; j < s.size(); ++j)
      require(s[j] >= '0' && s[j] <= '9', ErrorKind::InvalidInput, "bad rational: " + std::string(text));
    return BigInt(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt d = parse_int(text.substr(slash + 1));
  require(d != 0, ErrorKind::InvalidInput, "zero denominator: " + std::string(text));
  return Rational(parse_int(text.substr(0, slash)), d);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace stablelab
