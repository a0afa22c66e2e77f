#include "tua/rational.hpp"

#include <cctype>

namespace tua {

Rational parse_rational(const std::string& token) {
  if (token.empty()) throw ValidationError("empty rational token");
  auto is_int = [](const std::string& s) {
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = token.find('/');
  if (slash == std::string::npos) {
    if (!is_int(token)) throw ValidationError("bad rational token '" + token + "'");
    return Rational(mpz_class(token));
  }
  const std::string num = token.substr(0, slash);
  const std::string den = token.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw ValidationError("bad rational token '" + token + "'");
  mpz_class d(den);
  if (d <= 0) throw ValidationError("denominator must be positive in '" + token + "'");
  Rational r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

long long to_integer(const Rational& value) {
  if (!is_integer(value)) throw InternalError("expected integer rational, got " + to_string(value));
  if (!value.get_num().fits_slong_p()) throw InternalError("integer out of range");
  return value.get_num().get_si();
}

bool is_binary_vector(const std::vector<Rational>& x) {
  for (const auto& v : x)
    if (v != 0 && v != 1) return false;
  return true;
}

}  // namespace tua
