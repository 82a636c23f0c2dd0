#include "match_ybo/scalar.hpp"

#include "match_ybo/errors.hpp"

namespace match_ybo {

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return InvalidInput("malformed rational: \"" + s + "\""); };
  if (s.empty()) throw bad();
  // GMP accepts things we do not want (whitespace, bases); keep it to [-]digits[/digits].
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool digits = false, slash = false, den_digits = false;
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (ch >= '0' && ch <= '9') {
      (slash ? den_digits : digits) = true;
    } else if (ch == '/' && !slash && digits) {
      slash = true;
    } else {
      throw bad();
    }
  }
  if (!digits || (slash && !den_digits)) throw bad();
  if (s[0] == '+') s.erase(0, 1);
  Scalar x;
  if (x.set_str(s, 10) != 0) throw bad();
  if (sgn(x.get_den()) == 0) throw bad();
  x.canonicalize();
  return x;
}

std::string to_string(const Scalar& x) { return x.get_str(10); }

std::optional<Scalar> rational_sqrt(const Scalar& x) {
  if (sgn(x) < 0) return std::nullopt;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn = sqrt(num);
  mpz_class rd = sqrt(den);
  Scalar r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace match_ybo
