#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "ncpoisson/errors.hpp"

namespace ncp {

/// Exact rational. mpq_class keeps numerator/denominator coprime with a
/// positive denominator after every arithmetic operation.
using Scalar = mpq_class;

inline Scalar make_scalar(long num, long den = 1) {
  require(den != 0, Errc::ParseError, "zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

/// Formats as "p" or "p/q".
inline std::string to_string(const Scalar& q) { return q.get_str(); }

/// Parses "p", "-p", "p/q" with arbitrary-size integers.
inline Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  if (slash == std::string::npos) {
    require(valid_int(s), Errc::ParseError, "not a rational: '" + s + "'");
    return Scalar(mpz_class(strip_plus(s)));
  }
  std::string n = s.substr(0, slash), d = s.substr(slash + 1);
  require(valid_int(n) && valid_int(d), Errc::ParseError, "not a rational: '" + s + "'");
  mpz_class den(strip_plus(d));
  require(den != 0, Errc::ParseError, "zero denominator in '" + s + "'");
  Scalar q(mpz_class(strip_plus(n)), den);
  q.canonicalize();
  return q;
}

/// Uniform rational p/q with p, q in [-bound, bound], q != 0.
inline Scalar random_scalar(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 2 * bound);
  int d = den(rng);
  d = d <= bound ? d : bound - d;  // maps (bound, 2*bound] onto [-bound, -1]
  return make_scalar(num(rng), d);
}

/// Same as random_scalar but never zero.
inline Scalar random_nonzero_scalar(std::mt19937_64& rng, int bound = 9) {
  Scalar q;
  do {
    q = random_scalar(rng, bound);
  } while (is_zero(q));
  return q;
}

}  // namespace ncp
