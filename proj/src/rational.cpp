#include "extgraph/rational.hpp"

#include <cmath>

#include "extgraph/errors.hpp"

namespace extgraph {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

bool try_parse_rational(std::string_view text, Rational& out) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num, true)) return false;
  std::string num_s(num.front() == '+' ? num.substr(1) : num);
  if (slash == std::string_view::npos) {
    out = Rational(BigInt(num_s));
    return true;
  }
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den, false)) return false;
  BigInt d{std::string(den)};
  if (d == 0) return false;
  out = Rational(BigInt(num_s), d);
  out.canonicalize();
  return true;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

double log_of(const Rational& q) {
  if (sgn(q) <= 0) throw DomainError("log of a non-positive rational");
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log(mn / md) + static_cast<double>(en - ed) * std::log(2.0);
}

Rational dyadic_round(double value, int bits) {
  double scaled = std::nearbyint(std::ldexp(value, bits));
  BigInt num(scaled);
  BigInt den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BigInt lcm_of_denominators(const std::vector<Rational>& values) {
  BigInt l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

Rational sum(const std::vector<Rational>& values) {
  Rational s = 0;
  for (const auto& v : values) s += v;
  return s;
}

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedHeader: return "malformed header";
    case ParseErrorKind::MalformedEdge: return "malformed edge line";
    case ParseErrorKind::VertexOutOfRange: return "vertex out of range";
    case ParseErrorKind::DuplicateEdge: return "duplicate edge";
    case ParseErrorKind::Loop: return "loop";
    case ParseErrorKind::NegativeWeight: return "negative weight";
    case ParseErrorKind::BadWeight: return "malformed weight";
    case ParseErrorKind::EdgeCountMismatch: return "edge count mismatch";
    case ParseErrorKind::MalformedRotation: return "malformed rotation";
  }
  return "parse error";
}

}  // namespace extgraph
