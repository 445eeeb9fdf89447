#include "pcf/rational.hpp"

#include <cctype>

#include "pcf/errors.hpp"

namespace pcf {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ZeroDenominator("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw DomainError("empty rational literal");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '/') {
      throw DomainError("malformed rational literal: " + s);
    }
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw DomainError("malformed rational literal: " + s);
  if (q.get_den() == 0) throw ZeroDenominator("zero denominator in literal: " + s);
  q.canonicalize();
  return q;
}

long vp_int(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw DomainError("valuation of zero");
  mpz_class rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long vp_rational(const Rational& q, const mpz_class& p) {
  if (q == 0) throw DomainError("valuation of zero");
  long v = vp_int(q.get_num(), p);
  if (v == 0) v -= vp_int(q.get_den(), p);  // canonical form: p divides at most one side
  return v;
}

namespace {

mpz_class pow10(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// floor(|q| * 10^frac) with the requested tie behavior, as an integer.
mpz_class scaled_magnitude(const Rational& q, int frac, Rounding mode) {
  mpz_class num = abs(q.get_num()) * pow10(frac);
  mpz_class den = q.get_den();
  mpz_class t, r;
  mpz_fdiv_qr(t.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (mode == Rounding::HalfAwayFromZero && 2 * r >= den) t += 1;
  return t;
}

}  // namespace

std::string decimal_fixed(const Rational& q, int frac_digits, Rounding mode) {
  if (frac_digits < 0) throw DomainError("negative fractional digit count");
  mpz_class t = scaled_magnitude(q, frac_digits, mode);
  std::string sign = q < 0 ? "-" : "";
  mpz_class scale = pow10(frac_digits);
  mpz_class ip = t / scale;
  mpz_class fp = t % scale;
  std::string out = sign + ip.get_str();
  if (frac_digits > 0) {
    std::string f = fp.get_str();
    out += "." + std::string(frac_digits - f.size(), '0') + f;
  }
  return out;
}

std::string decimal_significant(const Rational& q, int digits) {
  if (digits < 1) throw DomainError("need at least one significant digit");
  if (q == 0) return "0";
  std::string sign = q < 0 ? "-" : "";
  Rational m = abs(q);
  // Decimal exponent e with 10^e <= m < 10^(e+1); the digit-length gap is
  // within one of it, the loops settle the boundary.
  long e = static_cast<long>(m.get_num().get_str().size()) -
           static_cast<long>(m.get_den().get_str().size());
  auto pow10q = [](long k) {
    return k >= 0 ? Rational(pow10(k)) : Rational(1, pow10(-k));
  };
  while (pow10q(e + 1) <= m) ++e;
  while (m < pow10q(e)) --e;

  long shift = digits - 1 - e;
  mpz_class num = m.get_num(), den = m.get_den();
  if (shift >= 0) {
    num *= pow10(shift);
  } else {
    den *= pow10(-shift);
  }
  mpz_class t, r;
  mpz_fdiv_qr(t.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) t += 1;
  std::string s = t.get_str();
  if (s.size() == static_cast<std::size_t>(digits) + 1) {
    s.pop_back();  // rounding carried into a new leading digit
    ++e;
  }
  if (e >= digits - 1) return sign + s + std::string(e - digits + 1, '0');
  if (e >= 0) return sign + s.substr(0, e + 1) + "." + s.substr(e + 1);
  return sign + "0." + std::string(-e - 1, '0') + s;
}

}  // namespace pcf
