#include "parw/rational.hpp"

#include <stdexcept>

namespace parw {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::pow2(long k) {
  mpq_class one(1);
  mpq_class out;
  if (k >= 0) {
    mpq_mul_2exp(out.get_mpq_t(), one.get_mpq_t(),
                 static_cast<mp_bitcnt_t>(k));
  } else {
    mpq_div_2exp(out.get_mpq_t(), one.get_mpq_t(),
                 static_cast<mp_bitcnt_t>(-k));
  }
  return Rational(std::move(out));
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string s(text);
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' ||
              ((c == '-' || c == '+') && (i == 0 || s[i - 1] == '/'));
    if (!ok) return std::nullopt;
  }
  auto slash = s.find('/');
  if (slash != std::string::npos &&
      (slash == 0 || slash + 1 == s.size() || s.find('/', slash + 1) != std::string::npos))
    return std::nullopt;
  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
  if (sgn(v.get_den()) == 0) return std::nullopt;
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rational::floor_long() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(),
             v_.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("Rational::floor_long");
  return q.get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  return Rational(mpq_class(-v_));
}

long ceil_log2_at_least(const Rational& value) {
  if (value.sign() <= 0)
    throw std::invalid_argument("ceil_log2_at_least: value must be positive");
  long c = 0;
  Rational bound(1);
  while (value > bound) {
    bound *= Rational(2);
    ++c;
  }
  return c;
}

}  // namespace parw
