#include "kohn/pi_polynomial.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>

namespace kohn {

PiPolynomial::PiPolynomial(std::vector<Rational> coefficients, bool odd_pi)
    : coefficients_(std::move(coefficients)), odd_pi_(odd_pi) {
  for (auto& c : coefficients_) {
    c.canonicalize();
  }
  normalize();
}

PiPolynomial PiPolynomial::constant(const Rational& c) { return PiPolynomial({c}); }

PiPolynomial PiPolynomial::pi_power(const Rational& c, unsigned power) {
  std::vector<Rational> coeffs(power / 2 + 1, Rational(0));
  coeffs.back() = c;
  return PiPolynomial(std::move(coeffs), power % 2 == 1);
}

Rational PiPolynomial::coefficient(std::size_t j) const {
  return j < coefficients_.size() ? coefficients_[j] : Rational(0);
}

void PiPolynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
  if (coefficients_.empty()) {
    odd_pi_ = false;
  }
}

PiPolynomial& PiPolynomial::operator+=(const PiPolynomial& rhs) {
  if (rhs.is_zero()) {
    return *this;
  }
  if (is_zero()) {
    return *this = rhs;
  }
  if (odd_pi_ != rhs.odd_pi_) {
    throw std::invalid_argument("cannot add polynomials in pi^2 with different odd-pi factors");
  }
  if (coefficients_.size() < rhs.coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size(), Rational(0));
  }
  for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
    coefficients_[j] += rhs.coefficients_[j];
  }
  normalize();
  return *this;
}

PiPolynomial& PiPolynomial::operator-=(const PiPolynomial& rhs) { return *this += rhs * Rational(-1); }

PiPolynomial& PiPolynomial::operator*=(const Rational& s) {
  for (auto& c : coefficients_) {
    c *= s;
  }
  normalize();
  return *this;
}

std::string PiPolynomial::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    const Rational& c = coefficients_[j];
    if (c == 0) {
      continue;
    }
    const bool negative = c < 0;
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    const Rational mag = abs(c);
    const unsigned power = static_cast<unsigned>(2 * j) + (odd_pi_ ? 1U : 0U);
    if (power == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) {
      out += mag.get_str() + "*";
    }
    out += power == 1 ? "pi" : "pi^" + std::to_string(power);
  }
  return out;
}

namespace {

Rational parse_rational(std::string_view s) {
  if (s.empty()) {
    throw std::invalid_argument("empty coefficient");
  }
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/') {
      throw std::invalid_argument("bad coefficient '" + std::string(s) + "'");
    }
  }
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    return Rational(Integer(std::string(s)));
  }
  const std::string num(s.substr(0, slash));
  const std::string den(s.substr(slash + 1));
  if (num.empty() || den.empty() || den.find('/') != std::string::npos) {
    throw std::invalid_argument("bad coefficient '" + std::string(s) + "'");
  }
  return make_rational(Integer(num), Integer(den));
}

}  // namespace

PiPolynomial PiPolynomial::parse(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      compact += ch;
    }
  }
  if (compact.empty()) {
    throw std::invalid_argument("empty polynomial");
  }
  if (compact == "0") {
    return {};
  }

  std::vector<Rational> coeffs;
  std::optional<bool> odd;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    bool negative = false;
    if (compact[pos] == '+' || compact[pos] == '-') {
      negative = compact[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("expected '+' or '-' in '" + compact + "'");
    }
    const std::size_t next = compact.find_first_of("+-", pos);
    const std::string_view term =
        std::string_view(compact).substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? compact.size() : next;

    Rational c(1);
    unsigned power = 0;
    const auto pi_at = term.find("pi");
    if (pi_at == std::string_view::npos) {
      c = parse_rational(term);
    } else {
      if (pi_at > 0) {
        if (term[pi_at - 1] != '*') {
          throw std::invalid_argument("expected '*' before pi in '" + std::string(term) + "'");
        }
        c = parse_rational(term.substr(0, pi_at - 1));
      }
      const std::string_view tail = term.substr(pi_at + 2);
      if (tail.empty()) {
        power = 1;
      } else if (tail.size() >= 2 && tail[0] == '^') {
        const Integer e{std::string(tail.substr(1))};
        if (e < 1 || e > 100000) {
          throw std::invalid_argument("bad pi exponent in '" + std::string(term) + "'");
        }
        power = static_cast<unsigned>(e.get_ui());
      } else {
        throw std::invalid_argument("bad pi power in '" + std::string(term) + "'");
      }
    }
    const bool term_odd = power % 2 == 1;
    if (odd.has_value() && *odd != term_odd) {
      throw std::invalid_argument("mixed pi parities in '" + compact + "'");
    }
    odd = term_odd;
    const std::size_t j = power / 2;
    if (coeffs.size() <= j) {
      coeffs.resize(j + 1, Rational(0));
    }
    coeffs[j] += negative ? Rational(-c) : c;
  }
  return PiPolynomial(std::move(coeffs), odd.value_or(false));
}

BigFloat pipoly_eval(const PiPolynomial& p, PrecisionSpec prec) {
  const BigFloat pi = BigFloat::pi(prec);
  const BigFloat pi_sq = pi * pi;
  BigFloat acc(prec);
  const auto coeffs = p.coefficients();
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    acc = acc * pi_sq + BigFloat::from_rational(coeffs[j], prec);
  }
  if (p.has_odd_pi()) {
    acc *= pi;
  }
  return acc;
}

PiPolynomial zeta_even(unsigned two_m) {
  if (two_m < 2 || two_m % 2 != 0) {
    throw std::invalid_argument("zeta_even: argument must be an even integer >= 2");
  }
  Integer pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, two_m);
  const Rational c = abs(bernoulli(two_m)) * Rational(pow2) / Rational(2 * factorial(two_m));
  return PiPolynomial::pi_power(c, two_m);
}

PiPolynomial ball_volume_even(unsigned d) {
  if (d == 0 || d % 2 != 0) {
    throw std::invalid_argument("ball_volume_even: dimension must be a positive even integer");
  }
  return PiPolynomial::pi_power(make_rational(1, factorial(d / 2)), d / 2);
}

}  // namespace kohn
