#include "kohn/big_float.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace kohn {

PrecisionSpec::PrecisionSpec(unsigned decimal_digits) : digits_(decimal_digits) {
  if (decimal_digits < kMinDigits) {
    throw std::invalid_argument("precision must be at least 16 decimal digits");
  }
}

mpfr_prec_t PrecisionSpec::bits() const {
  // log2(10) = 3.3219...
  return static_cast<mpfr_prec_t>(std::ceil(digits_ * 3.3219280948873623)) + 16;
}

BigFloat::BigFloat(PrecisionSpec prec) : prec_(prec) {
  mpfr_init2(value_, prec_.bits());
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double v, PrecisionSpec prec) : prec_(prec) {
  mpfr_init2(value_, prec_.bits());
  mpfr_set_d(value_, v, MPFR_RNDN);
}

BigFloat::~BigFloat() {
  if (value_->_mpfr_d != nullptr) {
    mpfr_clear(value_);
  }
}

BigFloat::BigFloat(const BigFloat& other) : prec_(other.prec_) {
  mpfr_init2(value_, prec_.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : prec_(other.prec_) {
  // Steal the limb buffer and leave `other` empty.
  value_[0] = other.value_[0];
  other.value_->_mpfr_d = nullptr;
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    if (value_->_mpfr_d == nullptr) {
      mpfr_init2(value_, other.prec_.bits());
    } else {
      mpfr_set_prec(value_, other.prec_.bits());
    }
    prec_ = other.prec_;
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) {
    if (value_->_mpfr_d != nullptr) {
      mpfr_clear(value_);
    }
    prec_ = other.prec_;
    value_[0] = other.value_[0];
    other.value_->_mpfr_d = nullptr;
  }
  return *this;
}

BigFloat BigFloat::pi(PrecisionSpec prec) {
  BigFloat out(prec);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::from_rational(const Rational& r, PrecisionSpec prec) {
  BigFloat out(prec);
  mpfr_set_q(out.value_, r.get_mpq_t(), MPFR_RNDN);
  return out;
}

BigFloat BigFloat::from_integer(const Integer& z, PrecisionSpec prec) {
  BigFloat out(prec);
  mpfr_set_z(out.value_, z.get_mpz_t(), MPFR_RNDN);
  return out;
}

BigFloat BigFloat::parse(std::string_view text, PrecisionSpec prec) {
  BigFloat out(prec);
  const std::string owned(text);
  char* end = nullptr;
  mpfr_strtofr(out.value_, owned.c_str(), &end, 10, MPFR_RNDN);
  if (owned.empty() || end != owned.c_str() + owned.size()) {
    throw std::invalid_argument("not a floating-point literal: '" + owned + "'");
  }
  return out;
}

namespace {

// Result precision of a binary operation is the wider of the two operands.
void widen_to(BigFloat& self, PrecisionSpec& prec, const BigFloat& rhs) {
  if (rhs.precision().decimal_digits() > prec.decimal_digits()) {
    prec = rhs.precision();
    mpfr_prec_round(self.get(), prec.bits(), MPFR_RNDN);
  }
}

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  widen_to(*this, prec_, rhs);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  widen_to(*this, prec_, rhs);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  widen_to(*this, prec_, rhs);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  widen_to(*this, prec_, rhs);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::abs() const {
  BigFloat out(*this);
  mpfr_abs(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::log() const {
  BigFloat out(prec_);
  mpfr_log(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::pow(unsigned long e) const {
  BigFloat out(prec_);
  mpfr_pow_ui(out.value_, value_, e, MPFR_RNDN);
  return out;
}

bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }

bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string BigFloat::to_string(unsigned digits) const {
  if (digits == 0) {
    digits = prec_.decimal_digits();
  }
  const int len = mpfr_snprintf(nullptr, 0, "%.*Re", static_cast<int>(digits) - 1, value_);
  std::vector<char> buf(static_cast<std::size_t>(len) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits) - 1, value_);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

}  // namespace kohn
