#include "rectpierce/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace rectpierce {

namespace {

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 target expected");

mpz_class from_int64(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') return false;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Scalar::Scalar(std::int64_t value) : value_(from_int64(value)) {}

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
  value_ = mpq_class(from_int64(num), from_int64(den));
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::invalid_argument("Scalar: zero denominator");
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  auto slash = text.find('/');
  mpz_class num;
  mpz_class den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) {
      throw std::invalid_argument("Scalar: malformed number '" + std::string(text) + "'");
    }
  } else {
    const std::string_view den_text = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), num) || den_text.empty() ||
        den_text[0] == '-' || den_text[0] == '+' || !parse_integer(den_text, den)) {
      throw std::invalid_argument("Scalar: malformed fraction '" + std::string(text) + "'");
    }
    if (den == 0) {
      throw std::invalid_argument("Scalar: zero denominator in '" + std::string(text) + "'");
    }
  }
  return Scalar(mpq_class(num, den));
}

std::string Scalar::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool Scalar::is_integer() const { return value_.get_den() == 1; }

bool Scalar::fits_int64() const {
  if (!is_integer()) return false;
  return value_.get_num().fits_slong_p();
}

std::int64_t Scalar::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("Scalar: not a 64-bit integer: " + to_string());
  return static_cast<std::int64_t>(value_.get_num().get_si());
}

std::int64_t Scalar::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Scalar(mpq_class(q)).to_int64();
}

std::int64_t Scalar::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Scalar(mpq_class(q)).to_int64();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  value_ += o.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  value_ -= o.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  value_ *= o.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.value_ == 0) throw std::domain_error("Scalar: division by zero");
  value_ /= o.value_;
  return *this;
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-value_)); }

bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.value_, b.value_) == 0; }

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace rectpierce
