#include "wellcovered/field.hpp"

#include <charconv>

#include "wellcovered/errors.hpp"

namespace wc {

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0 || p % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= p / d; d += 6)
    if (p % d == 0 || p % (d + 2) == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 61)) throw PreconditionError("prime modulus must be below 2^61");
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  return FieldSpec(Kind::prime_field, p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  std::string digits;
  if (text.rfind("gf:", 0) == 0 || text.rfind("GF:", 0) == 0)
    digits = text.substr(3);
  else if (text.rfind("GF", 0) == 0 || text.rfind("gf", 0) == 0)
    digits = text.substr(2);
  else
    throw PreconditionError("unknown field '" + text + "' (expected q or gf:<p>)");
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
    throw PreconditionError("bad prime in field '" + text + "'");
  return prime(p);
}

std::string FieldSpec::name() const { return is_rationals() ? "Q" : "GF" + std::to_string(p_); }

PrimeField::value_type PrimeField::inv(value_type a) const noexcept {
  // Extended Euclid on signed 128-bit to keep the Bezout coefficients exact.
  __int128 old_r = a, r = p_;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  __int128 m = p_;
  __int128 res = old_s % m;
  if (res < 0) res += m;
  return static_cast<value_type>(res);
}

bool FieldScalar::is_zero() const {
  if (is_rational()) return sgn(rational()) == 0;
  return residue() == 0;
}

std::string FieldScalar::to_string() const {
  if (!is_rational()) return std::to_string(residue());
  const auto& q = rational();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class from_scalar(const RationalField&, const FieldScalar& s) {
  if (!s.is_rational()) throw FieldMismatchError("expected a rational scalar, got a residue");
  return s.rational();
}

std::uint64_t from_scalar(const PrimeField& f, const FieldScalar& s) {
  if (s.is_rational()) throw FieldMismatchError("expected a residue mod " + std::to_string(f.modulus()));
  if (s.residue() >= f.modulus()) throw FieldMismatchError("residue out of range for GF(" + std::to_string(f.modulus()) + ")");
  return s.residue();
}

}  // namespace wc
