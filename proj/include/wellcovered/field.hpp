#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <variant>

namespace wc {

bool is_prime(std::uint64_t p) noexcept;

/// Which exact field a computation runs over.
class FieldSpec {
 public:
  enum class Kind { rationals, prime_field };

  static FieldSpec rationals() noexcept { return FieldSpec(Kind::rationals, 0); }
  /// Throws PreconditionError unless p is a prime below 2^61.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "q", "Q", "gf:<p>", "GF<p>".
  static FieldSpec parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::rationals; }
  std::uint64_t modulus() const noexcept { return p_; }
  /// "Q" or "GF<p>".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class PrimeField;
  FieldSpec(Kind k, std::uint64_t p) noexcept : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

class RationalField {
 public:
  using value_type = mpq_class;
  static constexpr bool kPrefersSmallPivots = true;

  FieldSpec spec() const noexcept { return FieldSpec::rationals(); }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return 1 / a; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  // a -= c * b
  void sub_mul(value_type& a, const value_type& c, const value_type& b) const { a -= c * b; }
  std::size_t pivot_cost(const value_type& a) const {
    return mpz_sizeinbase(a.get_num_mpz_t(), 2) + mpz_sizeinbase(a.get_den_mpz_t(), 2);
  }
};

class PrimeField {
 public:
  using value_type = std::uint64_t;
  static constexpr bool kPrefersSmallPivots = false;

  explicit PrimeField(std::uint64_t p) : p_(p) {}

  FieldSpec spec() const noexcept { return FieldSpec(FieldSpec::Kind::prime_field, p_); }
  std::uint64_t modulus() const noexcept { return p_; }
  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1 % p_; }
  value_type from_int(long long v) const noexcept {
    long long m = static_cast<long long>(p_);
    long long r = v % m;
    return static_cast<value_type>(r < 0 ? r + m : r);
  }
  value_type add(value_type a, value_type b) const noexcept {
    value_type s = a + b;  // p < 2^61 so no wraparound
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  /// Inverse by the extended Euclidean algorithm; a must be nonzero.
  value_type inv(value_type a) const noexcept;
  bool is_zero(value_type a) const noexcept { return a == 0; }
  bool equal(value_type a, value_type b) const noexcept { return a == b; }
  void sub_mul(value_type& a, value_type c, value_type b) const noexcept { a = sub(a, mul(c, b)); }
  std::size_t pivot_cost(value_type) const noexcept { return 0; }

 private:
  std::uint64_t p_;
};

template <class F>
concept ExactField = requires(const F& f, const typename F::value_type& a, typename F::value_type& m) {
  { f.spec() } -> std::same_as<FieldSpec>;
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.from_int(1LL) } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.neg(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.pivot_cost(a) } -> std::convertible_to<std::size_t>;
  f.sub_mul(m, a, a);
};

/// Runs fn with the concrete field object selected by spec.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_rationals()) return fn(RationalField{});
  return fn(PrimeField{spec.modulus()});
}

/// Field-tagged exact scalar: a canonical rational or a residue mod p.
class FieldScalar {
 public:
  struct Residue {
    std::uint64_t value;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  FieldScalar() : value_(mpq_class(0)) {}
  explicit FieldScalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }
  explicit FieldScalar(Residue r) : value_(r) {}

  bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<Residue>(value_).value; }
  bool is_zero() const;

  /// "num/den" for rationals (denominator omitted when 1) or the residue.
  std::string to_string() const;

  friend bool operator==(const FieldScalar& a, const FieldScalar& b) { return a.value_ == b.value_; }

 private:
  std::variant<mpq_class, Residue> value_;
};

inline FieldScalar to_scalar(const RationalField&, const mpq_class& v) { return FieldScalar(v); }
inline FieldScalar to_scalar(const PrimeField&, std::uint64_t v) { return FieldScalar(FieldScalar::Residue{v}); }
/// Throws FieldMismatchError if s does not belong to the field.
mpq_class from_scalar(const RationalField&, const FieldScalar& s);
std::uint64_t from_scalar(const PrimeField& f, const FieldScalar& s);

}  // namespace wc
