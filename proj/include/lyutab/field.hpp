#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "lyutab/errors.hpp"

namespace lyutab {

/// Coefficient field selector: 0 means the rationals, otherwise a prime p.
struct FieldSpec {
  std::int64_t characteristic = 0;
};

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void validate(const FieldSpec& fs) {
  if (fs.characteristic == 0) return;
  if (fs.characteristic >= (std::int64_t{1} << 31) || !is_prime(fs.characteristic))
    throw InputError("field characteristic must be 0 or a prime below 2^31, got " +
                     std::to_string(fs.characteristic));
}

namespace detail {

inline mpz_class mpz_from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                            : static_cast<unsigned __int128>(v);
  mpz_class hi{static_cast<unsigned long>(u >> 64)};
  mpz_class lo{static_cast<unsigned long>(u)};
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class{-r} : r;
}

inline unsigned __int128 u128_gcd(unsigned __int128 a, unsigned __int128 b) {
  while (b) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

/// Exact rational number. Values that fit in int64 numerator/denominator are
/// kept inline; everything else escalates to a shared GMP rational. Always
/// normalized: den > 0, gcd(|num|, den) = 1, and the GMP slot is used only
/// when the value genuinely does not fit (so representations are canonical).
class Rat {
 public:
  Rat() = default;
  Rat(long long v) : num_(v) {}  // NOLINT: implicit by design
  Rat(long long n, long long d) { *this = make(n, d); }

  static Rat from_mpq(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
      Rat r;
      r.num_ = c.get_num().get_si();
      r.den_ = c.get_den().get_si();
      return r;
    }
    Rat r;
    r.big_ = std::make_shared<const mpq_class>(std::move(c));
    return r;
  }

  bool is_zero() const { return big_ ? sgn(*big_) == 0 : num_ == 0; }

  mpq_class as_mpq() const {
    if (big_) return *big_;
    mpq_class q{static_cast<long>(num_), static_cast<unsigned long>(den_)};
    q.canonicalize();
    return q;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_)
      return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                  i128(a.den_) * b.den_);
    return from_mpq(a.as_mpq() + b.as_mpq());
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_)
      return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                  i128(a.den_) * b.den_);
    return from_mpq(a.as_mpq() - b.as_mpq());
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_)
      return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    return from_mpq(a.as_mpq() * b.as_mpq());
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw InternalError("rational division by zero");
    if (!a.big_ && !b.big_)
      return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    return from_mpq(a.as_mpq() / b.as_mpq());
  }
  Rat operator-() const {
    if (!big_) {
      Rat r;
      r.num_ = -num_;
      r.den_ = den_;
      return r;
    }
    return from_mpq(mpq_class{-*big_});
  }

  friend bool operator==(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a big value never fits the inline form
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

  std::string str() const {
    if (big_) return big_->get_str();
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  using i128 = __int128;
  static constexpr long long kMax = 0x7fffffffffffffffLL;

  static Rat make(i128 n, i128 d) {
    if (d == 0) throw InternalError("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) return Rat{};
    unsigned __int128 un = n < 0 ? -static_cast<unsigned __int128>(n)
                                 : static_cast<unsigned __int128>(n);
    unsigned __int128 g =
        detail::u128_gcd(un, static_cast<unsigned __int128>(d));
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
    if (n <= i128(kMax) && n >= -i128(kMax) && d <= i128(kMax)) {
      Rat r;
      r.num_ = static_cast<long long>(n);
      r.den_ = static_cast<long long>(d);
      return r;
    }
    mpq_class q{detail::mpz_from_i128(n)};
    q /= mpq_class{detail::mpz_from_i128(d)};
    q.canonicalize();
    Rat r;
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
  }

  long long num_ = 0;
  long long den_ = 1;  // > 0, coprime to num_ unless big_ is set
  std::shared_ptr<const mpq_class> big_;
};

/// The rationals. Stateless; element type is Rat.
struct RationalField {
  using Elem = Rat;

  std::int64_t characteristic() const { return 0; }
  Elem zero() const { return Rat{}; }
  Elem one() const { return Rat{1}; }
  Elem from_int(long long v) const { return Rat{v}; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return Rat{1} / a; }
  std::string str(const Elem& a) const { return a.str(); }
};

/// GF(p) for a prime p < 2^31. Elements are reduced residues in a word;
/// products fit in 64 bits without overflow.
struct PrimeField {
  using Elem = std::uint64_t;

  std::uint64_t p;

  explicit PrimeField(std::uint64_t prime) : p(prime) {}

  std::int64_t characteristic() const { return static_cast<std::int64_t>(p); }
  Elem zero() const { return 0; }
  Elem one() const { return p == 1 ? 0 : 1; }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<Elem>(r);
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw InternalError("inverse of zero in GF(p)");
    // extended Euclid on (a, p)
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
      std::int64_t q = r / newr;
      t = std::exchange(newt, t - q * newt);
      r = std::exchange(newr, r - q * newr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<Elem>(t);
  }
  std::string str(Elem a) const { return std::to_string(a); }
};

/// Run fn with the concrete field named by the spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& fs, Fn&& fn) {
  validate(fs);
  if (fs.characteristic == 0) return fn(RationalField{});
  return fn(PrimeField{static_cast<std::uint64_t>(fs.characteristic)});
}

}  // namespace lyutab
