#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "locoh/errors.hpp"

namespace locoh {

// Coefficient field: the rationals, or a prime field GF(p).
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::uint64_t p = 0;

  static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }

  static FieldSpec prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 62)) throw BadField("modulus too large");
    if (p < 2 || !probable_prime(p)) throw BadField("modulus is not prime");
    return FieldSpec{Kind::prime, p};
  }

  // Accepts "q" or "gf:<p>".
  static FieldSpec parse(const std::string& s) {
    if (s == "q" || s == "Q") return rationals();
    if (s.rfind("gf:", 0) == 0) {
      const std::string num = s.substr(3);
      if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
        throw BadField("bad field spec: " + s);
      return prime(std::stoull(num));
    }
    throw BadField("bad field spec: " + s + " (expected q or gf:<p>)");
  }

  std::string to_string() const {
    return kind == Kind::rationals ? "Q" : "GF(" + std::to_string(p) + ")";
  }

  bool operator==(const FieldSpec&) const = default;

 private:
  static bool probable_prime(std::uint64_t p) {
    mpz_class z(static_cast<unsigned long>(p));
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
  }
};

// The two coefficient arithmetics behind the elimination routines.  Kept as
// plain ops structs so the templated linear algebra stays monomorphic per
// field and the prime modulus can ride along as runtime state.

struct RationalOps {
  using Elem = mpq_class;
  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  bool is_zero(const Elem& x) const { return sgn(x) == 0; }
  Elem add(const Elem& x, const Elem& y) const { return x + y; }
  Elem sub(const Elem& x, const Elem& y) const { return x - y; }
  Elem mul(const Elem& x, const Elem& y) const { return x * y; }
  Elem div(const Elem& x, const Elem& y) const { return x / y; }
  Elem neg(const Elem& x) const { return -x; }
};

struct PrimeOps {
  using Elem = std::uint64_t;
  std::uint64_t p;

  explicit PrimeOps(std::uint64_t modulus) : p(modulus) {}

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return static_cast<Elem>(r);
  }
  bool is_zero(const Elem& x) const { return x == 0; }
  Elem add(Elem x, Elem y) const {
    Elem s = x + y;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem x, Elem y) const { return x >= y ? x - y : x + p - y; }
  Elem mul(Elem x, Elem y) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(x) * y) % p);
  }
  Elem neg(Elem x) const { return x == 0 ? 0 : p - x; }
  Elem div(Elem x, Elem y) const { return mul(x, inverse(y)); }

  // Extended Euclid; y must be nonzero mod p.
  Elem inverse(Elem y) const {
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p), newr = static_cast<long long>(y % p);
    while (newr != 0) {
      long long q = r / newr;
      t -= q * newt;
      std::swap(t, newt);
      r -= q * newr;
      std::swap(r, newr);
    }
    if (r != 1) throw BadField("not invertible mod p");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<Elem>(t);
  }
};

}  // namespace locoh
