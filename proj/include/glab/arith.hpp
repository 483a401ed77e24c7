#pragma once

#include <eigen3/Eigen/Core>
#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace glab {

/// Exact arbitrary-precision integer. All arithmetic in this library is
/// exact; there is no floating point anywhere.
using Int = mpz_class;

}  // namespace glab

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace glab {

/// Coefficient ring: the integers (modulus 0) or the residue ring Z/n.
struct Ring {
  Int modulus = 0;

  Ring() = default;
  explicit Ring(Int n) : modulus(std::move(n)) {
    if (modulus < 0) throw std::invalid_argument("Ring: modulus must be >= 0");
  }

  bool is_z() const { return modulus == 0; }
  bool operator==(const Ring&) const = default;
};

inline Ring ring_z() { return Ring{}; }
inline Ring ring_zn(const Int& n) { return Ring(n); }

/// Canonical residue in [0, n); identity when n == 0.
inline Int reduce(const Int& x, const Int& n) {
  if (n == 0) return x;
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline Int reduce(const Int& x, const Ring& ring) { return reduce(x, ring.modulus); }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// g = gcd(a, b) together with u, v such that u*a + v*b = g.
inline Int gcdext(const Int& a, const Int& b, Int& u, Int& v) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool is_prime(const Int& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace glab
