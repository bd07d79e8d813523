#ifndef MAXCLASS_ROOT_OF_UNITY_HPP_
#define MAXCLASS_ROOT_OF_UNITY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "maxclass/tnumber.hpp"

namespace maxclass {

// A p-power root of unity exp(2*pi*i * e / p^w), stored exactly as the
// exponent residue e in [0, p^w).  All arithmetic is exponent arithmetic;
// no floating point is involved.  Values at different working moduli w
// compare equal after rescaling to a common w.
struct RootOfUnity {
  std::int64_t p = 2;  // prime
  int w = 1;           // working modulus exponent
  std::int64_t e = 0;  // exponent residue in [0, p^w)

  RootOfUnity() = default;
  RootOfUnity(std::int64_t p_, int w_, std::int64_t e_);

  static RootOfUnity one(std::int64_t p, int w) { return {p, w, 0}; }

  std::int64_t modulus() const { return pow_i64(p, w); }
  bool is_one() const { return e == 0; }

  // Depth: 0 for the identity, otherwise the k with this a primitive
  // p^k-th root of unity (w minus the p-adic valuation of e).
  int depth() const;

  // Same value at a larger working modulus (exact).
  RootOfUnity rescaled(int w2) const;

  // Reduced-fraction display, e.g. "e(3/8)" for exp(2*pi*i*3/8).
  std::string str() const;
};

bool operator==(const RootOfUnity& a, const RootOfUnity& b);
inline bool operator!=(const RootOfUnity& a, const RootOfUnity& b) {
  return !(a == b);
}

RootOfUnity mul(const RootOfUnity& a, const RootOfUnity& b);
RootOfUnity inverse(const RootOfUnity& x);
RootOfUnity pow(const RootOfUnity& x, std::int64_t n);
RootOfUnity pow(const RootOfUnity& x, const BigInt& n);

// All x with x^(p^N) = c at c's working modulus: exactly p^N solutions when
// p^N divides c's exponent residue, none otherwise.  Sorted by exponent.
std::vector<RootOfUnity> roots_of_power(const RootOfUnity& c, int N);

}  // namespace maxclass

#endif  // MAXCLASS_ROOT_OF_UNITY_HPP_
