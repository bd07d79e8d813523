#include "maxclass/root_of_unity.hpp"

#include <algorithm>
#include <numeric>

#include "maxclass/errors.hpp"

namespace maxclass {

RootOfUnity::RootOfUnity(std::int64_t p_, int w_, std::int64_t e_)
    : p(p_), w(w_), e(e_) {
  if (p < 2) throw usage_error("RootOfUnity: p must be a prime >= 2");
  if (w < 1) throw usage_error("RootOfUnity: working modulus exponent >= 1");
  const std::int64_t m = modulus();
  e %= m;
  if (e < 0) e += m;
}

int RootOfUnity::depth() const {
  if (e == 0) return 0;
  std::int64_t v = e;
  int val = 0;
  while (v % p == 0) {
    v /= p;
    ++val;
  }
  return w - val;
}

RootOfUnity RootOfUnity::rescaled(int w2) const {
  if (w2 < w) throw usage_error("RootOfUnity::rescaled: cannot shrink modulus");
  return {p, w2, e * pow_i64(p, w2 - w)};
}

std::string RootOfUnity::str() const {
  if (e == 0) return "1";
  const std::int64_t m = modulus();
  const std::int64_t g = std::gcd(e, m);
  return "e(" + std::to_string(e / g) + "/" + std::to_string(m / g) + ")";
}

namespace {

std::pair<RootOfUnity, RootOfUnity> to_common(const RootOfUnity& a,
                                              const RootOfUnity& b) {
  if (a.p != b.p)
    throw usage_error("RootOfUnity: mismatched primes " + std::to_string(a.p) +
                      " vs " + std::to_string(b.p));
  const int w = std::max(a.w, b.w);
  return {a.rescaled(w), b.rescaled(w)};
}

}  // namespace

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
  auto [x, y] = to_common(a, b);
  return x.e == y.e;
}

RootOfUnity mul(const RootOfUnity& a, const RootOfUnity& b) {
  auto [x, y] = to_common(a, b);
  return {x.p, x.w, (x.e + y.e) % x.modulus()};
}

RootOfUnity inverse(const RootOfUnity& x) {
  return {x.p, x.w, x.e == 0 ? 0 : x.modulus() - x.e};
}

RootOfUnity pow(const RootOfUnity& x, std::int64_t n) {
  const std::int64_t m = x.modulus();
  std::int64_t r = n % m;
  if (r < 0) r += m;
  return {x.p, x.w, mul_mod(x.e, r, m)};
}

RootOfUnity pow(const RootOfUnity& x, const BigInt& n) {
  const std::int64_t m = x.modulus();
  BigInt r = n % m;
  if (r < 0) r += m;
  return pow(x, static_cast<std::int64_t>(r));
}

std::vector<RootOfUnity> roots_of_power(const RootOfUnity& c, int N) {
  if (N < 0) throw usage_error("roots_of_power: N must be >= 0");
  if (N > c.w)
    throw usage_error("roots_of_power: level exceeds working modulus");
  const std::int64_t pn = pow_i64(c.p, N);
  if (c.e % pn != 0) return {};
  // Solutions of p^N * e = e_c (mod p^w): base e_c / p^N plus any multiple
  // of p^(w-N).  The base is below p^(w-N), so this order is ascending.
  const std::int64_t step = pow_i64(c.p, c.w - N);
  std::vector<RootOfUnity> out;
  out.reserve(static_cast<std::size_t>(pn));
  for (std::int64_t r = 0; r < pn; ++r)
    out.push_back(RootOfUnity{c.p, c.w, c.e / pn + r * step});
  return out;
}

}  // namespace maxclass
