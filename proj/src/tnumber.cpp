#include "maxclass/tnumber.hpp"

#include <bit>
#include <limits>

#include "maxclass/errors.hpp"

namespace maxclass {

namespace {

BigInt factorial(std::int64_t k) {
  BigInt f = 1;
  for (std::int64_t i = 2; i <= k; ++i) f *= i;
  return f;
}

void check_tn_args(std::int64_t k, const BigInt& j) {
  if (k < 0) throw usage_error("t_number: k must be >= 0");
  if (j < 0) throw usage_error("t_number: j must be >= 0");
}

void check_modulus(std::int64_t p, int m) {
  if (p < 2) throw usage_error("t_number_mod: p must be a prime >= 2");
  if (m < 1) throw usage_error("t_number_mod: modulus exponent must be >= 1");
}

}  // namespace

BigInt t_number(std::int64_t k, const BigInt& j) {
  check_tn_args(k, j);
  if (k == 0) return 1;
  if (j == 0) return 0;
  // j (j+1) ... (j+k-1) / k!, dividing as we go to keep factors small.
  // After multiplying i+1 consecutive integers the product is divisible
  // by (i+1)!.
  BigInt numer = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    numer *= j + i;
    numer /= i + 1;
  }
  return numer;
}

BigInt t_number_mod(std::int64_t k, const BigInt& j, std::int64_t p, int m) {
  check_tn_args(k, j);
  check_modulus(p, m);
  BigInt modulus = boost::multiprecision::pow(BigInt(p), m);
  if (k == 0) return BigInt(1) % modulus;
  if (j == 0) return 0;
  BigInt numer = 1;
  for (std::int64_t i = 0; i < k; ++i) numer *= j + i;
  BigInt value = numer / factorial(k);
  return value % modulus;
}

std::int64_t t_number_mod_i64(std::int64_t k, std::int64_t j, std::int64_t p,
                              int m) {
  check_tn_args(k, BigInt(j));
  check_modulus(p, m);
  const std::int64_t modulus = pow_i64(p, m);
  if (k == 0) return 1 % modulus;
  if (j == 0) return 0;
  // The product of k factors each <= j+k-1 fits in unsigned 128 bits when
  // k * bits(j+k) stays under 126; k! fits an int64 up to k = 20.
  const auto bits =
      std::bit_width(static_cast<std::uint64_t>(j) + static_cast<std::uint64_t>(k));
  if (k <= 20 && k * (bits + 1) <= 126) {
    unsigned __int128 numer = 1;
    for (std::int64_t i = 0; i < k; ++i)
      numer *= static_cast<unsigned __int128>(j + i);
    unsigned __int128 fact = 1;
    for (std::int64_t i = 2; i <= k; ++i) fact *= static_cast<unsigned>(i);
    return static_cast<std::int64_t>((numer / fact) %
                                     static_cast<unsigned __int128>(modulus));
  }
  return static_cast<std::int64_t>(t_number_mod(k, BigInt(j), p, m));
}

BigInt gamma_mod(std::int64_t k, const BigInt& j, const BigInt& alpha, int m,
                 std::int64_t p, int cap) {
  if (p < 2) throw usage_error("gamma_mod: p must be a prime >= 2");
  if (alpha % p == 0) throw usage_error("gamma_mod: alpha must be coprime to p");
  if (m < 1 || m > cap)
    throw usage_error("gamma_mod: need 1 <= m <= modulus exponent");
  if (j < 1) throw usage_error("gamma_mod: j must be >= 1");
  BigInt modulus = boost::multiprecision::pow(BigInt(p), cap);
  BigInt value = alpha % modulus;
  if (value < 0) value += modulus;
  value = value * boost::multiprecision::pow(BigInt(p), m) % modulus;
  value = value * t_number_mod(k, j - 1, p, cap) % modulus;
  return value;
}

std::int64_t pow_i64(std::int64_t base, int exp) {
  if (base < 0 || exp < 0) throw usage_error("pow_i64: negative input");
  std::int64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::int64_t>::max() / base)
      throw usage_error("pow_i64: overflow, parameters too large");
    result *= base;
  }
  return result;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t mod) {
  return static_cast<std::int64_t>(static_cast<unsigned __int128>(a) *
                                   static_cast<unsigned __int128>(b) %
                                   static_cast<unsigned __int128>(mod));
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  if (exp < 0) throw usage_error("pow_mod: negative exponent");
  std::int64_t result = 1 % mod;
  std::int64_t acc = base % mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, acc, mod);
    acc = mul_mod(acc, acc, mod);
    exp >>= 1;
  }
  return result;
}

int valuation(const BigInt& x, std::int64_t p) {
  if (x == 0) return -1;
  BigInt v = x < 0 ? BigInt(-x) : x;
  int count = 0;
  while (v % p == 0) {
    v /= p;
    ++count;
  }
  return count;
}

}  // namespace maxclass
