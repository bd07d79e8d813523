#ifndef MAXCLASS_TNUMBER_HPP_
#define MAXCLASS_TNUMBER_HPP_

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace maxclass {

using BigInt = boost::multiprecision::cpp_int;

// The iterated-sum numbers T_k(j): T_0(j) = 1, T_k(0) = 0 for k >= 1, and
// T_k(j) = T_k(j-1) + T_{k-1}(j).  Closed form T_k(j) = binomial(j+k-1, k)
// = j(j+1)...(j+k-1) / k!, i.e. the number of multisets of size k drawn
// from j symbols.  They appear as diagonal-entry exponents throughout the
// standard-form machinery.
BigInt t_number(std::int64_t k, const BigInt& j);

// T_k(j) mod p^m, computed exactly (numerator product over k factors divided
// by k!, an exact division) and then reduced.  Modular inverses are never
// used: p <= k would make 1/k! meaningless mod p^m.
BigInt t_number_mod(std::int64_t k, const BigInt& j, std::int64_t p, int m);

// Fast path for the working sizes of this library: requires p^m < 2^62.
std::int64_t t_number_mod_i64(std::int64_t k, std::int64_t j, std::int64_t p,
                              int m);

// Gamma(k, j) = alpha * p^m * T_k(j-1) mod p^cap.  Requires p coprime to
// alpha, 1 <= m <= cap, j >= 1.
BigInt gamma_mod(std::int64_t k, const BigInt& j, const BigInt& alpha, int m,
                 std::int64_t p, int cap);

// p^e as int64, throwing usage_error on overflow.
std::int64_t pow_i64(std::int64_t base, int exp);

// Modular helpers on int64 with 128-bit intermediates.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t mod);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);

// p-adic valuation; v_p(0) is reported as -1 (infinite).
int valuation(const BigInt& x, std::int64_t p);

}  // namespace maxclass

#endif  // MAXCLASS_TNUMBER_HPP_
