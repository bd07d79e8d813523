#include "maxclass/zeta.hpp"

#include <algorithm>

#include "maxclass/errors.hpp"

namespace maxclass {

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::string poly_str(const Poly& a) {
  std::string s;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    BigInt c = a[i];
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    const bool show_coeff = (c != 1 || i == 0);
    if (show_coeff) s += c.str();
    if (i >= 1) {
      if (show_coeff) s += "*";
      s += "t";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    first = false;
  }
  return first ? "0" : s;
}

std::string provenance_str(Provenance p) {
  return p == Provenance::paper_proven ? "paper-proven" : "conjectural-uniform";
}

namespace {

bool is_prime_i64(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

RationalSeries local_closed_form(int n, std::int64_t p) {
  if (n < 2) throw usage_error("local_closed_form: n must be >= 2");
  if (!is_prime_i64(p)) throw usage_error("local_closed_form: p must be prime");
  RationalSeries r;
  r.prime = p;
  const BigInt growth = boost::multiprecision::pow(BigInt(p), n - 2);
  if (growth == 1) {
    // (1-t)^2 / ((1-t)(1-pt)) with the shared factor cancelled.
    r.numer = {1, -1};
    r.denom = {1, -p};
  } else {
    r.numer = {1, -2, 1};
    r.denom = poly_mul({1, -growth}, {1, BigInt(-p)});
  }
  const bool proven = p >= n || n == static_cast<int>(p) + 1 ||
                      (n == 4 && p == 2);
  r.provenance =
      proven ? Provenance::paper_proven : Provenance::conjectural_uniform;
  return r;
}

std::vector<BigInt> expand(const RationalSeries& r, int K) {
  if (K < 0) throw usage_error("expand: term count must be >= 0");
  if (r.denom.empty() || r.denom[0] != 1)
    throw usage_error("expand: denominator must have constant term 1");
  std::vector<BigInt> c(static_cast<std::size_t>(K) + 1, BigInt(0));
  for (int k = 0; k <= K; ++k) {
    BigInt acc = k < static_cast<int>(r.numer.size()) ? r.numer[k] : BigInt(0);
    for (int i = 1; i < static_cast<int>(r.denom.size()) && i <= k; ++i)
      acc -= r.denom[static_cast<std::size_t>(i)] *
             c[static_cast<std::size_t>(k - i)];
    c[static_cast<std::size_t>(k)] = acc;
  }
  return c;
}

const BigInt& GlobalCoefficients::r(std::int64_t m) const {
  if (m < 1 || m > bound)
    throw usage_error("GlobalCoefficients: index out of range");
  return values[static_cast<std::size_t>(m - 1)];
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<bool> sieve(static_cast<std::size_t>(std::max<std::int64_t>(
                              bound + 1, 2)),
                          true);
  std::vector<std::int64_t> primes;
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (!sieve[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i)
      sieve[static_cast<std::size_t>(j)] = false;
  }
  return primes;
}

std::vector<int> moebius_up_to(std::int64_t bound) {
  std::vector<int> mu(static_cast<std::size_t>(bound) + 1, 1);
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  std::vector<std::int64_t> primes;
  // linear sieve
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (!composite[static_cast<std::size_t>(i)]) {
      primes.push_back(i);
      mu[static_cast<std::size_t>(i)] = -1;
    }
    for (std::int64_t p : primes) {
      if (i * p > bound) break;
      composite[static_cast<std::size_t>(i * p)] = true;
      if (i % p == 0) {
        mu[static_cast<std::size_t>(i * p)] = 0;
        break;
      }
      mu[static_cast<std::size_t>(i * p)] = -mu[static_cast<std::size_t>(i)];
    }
  }
  if (bound >= 1) mu[1] = 1;
  return mu;
}

namespace {

void check_global_args(int n, std::int64_t bound) {
  if (n < 2 || n > 4)
    throw usage_error("global coefficients: proven only for n in 2..4");
  if (bound < 1) throw usage_error("global coefficients: bound must be >= 1");
}

}  // namespace

std::vector<BigInt> global_by_euler_product(int n, std::int64_t bound) {
  check_global_args(n, bound);
  std::vector<BigInt> r(static_cast<std::size_t>(bound), BigInt(0));
  r[0] = 1;
  for (std::int64_t p : primes_up_to(bound)) {
    int max_k = 0;
    std::int64_t pk = 1;
    while (pk <= bound / p) {
      pk *= p;
      ++max_k;
    }
    const auto local = expand(local_closed_form(n, p), max_k);
    // multiply the Dirichlet series by the local factor
    std::vector<BigInt> next(r.size(), BigInt(0));
    for (std::int64_t m = 1; m <= bound; ++m) {
      if (r[static_cast<std::size_t>(m - 1)] == 0) continue;
      std::int64_t q = 1;
      for (int k = 0; q <= bound / m; ++k, q *= p) {
        next[static_cast<std::size_t>(m * q - 1)] +=
            r[static_cast<std::size_t>(m - 1)] *
            local[static_cast<std::size_t>(k)];
        if (q > bound / p) break;
      }
    }
    r = std::move(next);
  }
  return r;
}

std::vector<BigInt> global_by_convolution(int n, std::int64_t bound) {
  check_global_args(n, bound);
  auto dirichlet = [&](const std::vector<BigInt>& a,
                       const std::vector<BigInt>& b) {
    std::vector<BigInt> out(static_cast<std::size_t>(bound), BigInt(0));
    for (std::int64_t d = 1; d <= bound; ++d) {
      if (a[static_cast<std::size_t>(d - 1)] == 0) continue;
      for (std::int64_t m = d; m <= bound; m += d)
        out[static_cast<std::size_t>(m - 1)] +=
            a[static_cast<std::size_t>(d - 1)] *
            b[static_cast<std::size_t>(m / d - 1)];
    }
    return out;
  };
  std::vector<BigInt> id1(static_cast<std::size_t>(bound));
  std::vector<BigInt> idn2(static_cast<std::size_t>(bound));
  std::vector<BigInt> mu_big(static_cast<std::size_t>(bound));
  const auto mu = moebius_up_to(bound);
  for (std::int64_t m = 1; m <= bound; ++m) {
    id1[static_cast<std::size_t>(m - 1)] = m;
    idn2[static_cast<std::size_t>(m - 1)] =
        boost::multiprecision::pow(BigInt(m), n - 2);
    mu_big[static_cast<std::size_t>(m - 1)] = mu[static_cast<std::size_t>(m)];
  }
  return dirichlet(dirichlet(id1, idn2), dirichlet(mu_big, mu_big));
}

GlobalCoefficients global_coefficients(int n, std::int64_t bound) {
  auto euler = global_by_euler_product(n, bound);
  auto conv = global_by_convolution(n, bound);
  for (std::int64_t m = 1; m <= bound; ++m)
    if (euler[static_cast<std::size_t>(m - 1)] !=
        conv[static_cast<std::size_t>(m - 1)])
      throw internal_error(
          "global_coefficients: Euler product and Dirichlet convolution "
          "disagree at m = " +
          std::to_string(m));
  GlobalCoefficients out;
  out.n = n;
  out.bound = bound;
  out.values = std::move(euler);
  return out;
}

}  // namespace maxclass
