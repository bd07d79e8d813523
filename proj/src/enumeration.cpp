#include "maxclass/enumeration.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include <boost/rational.hpp>

#include "maxclass/errors.hpp"

namespace maxclass {

namespace {

using Rational = boost::rational<std::int64_t>;

// Solutions of the row-i closure condition given lambda_{i+1..n}: the p^N
// roots x with x^(p^N) equal to the inverse tail product
// prod_{k>i} lambda_k^{T_{k-i+1}(p^N-1)}.
std::vector<RootOfUnity> closure_solutions(
    const GroupSpec& spec, int i, const std::vector<RootOfUnity>& tail) {
  const int w = spec.working_exponent();
  const std::int64_t q = spec.dimension() - 1;
  RootOfUnity c = RootOfUnity::one(spec.p, w);
  for (int k = i + 1; k <= spec.n; ++k) {
    const std::int64_t exp = t_number_mod_i64(k - i + 1, q, spec.p, w);
    c = mul(c, pow(tail[static_cast<std::size_t>(spec.n - k)], exp));
  }
  auto roots = roots_of_power(inverse(c), spec.N);
  if (roots.empty())
    throw internal_error(
        "enumerate_tuples: closure condition unsolvable at working modulus; "
        "this cannot happen at w = N + n");
  return roots;
}

// Depth-first over rows n down to 2.  `tail` holds lambda_n..lambda_i.
void enumerate_below(const GroupSpec& spec, std::vector<RootOfUnity>& tail,
                     const std::function<void(const LambdaTuple&)>& sink) {
  const int i = spec.n - static_cast<int>(tail.size());  // next row to fill
  if (i < 2) {
    std::vector<RootOfUnity> lambdas(tail.rbegin(), tail.rend());
    sink(LambdaTuple(spec, std::move(lambdas)));
    return;
  }
  for (const auto& root : closure_solutions(spec, i, tail)) {
    tail.push_back(root);
    enumerate_below(spec, tail, sink);
    tail.pop_back();
  }
}

std::vector<RootOfUnity> lambda_n_candidates(const GroupSpec& spec) {
  return roots_of_power(RootOfUnity::one(spec.p, spec.working_exponent()),
                        spec.N);
}

void enumerate_range(const GroupSpec& spec,
                     const std::vector<RootOfUnity>& outer, std::size_t begin,
                     std::size_t end,
                     const std::function<void(const LambdaTuple&)>& sink) {
  std::vector<RootOfUnity> tail;
  tail.reserve(static_cast<std::size_t>(spec.n - 1));
  for (std::size_t idx = begin; idx < end; ++idx) {
    tail.push_back(outer[idx]);
    if (spec.n == 2) {
      sink(LambdaTuple(spec, {outer[idx]}));
    } else {
      enumerate_below(spec, tail, sink);
    }
    tail.pop_back();
  }
}

}  // namespace

void enumerate_tuples(const GroupSpec& spec,
                      const std::function<void(const LambdaTuple&)>& sink) {
  if (spec.N < 1) throw usage_error("enumerate_tuples: requires N >= 1");
  const auto outer = lambda_n_candidates(spec);
  enumerate_range(spec, outer, 0, outer.size(), sink);
}

std::vector<LambdaTuple> enumerate_tuples(const GroupSpec& spec) {
  std::vector<LambdaTuple> out;
  enumerate_tuples(spec, [&](const LambdaTuple& t) { out.push_back(t); });
  return out;
}

LambdaTuple shout_shift(const LambdaTuple& t, std::int64_t shift) {
  const std::int64_t period = t.spec.dimension();
  std::int64_t s = shift % period;
  if (s < 0) s += period;
  std::vector<RootOfUnity> shifted;
  shifted.reserve(t.lambdas.size());
  for (int i = 2; i <= t.spec.n; ++i)
    shifted.push_back(lambda_entry(t, i, s + 1));
  return LambdaTuple(t.spec, std::move(shifted));
}

std::vector<LambdaTuple> orbit_members(const LambdaTuple& t) {
  std::vector<LambdaTuple> members{t};
  for (LambdaTuple cur = shout_shift(t, 1); cur != t;
       cur = shout_shift(cur, 1)) {
    members.push_back(cur);
    if (members.size() > static_cast<std::size_t>(t.spec.dimension()))
      throw internal_error("orbit_members: orbit exceeds the acting group");
  }
  return members;
}

ShoutOrbit orbit_of(const LambdaTuple& t) {
  auto members = orbit_members(t);
  auto rep = *std::min_element(members.begin(), members.end());
  return ShoutOrbit{std::move(rep), static_cast<std::int64_t>(members.size())};
}

std::int64_t orbit_size_fast(const LambdaTuple& t) {
  const std::int64_t size = pow_i64(t.spec.p, minimal_period_exponent(t, 2));
  if (t.spec.p >= t.spec.n - 1 && is_irreducible(t)) {
    int max_depth = 0;
    for (int i = 3; i <= t.spec.n; ++i)
      max_depth = std::max(max_depth, t.lambda(i).depth());
    if (size != pow_i64(t.spec.p, max_depth))
      throw internal_error(
          "orbit_size_fast: period exponent disagrees with the depth formula "
          "at p >= n-1 for " +
          t.str());
  }
  return size;
}

namespace {

struct PartialCount {
  std::int64_t tuples = 0;
  std::int64_t irreducible = 0;
  Rational orbits{0};
  std::set<std::vector<std::int64_t>> representatives;
  std::map<CaseLabel, Rational> by_case;

  void merge(PartialCount&& other) {
    tuples += other.tuples;
    irreducible += other.irreducible;
    orbits += other.orbits;
    representatives.merge(std::move(other.representatives));
    for (auto& [label, count] : other.by_case) by_case[label] += count;
  }
};

std::vector<std::int64_t> exponent_key(const LambdaTuple& t) {
  std::vector<std::int64_t> key;
  key.reserve(t.lambdas.size());
  for (const auto& l : t.lambdas) key.push_back(l.e);
  return key;
}

PartialCount scan(const GroupSpec& spec, const std::vector<RootOfUnity>& outer,
                  std::size_t begin, std::size_t end, bool classify) {
  PartialCount part;
  enumerate_range(spec, outer, begin, end, [&](const LambdaTuple& t) {
    ++part.tuples;
    if (!is_irreducible(t)) return;
    ++part.irreducible;
    const Rational weight{1, orbit_size_fast(t)};
    part.orbits += weight;
    part.representatives.insert(exponent_key(orbit_of(t).representative));
    if (classify) part.by_case[classify_case(t)] += weight;
  });
  return part;
}

std::int64_t rational_to_count(const Rational& r, const char* what) {
  if (r.denominator() != 1)
    throw internal_error(std::string(what) +
                         ": orbit aggregate is not an integer");
  return r.numerator();
}

PartialCount scan_all(const GroupSpec& spec, int jobs, bool classify) {
  if (spec.N < 1) throw usage_error("count: requires N >= 1");
  const auto outer = lambda_n_candidates(spec);
  if (jobs < 1) jobs = 1;
  jobs = std::min<int>(jobs, static_cast<int>(outer.size()));
  if (jobs == 1) return scan(spec, outer, 0, outer.size(), classify);

  std::vector<PartialCount> parts(static_cast<std::size_t>(jobs));
  std::vector<std::thread> workers;
  const std::size_t chunk = (outer.size() + jobs - 1) / jobs;
  for (int job = 0; job < jobs; ++job) {
    const std::size_t begin = std::min(outer.size(), job * chunk);
    const std::size_t end = std::min(outer.size(), begin + chunk);
    workers.emplace_back([&, job, begin, end] {
      parts[static_cast<std::size_t>(job)] =
          scan(spec, outer, begin, end, classify);
    });
  }
  for (auto& worker : workers) worker.join();
  PartialCount total;
  for (auto& part : parts) total.merge(std::move(part));
  return total;
}

}  // namespace

EnumerationReport count_report(const GroupSpec& spec, int jobs) {
  if (spec.N == 0) return EnumerationReport{1, 1, 1};
  auto part = scan_all(spec, jobs, /*classify=*/false);
  EnumerationReport report;
  report.tuples_total = part.tuples;
  report.irreducible_total = part.irreducible;
  report.isoclasses = rational_to_count(part.orbits, "count_report");
  const auto by_representative =
      static_cast<std::int64_t>(part.representatives.size());
  if (report.isoclasses != by_representative)
    throw internal_error(
        "count_report: rational aggregation (" +
        std::to_string(report.isoclasses) +
        ") disagrees with representative deduplication (" +
        std::to_string(by_representative) + ")");
  return report;
}

std::int64_t count_twist_isoclasses(const GroupSpec& spec, int jobs) {
  return count_report(spec, jobs).isoclasses;
}

std::string CaseLabel::str() const {
  std::string s = "C" + std::to_string(major);
  if (minor > 0) s += "." + std::to_string(minor);
  return s;
}

bool operator==(const CaseLabel& a, const CaseLabel& b) {
  return a.family == b.family && a.major == b.major && a.minor == b.minor;
}

bool operator<(const CaseLabel& a, const CaseLabel& b) {
  if (a.family != b.family) return a.family < b.family;
  if (a.major != b.major) return a.major < b.major;
  return a.minor < b.minor;
}

namespace {

CaseLabel classify_m4_at_2(const LambdaTuple& t) {
  const int N = t.spec.N;
  const int s4 = t.lambda(4).depth();
  const int s3 = t.lambda(3).depth();
  const int s2 = t.lambda(2).depth();
  CaseLabel label;
  label.family = CaseLabel::Family::m4_at_2;
  if (s4 == N) {
    label.major = 1;
  } else if (s4 == N - 1) {
    label.major = s3 == N ? 2 : 3;
  } else if (s3 == N) {
    label.major = 4;
  } else if (s3 == N - 1) {
    label.major = s2 == N ? 5 : 7;
  } else {
    label.major = s2 == N ? 6 : 8;
  }
  if (label.major == 6) {
    if (s4 == 0)
      label.minor = 4;
    else if (s3 > s4 + 1)
      label.minor = 1;
    else if (s3 == s4 + 1)
      label.minor = 3;
    else
      label.minor = 2;
  } else if (label.major == 7) {
    label.minor = s4 <= N - 3 ? 1 : 2;
  }
  return label;
}

CaseLabel classify_mp1(const LambdaTuple& t) {
  const int n = t.spec.n;
  const int N = t.spec.N;
  CaseLabel label;
  label.family = CaseLabel::Family::mp1;
  if (t.lambda(n).depth() == N) {
    label.major = 1;
    return label;
  }
  label.major = 2;
  label.minor = 2;
  for (int i = 3; i <= n - 1; ++i)
    if (t.lambda(i).depth() == N) label.minor = 1;
  return label;
}

}  // namespace

CaseLabel classify_case(const LambdaTuple& t) {
  const auto& spec = t.spec;
  if (spec.n == 4 && spec.p == 2) {
    if (spec.N < 2)
      throw usage_error("classify_case: M_4 at p=2 needs level N >= 2");
    return classify_m4_at_2(t);
  }
  if (spec.n == spec.p + 1) return classify_mp1(t);
  throw usage_error(
      "classify_case: case tables exist only for M_4 at p=2 and M_{p+1} at p");
}

CaseCountReport case_counts(const GroupSpec& spec) {
  // Validate the family up front so usage errors beat long enumerations.
  if (!((spec.n == 4 && spec.p == 2 && spec.N >= 2) || spec.n == spec.p + 1))
    throw usage_error(
        "case_counts: case tables exist only for M_4 at p=2 and M_{p+1} at p");
  auto part = scan_all(spec, 1, /*classify=*/true);

  CaseCountReport report;
  if (spec.n == 4 && spec.p == 2) {
    for (int major = 1; major <= 8; ++major)
      report.major["C" + std::to_string(major)] = 0;
  } else {
    report.major["C1"] = 0;
    report.major["C2"] = 0;
    report.sub["C2.1"] = 0;
    report.sub["C2.2"] = 0;
  }
  for (const auto& [label, weight] : part.by_case) {
    const std::int64_t count = rational_to_count(weight, "case_counts");
    CaseLabel major_only = label;
    major_only.minor = 0;
    report.major[major_only.str()] += count;
    if (label.minor > 0) report.sub[label.str()] += count;
    report.total += count;
  }
  const std::int64_t expected = rational_to_count(part.orbits, "case_counts");
  if (report.total != expected)
    throw internal_error("case_counts: per-case counts do not sum to the "
                         "isoclass total");
  return report;
}

}  // namespace maxclass
