#include "cohcfg/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <numeric>
#include <sstream>
#include <thread>

#include "cohcfg/errors.hpp"
#include "cohcfg/tableau.hpp"

namespace cohcfg {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t p = 3; p * p <= n; p += 2)
    if (n % p == 0) return false;
  return true;
}

std::vector<std::int64_t> distinct_prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool is_prime_power(std::int64_t q) {
  return q >= 1 && distinct_prime_divisors(q).size() <= 1;
}

SieveParameters SieveParameters::create(std::int64_t m, std::int64_t r) {
  if (m < 3 || m >= 65536 || !is_prime(m))
    throw BadParameters("m must be an odd prime below 65536");
  if (r <= 2) throw BadParameters("r must be at least 3");
  if ((m - 1) % (r - 1) != 0) throw BadParameters("r-1 must divide m-1");
  SieveParameters params;
  params.m = m;
  params.r = r;
  params.k = (m - 1) / (r - 1);
  params.prime_divisors = distinct_prime_divisors(params.k);
  params.e = static_cast<std::int64_t>(params.prime_divisors.size());
  return params;
}

DegreeSplit split_degrees(std::int64_t k, const std::vector<std::int64_t>& degrees) {
  DegreeSplit split;
  for (std::int64_t d : degrees) {
    if (d % k != 0) {
      split.s1.push_back(d);
      split.s1_sum += d;
    } else if (d == k) {
      split.s2.push_back(d);
    } else {
      split.s3.push_back(d);
    }
  }
  return split;
}

namespace {

bool admissible(std::int64_t k, const std::vector<std::int64_t>& chosen, std::int64_t d) {
  if ((d * (d - 1)) % k != 0) return false;
  for (std::int64_t prev : chosen)
    if ((prev * d) % k != 0) return false;
  return true;
}

void extend(std::int64_t k, std::int64_t slots, std::int64_t remaining, std::int64_t min_value,
            std::vector<std::int64_t>& chosen, std::vector<std::vector<std::int64_t>>& found) {
  if (slots == 1) {
    if (remaining >= min_value && admissible(k, chosen, remaining)) {
      chosen.push_back(remaining);
      found.push_back(chosen);
      chosen.pop_back();
    }
    return;
  }
  for (std::int64_t d = min_value; d * slots <= remaining; ++d) {
    if (!admissible(k, chosen, d)) continue;
    chosen.push_back(d);
    extend(k, slots - 1, remaining - d, d, chosen, found);
    chosen.pop_back();
  }
}

std::string join(const std::vector<std::int64_t>& values) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
  out << "}";
  return out.str();
}

// R4 through R12 and the tableau, on an ascending positive multiset.
std::optional<Elimination> run_chain(const SieveParameters& params,
                                     const std::vector<std::int64_t>& degrees) {
  const std::int64_t k = params.k;
  const DegreeSplit split = split_degrees(k, degrees);
  const std::int64_t s1_size = static_cast<std::int64_t>(split.s1.size());
  const std::int64_t s2_size = static_cast<std::int64_t>(split.s2.size());
  const std::int64_t s3_size = static_cast<std::int64_t>(split.s3.size());

  // s3 members are at least 2k and s2 members exactly k, so the split can
  // never account for more than the multiset's total.
  const std::int64_t total = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
  if (2 * k * s3_size + k * s2_size + split.s1_sum > total)
    throw InternalCheckFailure("degree split exceeds the multiset total");

  for (std::int64_t p : params.prime_divisors) {
    std::int64_t not_divisible = 0;
    for (std::int64_t d : degrees)
      if (d % p != 0) ++not_divisible;
    if (not_divisible != 1)
      return Elimination{"R4", {{"p", p}, {"not_divisible", not_divisible}}};
  }

  if (s1_size > params.e) return Elimination{"R5", {{"s1_size", s1_size}, {"e", params.e}}};

  const std::int64_t lhs = k * s3_size + split.s1_sum;
  const std::int64_t bound = 1 + k * (params.e - 1);
  if (lhs > bound) return Elimination{"R6", {{"lhs", lhs}, {"bound", bound}}};

  if (degrees.back() > k * degrees.front())
    return Elimination{"R7", {{"max", degrees.back()}, {"k_times_min", k * degrees.front()}}};

  for (std::size_t a = 0; a < degrees.size(); ++a)
    for (std::size_t b = a + 1; b < degrees.size(); ++b) {
      const std::int64_t lo = degrees[a], hi = degrees[b];
      if (lo <= 1 || lo >= hi) continue;
      if (std::gcd(lo, hi) == 1 && lo + hi >= k + 1)
        return Elimination{
            "R8", {{"d_s", lo}, {"d_t", hi}, {"sum", lo + hi}, {"threshold", k + 1}}};
    }

  if (k % 2 == 1)
    for (std::int64_t d : degrees) {
      if ((d * (d - 1)) % k != 0) continue;
      const std::int64_t paths = d * (d - 1) / k;
      const std::int64_t limit = 2 * d / std::gcd(d, k);
      if (0 < paths && paths < limit)
        return Elimination{"R11", {{"d", d}, {"paths", paths}, {"limit", limit}}};
    }

  for (std::int64_t d : degrees) {
    if ((d * (d - 1)) % k != 0) continue;
    const std::int64_t paths = d * (d - 1) / k;
    const std::int64_t quotient = d / std::gcd(d, k);
    if (paths % quotient != 0)
      return Elimination{"R12", {{"d", d}, {"quotient", quotient}, {"paths", paths}}};
  }

  if (params.r == 3 && k % 2 == 0 && degrees.size() == 3) {
    const std::int64_t sum = degrees[0] + degrees[1] + degrees[2];
    if (sum == 2 * k + 1 && is_prime(sum)) {
      const TableauInstance instance =
          TableauInstance::create({degrees[0], degrees[1], degrees[2]}, k);
      const TableauResult result = eliminate(instance);
      if (!result.feasible())
        return Elimination{"R10",
                           {{"cell_1", degrees[0]},
                            {"cell_2", degrees[1]},
                            {"cell_3", degrees[2]},
                            {"branches", static_cast<std::int64_t>(result.trace.size())}}};
    }
  }

  return std::nullopt;
}

std::vector<std::int64_t> sorted_positive(const std::vector<std::int64_t>& degrees) {
  std::vector<std::int64_t> sorted = degrees;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || sorted.front() < 1) throw BadParameters("degrees must be positive");
  return sorted;
}

}  // namespace

std::vector<std::vector<std::int64_t>> candidate_multisets(const SieveParameters& params) {
  std::vector<std::vector<std::int64_t>> found;
  std::vector<std::int64_t> chosen;
  extend(params.k, params.r, params.m, 2, chosen, found);
  return found;
}

std::optional<Elimination> evaluate_candidate(const SieveParameters& params,
                                              const std::vector<std::int64_t>& degrees) {
  return run_chain(params, sorted_positive(degrees));
}

std::optional<Elimination> check_degree_multiset(const SieveParameters& params,
                                                 const std::vector<std::int64_t>& degrees) {
  const std::vector<std::int64_t> sorted = sorted_positive(degrees);
  const std::int64_t k = params.k;
  for (std::int64_t d : sorted)
    if ((d * (d - 1)) % k != 0)
      return Elimination{"R2", {{"d", d}, {"d_squared_mod_k", d * d % k}, {"d_mod_k", d % k}}};
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = a + 1; b < sorted.size(); ++b)
      if (sorted[a] * sorted[b] % k != 0)
        return Elimination{"R3",
                           {{"d", sorted[a]},
                            {"d_prime", sorted[b]},
                            {"product_mod_k", sorted[a] * sorted[b] % k}}};
  return run_chain(params, sorted);
}

SieveReport run_pipeline(const SieveParameters& params) {
  SieveReport report;
  report.params = params;

  const std::int64_t k = params.k;
  const KClass kclass = classify_single(k);
  const std::int64_t rank_threshold = k * k * (k + params.e - 2);
  if (kclass.form != "exceptional")
    report.theorem_case = "k=" + kclass.form;
  else if (params.r > rank_threshold)
    report.theorem_case = "rank-bound";
  else
    report.theorem_case = "exhaustive";

  std::vector<std::vector<std::int64_t>> settled;
  for (const std::vector<std::int64_t>& degrees : candidate_multisets(params)) {
    CandidateOutcome outcome;
    outcome.degrees = degrees;
    outcome.eliminated_by = evaluate_candidate(params, degrees);
    if (!outcome.eliminated_by)
      report.survivors.push_back(degrees);
    else if (outcome.eliminated_by->rule == "R10")
      settled.push_back(degrees);
    report.candidates.push_back(std::move(outcome));
  }
  report.forced = report.survivors.empty();

  if (params.r > rank_threshold) {
    std::ostringstream note;
    note << "r = " << params.r << " exceeds k^2*(k+e-2) = " << rank_threshold;
    report.notes.push_back(note.str());
  }

  if (k % 4 == 0 && k / 4 >= 2 && is_prime_power(k / 4)) {
    const std::int64_t q = k / 4;
    std::ostringstream note;
    note << "narrowing for k = 4*" << q << ": s1 degrees of any candidate must be {" << 3 * q
         << ", " << q + 1 << "}";
    for (std::int64_t d : {3 * q, q + 1}) {
      note << "; " << d;
      if (d * (d - 1) % k == 0)
        note << " is idempotent mod " << k;
      else
        note << " is not idempotent mod " << k << " (" << d << "^2 = " << d * d % k << ")";
    }
    report.notes.push_back(note.str());
    const std::vector<std::int64_t> narrowed = {q + 1, 3 * q};
    for (const CandidateOutcome& outcome : report.candidates) {
      const DegreeSplit split = split_degrees(k, outcome.degrees);
      std::ostringstream line;
      line << "candidate " << join(outcome.degrees) << ": s1 = " << join(split.s1)
           << (split.s1 == narrowed ? " matches the narrowing" : " differs from the narrowing");
      report.notes.push_back(line.str());
    }
  }

  if (!settled.empty()) {
    std::ostringstream note;
    note << "tableau settles:";
    for (std::size_t i = 0; i < settled.size(); ++i) note << (i ? "; " : " ") << join(settled[i]);
    report.notes.push_back(note.str());
  }

  for (const std::vector<std::int64_t>& survivor : report.survivors) {
    std::ostringstream note;
    note << "survivor " << join(survivor) << ": designs";
    for (auto it = survivor.rbegin(); it != survivor.rend(); ++it) {
      note << (it == survivor.rbegin() ? " " : ", ");
      try {
        const DesignParameters design = design_parameters(params.m, *it);
        note << "(" << design.v << ", " << design.k << ", " << design.lambda << ")";
      } catch (const NotIntegral&) {
        note << "(" << params.m << ", " << *it << ", -)";
      }
    }
    report.notes.push_back(note.str());
  }

  return report;
}

std::vector<SieveReport> survey(std::int64_t bound) {
  std::vector<std::pair<std::int64_t, std::int64_t>> jobs;
  for (std::int64_t m = 3; m < bound && m < 65536; ++m) {
    if (!is_prime(m)) continue;
    for (std::int64_t r = 3; r <= m; ++r)
      if ((m - 1) % (r - 1) == 0) jobs.emplace_back(m, r);
  }

  std::vector<SieveReport> reports(jobs.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
        reports[i] = run_pipeline(SieveParameters::create(jobs[i].first, jobs[i].second));
    }));
  for (std::future<void>& worker : pool) worker.get();
  return reports;
}

KClass classify_single(std::int64_t k) {
  if (k < 1) throw BadParameters("k must be positive");
  KClass result;
  result.k = k;
  if (is_prime_power(k)) {
    result.form = "q";
    result.q = k;
  } else if (k % 2 == 0 && is_prime_power(k / 2)) {
    result.form = "2q";
    result.q = k / 2;
  } else if (k % 3 == 0 && is_prime_power(k / 3)) {
    result.form = "3q";
    result.q = k / 3;
  } else if (k % 4 == 0 && is_prime_power(k / 4) && (k / 4 + 1) % 3 != 0) {
    result.form = "4q";
    result.q = k / 4;
  } else {
    result.form = "exceptional";
    result.q = 0;
  }
  return result;
}

KSetReport classify_k(std::int64_t bound) {
  KSetReport report;
  for (std::int64_t m = 3; m < bound && m < 65536; ++m) {
    if (!is_prime(m)) continue;
    for (std::int64_t k = 1; k < m - 1; ++k) {
      if ((m - 1) % k != 0 || report.classes.count(k)) continue;
      const KClass kclass = classify_single(k);
      report.classes.emplace(k, kclass);
      if (kclass.form == "exceptional") report.exceptional.insert(k);
    }
  }
  return report;
}

DesignParameters design_parameters(std::int64_t m, std::int64_t d) {
  if (m < 2) throw BadParameters("m must be at least 2");
  if (d < 1) throw BadParameters("d must be positive");
  if (d * (d - 1) % (m - 1) != 0) throw NotIntegral(m, d);
  return {m, d, d * (d - 1) / (m - 1)};
}

}  // namespace cohcfg
