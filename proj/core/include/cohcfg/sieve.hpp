#ifndef COHCFG_SIEVE_HPP
#define COHCFG_SIEVE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cohcfg {

bool is_prime(std::int64_t n);
std::vector<std::int64_t> distinct_prime_divisors(std::int64_t n);
// 1 counts as a prime power (empty product), so k=1 lands in the "q" class.
bool is_prime_power(std::int64_t q);

// Parameters of a two-fiber feasibility question: fibers of odd prime size m,
// r relations per off-diagonal block, uniform non-diagonal degree k=(m-1)/(r-1)
// inside each fiber, e = number of distinct primes dividing k.
struct SieveParameters {
  std::int64_t m = 0;
  std::int64_t r = 0;
  std::int64_t k = 0;
  std::int64_t e = 0;
  std::vector<std::int64_t> prime_divisors;  // of k, ascending

  // Throws BadParameters unless m is an odd prime < 2^16, r > 2, (r-1) | (m-1).
  static SieveParameters create(std::int64_t m, std::int64_t r);
};

// Degrees split against k: s1 = not a multiple of k, s2 = exactly k,
// s3 = larger multiples of k.
struct DegreeSplit {
  std::vector<std::int64_t> s1, s2, s3;
  std::int64_t s1_sum = 0;
};
DegreeSplit split_degrees(std::int64_t k, const std::vector<std::int64_t>& degrees);

// All multisets of r integers >= 2 summing to m that pass the two congruence
// filters: d^2 = d (mod k) for every member (R2) and d*d' = 0 (mod k) for
// every unordered pair of distinct positions (R3). Sorted ascending, listed in
// lexicographic order.
std::vector<std::vector<std::int64_t>> candidate_multisets(const SieveParameters& params);

struct Elimination {
  std::string rule;  // "R2".."R12", "R10" for the tableau
  std::vector<std::pair<std::string, std::int64_t>> witness;
};

// Runs the fixed rule chain R4, R5, R6, R7, R8, R11, R12, R10 on a sorted
// degree multiset and reports the first rule that eliminates it. R10 (the
// 3-cell tableau) runs only when r = 3 and k is even, the regime where all
// fiber relations are forced symmetric. Candidates from candidate_multisets
// have already passed R2/R3.
std::optional<Elimination> evaluate_candidate(const SieveParameters& params,
                                              const std::vector<std::int64_t>& degrees);

// R2 and R3 first, then the chain above. Suitable for degree multisets of
// actual configurations (which may contain 1); a valid realization must pass.
std::optional<Elimination> check_degree_multiset(const SieveParameters& params,
                                                 const std::vector<std::int64_t>& degrees);

struct CandidateOutcome {
  std::vector<std::int64_t> degrees;
  std::optional<Elimination> eliminated_by;  // empty = survives
};

struct SieveReport {
  SieveParameters params;
  std::string theorem_case;  // "k=q","k=2q","k=3q","k=4q","rank-bound","exhaustive"
  std::vector<CandidateOutcome> candidates;
  std::vector<std::vector<std::int64_t>> survivors;
  bool forced = false;  // no survivor remains
  std::vector<std::string> notes;
};

SieveReport run_pipeline(const SieveParameters& params);

// Every (m, r) with m prime < bound, r > 2, (r-1) | (m-1); ascending by (m, r).
std::vector<SieveReport> survey(std::int64_t bound);

// k classification against the shortcut families.
struct KClass {
  std::int64_t k = 0;
  std::string form;       // "q", "2q", "3q", "4q", "exceptional"
  std::int64_t q = 0;     // witnessing prime power, 0 for exceptional
};
KClass classify_single(std::int64_t k);

// All k dividing m-1 for some prime m < bound with k < m-1, classified; the
// exceptional set collects the k no shortcut family covers.
struct KSetReport {
  std::set<std::int64_t> exceptional;
  std::map<std::int64_t, KClass> classes;
};
KSetReport classify_k(std::int64_t bound);

// Putative symmetric design parameters attached to a surviving degree:
// (m, d, d(d-1)/(m-1)). Throws NotIntegral when the division fails.
struct DesignParameters {
  std::int64_t v = 0, k = 0, lambda = 0;
};
DesignParameters design_parameters(std::int64_t m, std::int64_t d);

}  // namespace cohcfg

#endif
