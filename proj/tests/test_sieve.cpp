#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cohcfg/errors.hpp"
#include "cohcfg/sieve.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using cohcfg::Elimination;
using cohcfg::SieveParameters;
using cohcfg::SieveReport;

namespace {

using Degrees = std::vector<std::int64_t>;

std::int64_t witness(const Elimination& e, const std::string& key) {
  for (const auto& [k, v] : e.witness)
    if (k == key) return v;
  return -999;
}

bool has_note(const SieveReport& report, const std::string& needle) {
  for (const std::string& note : report.notes)
    if (note.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("number helpers") {
  CHECK_FALSE(cohcfg::is_prime(0));
  CHECK_FALSE(cohcfg::is_prime(1));
  CHECK(cohcfg::is_prime(2));
  CHECK(cohcfg::is_prime(3));
  CHECK_FALSE(cohcfg::is_prime(25));
  CHECK_FALSE(cohcfg::is_prime(91));
  CHECK(cohcfg::is_prime(97));
  CHECK(cohcfg::distinct_prime_divisors(360) == Degrees{2, 3, 5});
  CHECK(cohcfg::distinct_prime_divisors(1).empty());
  CHECK(cohcfg::is_prime_power(1));
  CHECK(cohcfg::is_prime_power(7));
  CHECK(cohcfg::is_prime_power(8));
  CHECK(cohcfg::is_prime_power(81));
  CHECK_FALSE(cohcfg::is_prime_power(6));
  CHECK_FALSE(cohcfg::is_prime_power(12));
  CHECK_FALSE(cohcfg::is_prime_power(0));
}

TEST_CASE("parameter construction checks its inputs") {
  const SieveParameters p = SieveParameters::create(61, 3);
  CHECK(p.k == 30);
  CHECK(p.e == 3);
  CHECK(p.prime_divisors == Degrees{2, 3, 5});
  CHECK_THROWS_AS(SieveParameters::create(4, 3), cohcfg::BadParameters);
  CHECK_THROWS_AS(SieveParameters::create(2, 3), cohcfg::BadParameters);
  CHECK_THROWS_AS(SieveParameters::create(13, 2), cohcfg::BadParameters);
  CHECK_THROWS_AS(SieveParameters::create(13, 6), cohcfg::BadParameters);
  CHECK_THROWS_AS(SieveParameters::create(65537, 3), cohcfg::BadParameters);
}

TEST_CASE("degree splitting against k") {
  const cohcfg::DegreeSplit split = cohcfg::split_degrees(30, {6, 10, 45, 30, 60, 90});
  CHECK(split.s1 == Degrees{6, 10, 45});
  CHECK(split.s2 == Degrees{30});
  CHECK(split.s3 == Degrees{60, 90});
  CHECK(split.s1_sum == 61);
}

TEST_CASE("candidate multisets for the first fully searched case") {
  const std::vector<Degrees> candidates =
      cohcfg::candidate_multisets(SieveParameters::create(61, 3));
  const std::vector<Degrees> expected = {{6, 10, 45}, {6, 15, 40},  {6, 25, 30},
                                         {10, 15, 36}, {10, 21, 30}, {15, 16, 30}};
  CHECK(candidates == expected);
}

TEST_CASE("candidate multisets frozen across parameter families") {
  CHECK(cohcfg::candidate_multisets(SieveParameters::create(89, 3)) ==
        std::vector<Degrees>{{12, 33, 44}});
  CHECK(cohcfg::candidate_multisets(SieveParameters::create(71, 3)) ==
        std::vector<Degrees>{{15, 21, 35}});
  CHECK(cohcfg::candidate_multisets(SieveParameters::create(41, 3)) ==
        std::vector<Degrees>{{5, 16, 20}});
  CHECK(cohcfg::candidate_multisets(SieveParameters::create(31, 3)) ==
        std::vector<Degrees>{{6, 10, 15}});
  CHECK(cohcfg::candidate_multisets(SieveParameters::create(13, 4)).empty());
  CHECK(cohcfg::candidate_multisets(SieveParameters::create(17, 3)).empty());  // k = 8 prime power
}

TEST_CASE("candidate generation matches the unpruned reference") {
  for (const auto& [m, r] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {61, 3}, {89, 3}, {37, 4}, {19, 4}, {97, 5}}) {
    const SieveParameters params = SieveParameters::create(m, r);
    CHECK(cohcfg::candidate_multisets(params) == oracles::naive_candidates(m, r, params.k));
  }
}

TEST_CASE("the congruence filters report their witnesses") {
  const SieveParameters params = SieveParameters::create(61, 3);
  const auto square = cohcfg::check_degree_multiset(params, {7, 24, 30});
  REQUIRE(square.has_value());
  CHECK(square->rule == "R2");
  CHECK(witness(*square, "d") == 7);
  const auto pairwise = cohcfg::check_degree_multiset(params, {6, 16});
  REQUIRE(pairwise.has_value());
  CHECK(pairwise->rule == "R3");
  CHECK(witness(*pairwise, "d") == 6);
  CHECK(witness(*pairwise, "d_prime") == 16);
  CHECK(witness(*pairwise, "product_mod_k") == 6);
}

TEST_CASE("a genuine degree multiset passes the full chain") {
  CHECK_FALSE(cohcfg::check_degree_multiset(SieveParameters::create(7, 3), {1, 3, 3}).has_value());
  CHECK_FALSE(cohcfg::check_degree_multiset(SieveParameters::create(11, 3), {1, 5, 5}).has_value());
  CHECK_FALSE(cohcfg::check_degree_multiset(SieveParameters::create(13, 3), {1, 6, 6}).has_value());
  CHECK_FALSE(cohcfg::check_degree_multiset(SieveParameters::create(5, 3), {1, 2, 2}).has_value());
  CHECK_FALSE(
      cohcfg::check_degree_multiset(SieveParameters::create(11, 6), {1, 2, 2, 2, 2, 2}).has_value());
}

TEST_CASE("prime divisor balance eliminates when a prime misses its unique witness") {
  const auto result = cohcfg::evaluate_candidate(SieveParameters::create(61, 3), {2, 4, 55});
  REQUIRE(result.has_value());
  CHECK(result->rule == "R4");
  CHECK(witness(*result, "p") == 3);
  CHECK(witness(*result, "not_divisible") == 3);
}

TEST_CASE("too many non-multiples of k eliminate") {
  const auto result = cohcfg::evaluate_candidate(SieveParameters::create(37, 4), {4, 6, 6, 9});
  REQUIRE(result.has_value());
  CHECK(result->rule == "R5");
  CHECK(witness(*result, "s1_size") == 4);
  CHECK(witness(*result, "e") == 2);
}

TEST_CASE("the weighted size bound eliminates") {
  const auto result = cohcfg::evaluate_candidate(SieveParameters::create(61, 3), {10, 21, 60, 90});
  REQUIRE(result.has_value());
  CHECK(result->rule == "R6");
  CHECK(witness(*result, "lhs") == 91);
  CHECK(witness(*result, "bound") == 61);
}

TEST_CASE("the spread bound eliminates") {
  const auto result = cohcfg::evaluate_candidate(SieveParameters::create(61, 3), {2, 15, 90});
  REQUIRE(result.has_value());
  CHECK(result->rule == "R7");
  CHECK(witness(*result, "max") == 90);
  CHECK(witness(*result, "k_times_min") == 60);
}

TEST_CASE("coprime pairs summing past k eliminate") {
  const auto result = cohcfg::evaluate_candidate(SieveParameters::create(61, 3), {6, 25, 30});
  REQUIRE(result.has_value());
  CHECK(result->rule == "R8");
  CHECK(witness(*result, "d_s") == 6);
  CHECK(witness(*result, "d_t") == 25);
  CHECK(witness(*result, "sum") == 31);
  CHECK(witness(*result, "threshold") == 31);
}

TEST_CASE("the odd k walk count bound eliminates") {
  const auto thirty_one = cohcfg::evaluate_candidate(SieveParameters::create(31, 3), {6, 10, 15});
  REQUIRE(thirty_one.has_value());
  CHECK(thirty_one->rule == "R11");
  CHECK(witness(*thirty_one, "d") == 6);
  CHECK(witness(*thirty_one, "paths") == 2);
  CHECK(witness(*thirty_one, "limit") == 4);

  const auto sixty_seven = cohcfg::evaluate_candidate(SieveParameters::create(67, 3), {12, 22, 33});
  REQUIRE(sixty_seven.has_value());
  CHECK(sixty_seven->rule == "R11");
  CHECK(witness(*sixty_seven, "d") == 12);
  CHECK(witness(*sixty_seven, "paths") == 4);
  CHECK(witness(*sixty_seven, "limit") == 8);
}

TEST_CASE("the walk divisibility rule is implied by the congruence filter") {
  for (std::int64_t k = 1; k <= 60; ++k)
    for (std::int64_t d = 1; d <= 200; ++d) {
      if (d * (d - 1) % k != 0) continue;
      const std::int64_t paths = d * (d - 1) / k;
      CHECK(paths % (d / std::gcd(d, k)) == 0);
    }
}

TEST_CASE("the tableau elimination carries its branch count") {
  const auto result = cohcfg::evaluate_candidate(SieveParameters::create(89, 3), {12, 33, 44});
  REQUIRE(result.has_value());
  CHECK(result->rule == "R10");
  CHECK(witness(*result, "cell_1") == 12);
  CHECK(witness(*result, "cell_2") == 33);
  CHECK(witness(*result, "cell_3") == 44);
  CHECK(witness(*result, "branches") == 240);
}

TEST_CASE("one multiset survives everything") {
  CHECK_FALSE(cohcfg::evaluate_candidate(SieveParameters::create(71, 3), {15, 21, 35}).has_value());
}

TEST_CASE("degree lists are normalized and validated") {
  const SieveParameters params = SieveParameters::create(61, 3);
  const auto shuffled = cohcfg::evaluate_candidate(params, {30, 25, 6});
  const auto sorted = cohcfg::evaluate_candidate(params, {6, 25, 30});
  REQUIRE(shuffled.has_value());
  REQUIRE(sorted.has_value());
  CHECK(shuffled->rule == sorted->rule);
  CHECK(shuffled->witness == sorted->witness);
  CHECK_THROWS_AS(cohcfg::evaluate_candidate(params, {}), cohcfg::BadParameters);
  CHECK_THROWS_AS(cohcfg::evaluate_candidate(params, {0, 3}), cohcfg::BadParameters);
  CHECK_THROWS_AS(cohcfg::check_degree_multiset(params, {-2, 3}), cohcfg::BadParameters);
}

TEST_CASE("pipeline report for the six candidate case") {
  const SieveReport report = cohcfg::run_pipeline(SieveParameters::create(61, 3));
  CHECK(report.theorem_case == "exhaustive");
  CHECK(report.forced);
  CHECK(report.survivors.empty());
  REQUIRE(report.candidates.size() == 6);
  const std::vector<std::string> rules = {"R10", "R10", "R8", "R10", "R8", "R8"};
  for (std::size_t i = 0; i < 6; ++i) {
    REQUIRE(report.candidates[i].eliminated_by.has_value());
    CHECK(report.candidates[i].eliminated_by->rule == rules[i]);
  }
  CHECK(has_note(report, "tableau settles: {6, 10, 45}; {6, 15, 40}; {10, 15, 36}"));
}

TEST_CASE("pipeline report for the surviving case lists designs") {
  const SieveReport report = cohcfg::run_pipeline(SieveParameters::create(71, 3));
  CHECK_FALSE(report.forced);
  CHECK(report.survivors == std::vector<Degrees>{{15, 21, 35}});
  CHECK(has_note(report, "survivor {15, 21, 35}: designs (71, 35, 17), (71, 21, 6), (71, 15, 3)"));
}

TEST_CASE("pipeline annotates the k = 4q narrowing") {
  const SieveReport forty_one = cohcfg::run_pipeline(SieveParameters::create(41, 3));
  CHECK(has_note(forty_one, "narrowing for k = 4*5"));
  CHECK(has_note(forty_one, "15 is not idempotent mod 20 (15^2 = 5)"));
  CHECK(has_note(forty_one, "6 is not idempotent mod 20 (6^2 = 16)"));
  CHECK(has_note(forty_one, "candidate {5, 16, 20}: s1 = {5, 16} differs from the narrowing"));

  const SieveReport eighty_nine = cohcfg::run_pipeline(SieveParameters::create(89, 3));
  CHECK(has_note(eighty_nine, "narrowing for k = 4*11"));
  CHECK(has_note(eighty_nine, "33 is idempotent mod 44"));
  CHECK(has_note(eighty_nine, "candidate {12, 33, 44}: s1 = {12, 33} matches the narrowing"));
}

TEST_CASE("theorem case labels follow the k classification") {
  CHECK(cohcfg::run_pipeline(SieveParameters::create(7, 3)).theorem_case == "k=q");
  CHECK(cohcfg::run_pipeline(SieveParameters::create(13, 4)).theorem_case == "k=q");
  CHECK(cohcfg::run_pipeline(SieveParameters::create(13, 3)).theorem_case == "k=2q");
  CHECK(cohcfg::run_pipeline(SieveParameters::create(31, 4)).theorem_case == "k=2q");
  CHECK(cohcfg::run_pipeline(SieveParameters::create(31, 3)).theorem_case == "k=3q");
  CHECK(cohcfg::run_pipeline(SieveParameters::create(73, 3)).theorem_case == "k=4q");
  CHECK(cohcfg::run_pipeline(SieveParameters::create(61, 3)).theorem_case == "exhaustive");
}

TEST_CASE("k values are classified by the smallest covering family") {
  CHECK(cohcfg::classify_single(1).form == "q");
  CHECK(cohcfg::classify_single(4).form == "q");
  CHECK(cohcfg::classify_single(8).form == "q");
  CHECK(cohcfg::classify_single(16).form == "q");
  const cohcfg::KClass twelve = cohcfg::classify_single(12);
  CHECK(twelve.form == "3q");
  CHECK(twelve.q == 4);
  CHECK(cohcfg::classify_single(24).form == "3q");
  CHECK(cohcfg::classify_single(24).q == 8);
  const cohcfg::KClass six = cohcfg::classify_single(6);
  CHECK(six.form == "2q");
  CHECK(six.q == 3);
  CHECK(cohcfg::classify_single(28).form == "4q");
  CHECK(cohcfg::classify_single(28).q == 7);
  CHECK(cohcfg::classify_single(36).form == "4q");
  CHECK(cohcfg::classify_single(36).q == 9);
  // 4q needs 3 to miss q+1, so 20 = 4*5 and 44 = 4*11 stay exceptional
  CHECK(cohcfg::classify_single(20).form == "exceptional");
  CHECK(cohcfg::classify_single(44).form == "exceptional");
  CHECK(cohcfg::classify_single(30).form == "exceptional");
  CHECK(cohcfg::classify_single(35).form == "exceptional");
  CHECK_THROWS_AS(cohcfg::classify_single(0), cohcfg::BadParameters);
}

TEST_CASE("the exceptional k below one hundred") {
  const cohcfg::KSetReport report = cohcfg::classify_k(100);
  CHECK(report.exceptional == std::set<std::int64_t>{20, 30, 35, 44});
  CHECK(report.classes.at(44).form == "exceptional");
  CHECK(report.classes.at(24).form == "3q");
  // k = m-1 is excluded, so 96 only enters through m = 97
  CHECK(report.classes.count(96) == 0);
}

TEST_CASE("design parameters divide or refuse") {
  CHECK(cohcfg::design_parameters(71, 35).lambda == 17);
  CHECK(cohcfg::design_parameters(71, 21).lambda == 6);
  CHECK(cohcfg::design_parameters(71, 15).lambda == 3);
  CHECK(cohcfg::design_parameters(13, 4).lambda == 1);
  CHECK(cohcfg::design_parameters(7, 1).lambda == 0);
  CHECK_THROWS_AS(cohcfg::design_parameters(13, 5), cohcfg::NotIntegral);
  CHECK_THROWS_AS(cohcfg::design_parameters(1, 1), cohcfg::BadParameters);
  CHECK_THROWS_AS(cohcfg::design_parameters(13, 0), cohcfg::BadParameters);
}

TEST_CASE("small surveys") {
  CHECK(cohcfg::survey(3).empty());
  const std::vector<SieveReport> twenty = cohcfg::survey(20);
  CHECK(twenty.size() == 23);
  for (const SieveReport& report : twenty) CHECK(report.forced);
  for (std::size_t i = 1; i < twenty.size(); ++i) {
    const auto a = std::make_pair(twenty[i - 1].params.m, twenty[i - 1].params.r);
    const auto b = std::make_pair(twenty[i].params.m, twenty[i].params.r);
    CHECK(a < b);
  }
}

TEST_CASE("the survey below one hundred leaves a single open case") {
  const std::vector<SieveReport> reports = cohcfg::survey(100);
  std::vector<std::pair<std::int64_t, std::int64_t>> open;
  const std::set<std::string> allowed = {"R4", "R5", "R6", "R7", "R8", "R10", "R11"};
  for (const SieveReport& report : reports) {
    if (!report.forced) {
      open.emplace_back(report.params.m, report.params.r);
      CHECK(report.survivors == std::vector<Degrees>{{15, 21, 35}});
    }
    for (const cohcfg::CandidateOutcome& outcome : report.candidates)
      if (outcome.eliminated_by) {
        CHECK(allowed.count(outcome.eliminated_by->rule) == 1);
        CHECK(outcome.eliminated_by->rule != "R12");
      }
  }
  CHECK(open == std::vector<std::pair<std::int64_t, std::int64_t>>{{71, 3}});
}
