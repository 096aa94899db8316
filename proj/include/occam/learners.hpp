#pragma once

#include <optional>
#include <string>
#include <vector>

#include "occam/core.hpp"

namespace occam {

// Deletion-based conjunction learner: starts from the all-literals monomial
// and removes literals contradicted by positive examples. Negatives are
// ignored; the output contains every literal of any consistent target.
Monomial standard_monomial_learn(const std::vector<LabeledExample>& sample,
                                 int n);
Monomial standard_monomial_learn(const LabeledSample& sample, int n);

// Set-cover conjunction learner: candidate literals are those satisfied by
// every positive example; negatives are covered greedily (largest uncovered
// set first, ties by literal index x1 < !x1 < x2 < ...).
Monomial haussler_monomial_learn(const LabeledSample& sample, int n);

// Exact maximum j such that the last j characters of a equal the first j of
// b (j <= min lengths). Rolling-hash accelerated, memcmp-verified.
std::size_t max_overlap(const std::string& a, const std::string& b);

// Greedy shortest-common-superstring approximation. Input is deduplicated,
// sorted, and substring-contained entries are dropped; then the pair with
// maximum overlap is merged until one string remains. Ties: longer overlap,
// then lexicographically smaller merged result, then smaller pair indices.
std::string greedy_merge(std::vector<std::string> strings);

// greedy_merge over equal-length strings, packaged with that window size.
SuperstringRep greedy_superstring(const std::vector<std::string>& strings);

// Smallest consistent representation by exhaustive enumeration, or nullopt.
// max_size caps circuit gate count; monomials ignore it.
std::optional<Representation> consistent_bruteforce(const LabeledSample& sample,
                                                    SystemId system, int n,
                                                    int max_size);

}  // namespace occam
