// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evalharness/population.hpp"

namespace ami::eval {

/// Standard ECDF: sorted unique values x with F(x) = |{s <= x}| / n.
/// Nondecreasing, terminal fraction 1.0. Throws on empty input.
std::vector<std::pair<double, double>> compute_ecdf(const std::vector<double>& scores);

struct Separation {
    Population low;   // lower-risk population
    Population high;  // higher-risk population
    std::optional<double> delta;  // mean(high) - mean(low); absent when a mean is missing
};

/// All 6 ordered pairs in risk order Clean < PEP < RW < SDN; pairs with a
/// missing mean are flagged (delta absent), not dropped.
std::vector<Separation> score_separation(const std::map<Population, double>& means);

double mean_of(const std::vector<double>& values);  // throws on empty

}  // namespace ami::eval
