// SPDX-License-Identifier: Apache-2.0
#include "evalharness/metrics.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace ami::eval {

std::vector<std::pair<double, double>> compute_ecdf(const std::vector<double>& scores) {
    if (scores.empty()) throw ValidationError("ecdf: empty score list");
    std::vector<double> sorted = scores;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());

    std::vector<std::pair<double, double>> out;
    size_t i = 0;
    while (i < sorted.size()) {
        size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        out.emplace_back(sorted[i], static_cast<double>(j) / n);
        i = j;
    }
    return out;
}

std::vector<Separation> score_separation(const std::map<Population, double>& means) {
    std::vector<Separation> out;
    const auto& order = all_populations();
    for (size_t a = 0; a < order.size(); ++a) {
        for (size_t b = a + 1; b < order.size(); ++b) {
            Separation s;
            s.low = order[a];
            s.high = order[b];
            auto low_it = means.find(s.low);
            auto high_it = means.find(s.high);
            if (low_it != means.end() && high_it != means.end())
                s.delta = high_it->second - low_it->second;
            out.push_back(s);
        }
    }
    return out;
}

double mean_of(const std::vector<double>& values) {
    if (values.empty()) throw ValidationError("mean of empty list");
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

}  // namespace ami::eval
