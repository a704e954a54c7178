#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "specht/partition.hpp"
#include "specht/perm.hpp"
#include "specht/tableau.hpp"

namespace test_support {

// Independent oracle: every bijective filling, one per permutation of 1..n
// placed row-major, filtered by the standard predicate.
inline std::vector<specht::Tableau> brute_force_standard(const specht::Partition& shape) {
    const int n = shape.n();
    std::vector<int> entries(static_cast<std::size_t>(n));
    std::iota(entries.begin(), entries.end(), 1);
    std::vector<specht::Tableau> out;
    do {
        std::vector<std::vector<int>> rows;
        int next = 0;
        for (int part : shape.parts()) {
            rows.emplace_back(entries.begin() + next, entries.begin() + next + part);
            next += part;
        }
        specht::Tableau t(shape, std::move(rows));
        if (t.standard()) out.push_back(std::move(t));
    } while (std::next_permutation(entries.begin(), entries.end()));
    return out;
}

inline specht::Tableau tableau_from_entries(const specht::Partition& shape,
                                            const std::vector<int>& entries) {
    std::vector<std::vector<int>> rows;
    int next = 0;
    for (int part : shape.parts()) {
        rows.emplace_back(entries.begin() + next, entries.begin() + next + part);
        next += part;
    }
    return specht::Tableau(shape, std::move(rows));
}

inline specht::Perm random_perm(std::mt19937_64& rng, int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return specht::Perm::from_images(img);
}

} // namespace test_support
