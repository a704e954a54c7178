#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "specht/errors.hpp"
#include "specht/numbers.hpp"

namespace specht {

// Weakly decreasing sequence of positive parts. The empty partition is valid
// and is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw invalid_input("partition part must be a positive integer");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw invalid_input("partition parts must be weakly decreasing");
        }
        n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    // Parses a comma separated list such as "5,5,2,2,2,2". An empty or
    // all-whitespace string yields the empty partition.
    static Partition parse(const std::string& text) {
        const bool blank = std::all_of(text.begin(), text.end(), [](unsigned char c) {
            return std::isspace(c);
        });
        if (blank) return Partition();
        std::vector<int> parts;
        std::string token;
        std::istringstream in(text);
        bool saw_token = false;
        while (std::getline(in, token, ',')) {
            saw_token = true;
            std::string trimmed;
            for (char c : token)
                if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
            if (trimmed.empty())
                throw invalid_input("empty component in partition string: '" + text + "'");
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(trimmed, &used);
            } catch (const std::exception&) {
                throw invalid_input("cannot parse partition component '" + trimmed + "'");
            }
            if (used != trimmed.size())
                throw invalid_input("cannot parse partition component '" + trimmed + "'");
            parts.push_back(value);
        }
        if (!saw_token) throw invalid_input("cannot parse partition string '" + text + "'");
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int r) const { return parts_.at(static_cast<std::size_t>(r)); }
    int n() const { return n_; }
    bool empty() const { return parts_.empty(); }
    int first_part() const { return parts_.empty() ? 0 : parts_.front(); }

    // Column lengths of the Young diagram, i.e. the conjugate partition.
    std::vector<int> column_lengths() const {
        std::vector<int> cols(static_cast<std::size_t>(first_part()), 0);
        for (int len : parts_)
            for (int c = 0; c < len; ++c) ++cols[static_cast<std::size_t>(c)];
        return cols;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    // Bracketed display form, "[]" for the empty partition.
    std::string display() const { return "[" + to_string() + "]"; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Maximal runs of equal parts, as (value, multiplicity), values strictly
// decreasing. Concatenating the runs recovers the partition.
inline std::vector<std::pair<int, int>> run_decomposition(const Partition& lambda) {
    std::vector<std::pair<int, int>> runs;
    for (int part : lambda.parts()) {
        if (!runs.empty() && runs.back().first == part)
            ++runs.back().second;
        else
            runs.emplace_back(part, 1);
    }
    return runs;
}

// A tail mu made of complete trailing runs of lambda (possibly none, never
// all), together with the residual shape eta obtained by cutting the first
// mu_1 columns off the kept rows. With mu empty, eta = lambda.
struct SplittingContext {
    Partition lambda;
    Partition mu;
    Partition eta;
    int split_index = 0; // number of trailing runs moved into mu

    int mu_first_part() const { return mu.first_part(); }
};

inline SplittingContext make_splitting_context(const Partition& lambda, int split_index) {
    const auto runs = run_decomposition(lambda);
    const int total = static_cast<int>(runs.size());
    if (split_index < 0 || split_index > std::max(0, total - 1))
        throw invalid_input("split index out of range");

    std::vector<int> mu_parts;
    for (int r = total - split_index; r < total; ++r)
        mu_parts.insert(mu_parts.end(), static_cast<std::size_t>(runs[static_cast<std::size_t>(r)].second),
                        runs[static_cast<std::size_t>(r)].first);
    Partition mu{std::move(mu_parts)};

    const int mu1 = mu.first_part();
    std::vector<int> eta_parts;
    for (int r = 0; r < total - split_index; ++r)
        eta_parts.insert(eta_parts.end(), static_cast<std::size_t>(runs[static_cast<std::size_t>(r)].second),
                         runs[static_cast<std::size_t>(r)].first - mu1);
    Partition eta{std::move(eta_parts)};

    return SplittingContext{lambda, std::move(mu), std::move(eta), split_index};
}

// All admissible tails: 0 up to (number of runs - 1) trailing runs. The empty
// tail is always first.
inline std::vector<SplittingContext> splitting_partitions(const Partition& lambda) {
    const int total = static_cast<int>(run_decomposition(lambda).size());
    std::vector<SplittingContext> out;
    for (int k = 0; k <= std::max(0, total - 1); ++k)
        out.push_back(make_splitting_context(lambda, k));
    return out;
}

// Number of standard fillings, by the hook length formula.
inline BigInt syt_count(const Partition& lambda) {
    const auto& parts = lambda.parts();
    const auto cols = lambda.column_lengths();
    BigInt denom = 1;
    for (int r = 0; r < lambda.rows(); ++r)
        for (int c = 0; c < parts[static_cast<std::size_t>(r)]; ++c) {
            const int arm = parts[static_cast<std::size_t>(r)] - c - 1;
            const int leg = cols[static_cast<std::size_t>(c)] - r - 1;
            denom *= arm + leg + 1;
        }
    return factorial(lambda.n()) / denom;
}

// All partitions of n in descending lexicographic order, (n) first.
inline std::vector<Partition> all_partitions(int n) {
    if (n < 0) throw invalid_input("all_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(acc));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            acc.push_back(part);
            self(self, remaining - part, part);
            acc.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace specht
