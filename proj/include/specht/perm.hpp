#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "specht/errors.hpp"

namespace specht {

// Permutation of {1,...,n}. Composition reads left to right, (a*b)(x) = b(a(x)),
// matching the right action on tableaux and modules used everywhere below.
class Perm {
public:
    explicit Perm(int degree) : img_(static_cast<std::size_t>(degree)) {
        if (degree < 0) throw invalid_input("permutation degree must be nonnegative");
        std::iota(img_.begin(), img_.end(), 1);
    }

    static Perm from_images(std::vector<int> images) {
        Perm p(static_cast<int>(images.size()));
        std::vector<bool> seen(images.size(), false);
        for (int v : images) {
            if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v - 1)])
                throw invalid_input("image list is not a permutation of {1..n}");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
        p.img_ = std::move(images);
        return p;
    }

    // Product of the given cycles, applied left to right. Cycles over disjoint
    // supports commute, so disjoint cycle notation reads back unambiguously.
    static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
        Perm p(degree);
        for (const auto& cycle : cycles) {
            Perm c(degree);
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                const int from = cycle[i];
                const int to = cycle[(i + 1) % cycle.size()];
                if (from < 1 || from > degree)
                    throw invalid_input("cycle entry out of range");
                if (c.img_[static_cast<std::size_t>(from - 1)] != from)
                    throw invalid_input("repeated entry within a cycle");
                c.img_[static_cast<std::size_t>(from - 1)] = to;
            }
            p = p * c;
        }
        return p;
    }

    // Parses "(3,4,5)(8,9,10)"; "()" and the empty string are the identity.
    static Perm parse_cycles(int degree, const std::string& text) {
        std::vector<std::vector<int>> cycles;
        std::size_t i = 0;
        auto skip_space = [&] {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        };
        skip_space();
        while (i < text.size()) {
            if (text[i] != '(') throw invalid_input("expected '(' in cycle string: " + text);
            ++i;
            std::vector<int> cycle;
            skip_space();
            while (i < text.size() && text[i] != ')') {
                std::size_t start = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == start) throw invalid_input("expected number in cycle string: " + text);
                cycle.push_back(std::stoi(text.substr(start, i - start)));
                skip_space();
                if (i < text.size() && text[i] == ',') {
                    ++i;
                    skip_space();
                }
            }
            if (i == text.size()) throw invalid_input("unterminated cycle in: " + text);
            ++i; // ')'
            if (!cycle.empty()) cycles.push_back(std::move(cycle));
            skip_space();
        }
        return from_cycles(degree, cycles);
    }

    int degree() const { return static_cast<int>(img_.size()); }

    int operator()(int x) const {
        if (x < 1 || x > degree()) throw invalid_input("permutation applied outside its domain");
        return img_[static_cast<std::size_t>(x - 1)];
    }

    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[static_cast<std::size_t>(i)] != i + 1) return false;
        return true;
    }

    Perm inverse() const {
        Perm r(degree());
        for (int i = 0; i < degree(); ++i)
            r.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)] - 1)] = i + 1;
        return r;
    }

    friend Perm operator*(const Perm& a, const Perm& b) {
        if (a.degree() != b.degree()) throw invalid_input("permutation degree mismatch");
        Perm r(a.degree());
        for (int i = 0; i < a.degree(); ++i)
            r.img_[static_cast<std::size_t>(i)] =
                b.img_[static_cast<std::size_t>(a.img_[static_cast<std::size_t>(i)] - 1)];
        return r;
    }

    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(img_.size(), false);
        for (int start = 1; start <= degree(); ++start) {
            if (seen[static_cast<std::size_t>(start - 1)]) continue;
            std::vector<int> cycle;
            int x = start;
            do {
                seen[static_cast<std::size_t>(x - 1)] = true;
                cycle.push_back(x);
                x = img_[static_cast<std::size_t>(x - 1)];
            } while (x != start);
            if (cycle.size() > 1) out.push_back(std::move(cycle));
        }
        return out;
    }

    int sign() const {
        int parity = 0;
        for (const auto& cycle : cycles()) parity += static_cast<int>(cycle.size()) - 1;
        return parity % 2 == 0 ? 1 : -1;
    }

    std::vector<int> support() const {
        std::vector<int> out;
        for (int i = 1; i <= degree(); ++i)
            if (img_[static_cast<std::size_t>(i - 1)] != i) out.push_back(i);
        return out;
    }

    long long order() const {
        long long result = 1;
        for (const auto& cycle : cycles())
            result = std::lcm(result, static_cast<long long>(cycle.size()));
        return result;
    }

    bool is_p_element(int p) const {
        long long o = order();
        while (o % p == 0) o /= p;
        return o == 1;
    }

    std::string cycle_string() const {
        const auto cs = cycles();
        if (cs.empty()) return "()";
        std::string out;
        for (const auto& cycle : cs) {
            out += '(';
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(cycle[i]);
            }
            out += ')';
        }
        return out;
    }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

private:
    std::vector<int> img_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : p.images()) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

inline Perm conjugate(const Perm& x, const Perm& by) { return by.inverse() * x * by; }

inline Perm commutator(const Perm& a, const Perm& b) {
    return a.inverse() * b.inverse() * a * b;
}

inline Perm perm_power(const Perm& x, long long e) {
    Perm acc(x.degree());
    Perm base = x;
    if (e < 0) {
        base = x.inverse();
        e = -e;
    }
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

} // namespace specht
