#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "centralizer/arith.hpp"
#include "centralizer/branch.hpp"
#include "centralizer/dims.hpp"
#include "centralizer/error.hpp"
#include "centralizer/young.hpp"

// Brute-force cross-checks that share nothing with the dimension formulas:
// characters by the Murnaghan-Nakayama rule, multiplicities as inner
// products over conjugacy classes, and direct enumeration of fillings.

namespace centralizer {

struct ConjugacyClass {
    Partition cycle_type;
    Nat size;
};

/// Cycle types of S_n with S_n class sizes n!/z. With even_only, just the
/// even permutations (the classes of S_n contained in A_n).
inline std::vector<ConjugacyClass> conjugacy_classes(int n, bool even_only)
{
    if (n < 1 || n > 10) {
        throw error(errc::n_out_of_range, "conjugacy classes are tabulated for 1 <= n <= 10");
    }
    std::vector<ConjugacyClass> out;
    const Nat order = factorial(n);
    for (auto& ct : partitions_of(n)) {
        if (even_only && (n - ct.length()) % 2 != 0) {
            continue;
        }
        Nat z = 1;
        for (int j = 1; j <= n; ++j) {
            const int m = static_cast<int>(std::count(ct.parts().begin(), ct.parts().end(), j));
            z *= factorial(m);
            for (int i = 0; i < m; ++i) {
                z *= j;
            }
        }
        out.push_back({std::move(ct), order / z});
    }
    return out;
}

namespace detail {

class character_cache {
public:
    bool find(const std::pair<Partition, Partition>& key, BigInt& out)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = values_.find(key);
        if (it == values_.end()) {
            return false;
        }
        out = it->second;
        return true;
    }

    void store(std::pair<Partition, Partition> key, const BigInt& value)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        values_.emplace(std::move(key), value);
    }

private:
    std::mutex mutex_;
    std::map<std::pair<Partition, Partition>, BigInt> values_;
};

inline character_cache& characters()
{
    static character_cache cache;
    return cache;
}

/// Murnaghan-Nakayama on beta-sets: removing a border strip of length r is
/// moving one bead from x to x - r onto an empty position; the strip's height
/// is the number of beads jumped over.
inline BigInt murnaghan_nakayama(const Partition& lambda, const Partition& ct)
{
    if (ct.empty()) {
        return 1;
    }
    BigInt cached;
    auto key = std::make_pair(lambda, ct);
    if (characters().find(key, cached)) {
        return cached;
    }
    const int r = ct[0];
    const Partition rest(std::vector<int>(ct.parts().begin() + 1, ct.parts().end()));
    const int len = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        beta[static_cast<std::size_t>(i)] = lambda[i] + (len - 1 - i); // strictly decreasing
    }
    BigInt sum = 0;
    for (int i = 0; i < len; ++i) {
        const int x = beta[static_cast<std::size_t>(i)];
        const int target = x - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) {
            continue;
        }
        const auto jumped = std::count_if(beta.begin(), beta.end(), [&](int y) { return target < y && y < x; });
        auto moved = beta;
        moved[static_cast<std::size_t>(i)] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> parts(static_cast<std::size_t>(len));
        for (int j = 0; j < len; ++j) {
            parts[static_cast<std::size_t>(j)] = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
        }
        const BigInt value = murnaghan_nakayama(Partition(std::move(parts)), rest);
        sum += jumped % 2 == 0 ? value : BigInt(-value);
    }
    characters().store(std::move(key), sum);
    return sum;
}

inline Nat power(int base, int exponent)
{
    Nat out = 1;
    for (int i = 0; i < exponent; ++i) {
        out *= base;
    }
    return out;
}

} // namespace detail

/// The irreducible character chi_lambda of S_n on the class of cycle type ct.
inline BigInt character_mn(const Partition& lambda, const Partition& ct)
{
    if (lambda.size() != ct.size()) {
        throw error(errc::size_mismatch, "character of " + to_string(lambda) + " on cycle type " + to_string(ct));
    }
    return detail::murnaghan_nakayama(lambda, ct);
}

/// Multiplicity of an irreducible in the context's tensor power, as the inner
/// product (1/|G|) sum over classes of |class| m(ct)^k chi(ct). m is the number
/// of fixed points on n letters (the subgroup fixes the letter n), less one for
/// the reflection module. For a self-conjugate lambda of an alternating group
/// the restricted character is chi_+ + chi_-, whose two multiplicities agree.
inline Nat multiplicity_oracle(const Context& ctx, const Label& label)
{
    validate(ctx);
    const bool alt = ctx.group == Group::alt;
    if (alt != std::holds_alternative<AltLabel>(label)) {
        throw error(errc::invalid_context, "label does not belong to the context's group");
    }
    const Partition& lambda = base_of(label);
    const int size = ctx.label_size();
    if (lambda.size() != size) {
        throw error(errc::size_mismatch, "label " + to_string(label) + " is not of size " + std::to_string(size));
    }
    const int k = ctx.level.whole();
    const int extra_fixed = ctx.level.is_half() ? 1 : 0;
    const int shift = ctx.module == Module::refl ? -1 : 0;

    BigInt total = 0;
    for (const auto& cls : conjugacy_classes(size, alt)) {
        const int fixed = static_cast<int>(std::count(cls.cycle_type.parts().begin(), cls.cycle_type.parts().end(), 1));
        const int m = fixed + extra_fixed + shift;
        BigInt term = cls.size * detail::power(std::abs(m), k) * character_mn(lambda, cls.cycle_type);
        if (m < 0 && k % 2 != 0) {
            term = -term;
        }
        total += term;
    }
    Nat order = factorial(size);
    if (alt) {
        order /= 2;
    }
    const bool split = alt && std::get<AltLabel>(label).is_split();
    if (split) {
        order *= 2;
    }
    if (total < 0 || total % order != 0) {
        throw error(errc::non_integer_multiplicity,
                    "class sum " + total.str() + " for " + to_string(label) + " is not a nonnegative multiple of " +
                        order.str());
    }
    return total / order;
}

/// Counts pairs (set partition P of {1..k}, semistandard filling of lambda by
/// n - t zeros and the t block maxima of P) by listing every filling.
inline Nat pair_count_oracle(int n, int k, const Partition& lambda)
{
    if (n > 6 || k > 8) {
        throw error(errc::scale_exceeded, "pair enumeration is limited to n <= 6, k <= 8");
    }
    if (n < 1 || k < 0) {
        throw error(errc::domain_error, "need n >= 1 and k >= 0");
    }
    if (lambda.size() != n) {
        throw error(errc::size_mismatch, to_string(lambda) + " is not a partition of " + std::to_string(n));
    }
    std::vector<Box> boxes;
    for (int r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < lambda[r]; ++c) {
            boxes.push_back({r, c});
        }
    }
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(lambda.length()));
    for (int r = 0; r < lambda.length(); ++r) {
        grid[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda[r]), -1);
    }

    Nat count = 0;
    std::map<int, int> remaining;
    auto fill = [&](auto&& self, std::size_t index) -> void {
        if (index == boxes.size()) {
            ++count;
            return;
        }
        const auto [r, c] = boxes[index];
        for (auto& [value, left] : remaining) {
            if (left == 0) {
                continue;
            }
            if (c > 0 && value < grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]) {
                continue;
            }
            if (r > 0 && value <= grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)]) {
                continue;
            }
            --left;
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = value;
            self(self, index + 1);
            ++left;
        }
    };

    std::vector<int> maxima;
    for_each_set_partition(k, [&](const std::vector<int>& rgs, int blocks) {
        if (blocks > n) {
            return;
        }
        maxima.assign(static_cast<std::size_t>(blocks), 0);
        for (std::size_t i = 0; i < rgs.size(); ++i) {
            maxima[static_cast<std::size_t>(rgs[i])] = static_cast<int>(i) + 1;
        }
        remaining.clear();
        if (n - blocks > 0) {
            remaining[0] = n - blocks;
        }
        for (int m : maxima) {
            remaining[m] = 1;
        }
        fill(fill, 0);
    });
    return count;
}

} // namespace centralizer
