#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "centralizer/error.hpp"

namespace centralizer {

/// Arbitrary-precision integer. Every count and dimension in the library is a
/// Nat and is nonnegative; signed intermediates (alternating sums, character
/// values) use the same representation under the name BigInt.
using Nat = boost::multiprecision::cpp_int;
using BigInt = boost::multiprecision::cpp_int;

/// C(n,k); zero outside 0 <= k <= n.
inline Nat binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    Nat result = 1;
    for (int i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

inline Nat factorial(int n)
{
    Nat result = 1;
    for (int i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

namespace detail {

// Rows are appended under the lock and never modified afterwards.
class stirling_table {
public:
    Nat get(int k, int t)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        extend_to(k);
        return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)];
    }

private:
    void extend_to(int k)
    {
        if (rows_.empty()) {
            rows_.push_back({Nat(1)});
        }
        while (static_cast<int>(rows_.size()) <= k) {
            const auto& prev = rows_.back();
            const std::size_t m = prev.size(); // new row index
            std::vector<Nat> row(m + 1, Nat(0));
            for (std::size_t t = 1; t <= m; ++t) {
                Nat value = prev[t - 1];
                if (t < m) {
                    value += Nat(t) * prev[t];
                }
                row[t] = value;
            }
            rows_.push_back(std::move(row));
        }
    }

    std::mutex mutex_;
    std::vector<std::vector<Nat>> rows_;
};

inline stirling_table& stirling_cache()
{
    static stirling_table table;
    return table;
}

} // namespace detail

/// Stirling number of the second kind: set partitions of a k-set into exactly
/// t nonempty blocks. Total: zero whenever t is outside [0, k].
inline Nat stirling2(int k, int t)
{
    if (k < 0 || t < 0 || t > k) {
        return 0;
    }
    return detail::stirling_cache().get(k, t);
}

/// B(k,n): set partitions of a k-set into at most n blocks.
inline Nat bell_restricted(int k, int n)
{
    Nat sum = 0;
    for (int t = 0; t <= n && t <= k; ++t) {
        sum += stirling2(k, t);
    }
    return sum;
}

inline Nat bell(int k)
{
    return bell_restricted(k, k);
}

/// m!! for odd m, with (-1)!! = 0!! = 1.
inline Nat odd_double_factorial(int m)
{
    if (m < -1) {
        throw error(errc::domain_error, "double factorial of " + std::to_string(m));
    }
    if (m > 0 && m % 2 == 0) {
        throw error(errc::domain_error, "odd double factorial of even " + std::to_string(m));
    }
    Nat result = 1;
    for (int j = m; j > 1; j -= 2) {
        result *= j;
    }
    return result;
}

/// Visits every set partition of {0,...,k-1} as a restricted growth string:
/// rgs[i] is the block of element i, and rgs[i] <= 1 + max(rgs[0..i-1]).
/// The visitor receives the string and the number of blocks.
inline void for_each_set_partition(int k, const std::function<void(const std::vector<int>&, int)>& visit)
{
    if (k < 0) {
        return;
    }
    std::vector<int> rgs(static_cast<std::size_t>(k), 0);
    if (k == 0) {
        visit(rgs, 0);
        return;
    }
    // prefix_max[i] = max(rgs[0..i])
    std::vector<int> prefix_max(static_cast<std::size_t>(k), 0);
    while (true) {
        visit(rgs, prefix_max.back() + 1);
        int i = k - 1;
        while (i > 0 && rgs[i] > prefix_max[i - 1]) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (int j = i + 1; j < k; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

/// Number of set partitions of an m-set without singleton blocks, counted by
/// enumerating every set partition.
inline Nat singleton_free_bell(int m)
{
    if (m < 0) {
        throw error(errc::domain_error, "negative set size");
    }
    Nat count = 0;
    std::vector<int> sizes;
    for_each_set_partition(m, [&](const std::vector<int>& rgs, int blocks) {
        sizes.assign(static_cast<std::size_t>(blocks), 0);
        for (int b : rgs) {
            ++sizes[static_cast<std::size_t>(b)];
        }
        for (int s : sizes) {
            if (s == 1) {
                return;
            }
        }
        ++count;
    });
    return count;
}

} // namespace centralizer
