#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "centralizer/arith.hpp"
#include "centralizer/error.hpp"

namespace centralizer {

/// A weakly decreasing list of positive integers. Trailing zeros are stripped
/// on construction so that equal partitions compare equal.
class Partition {
public:
    Partition() = default;

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0) {
            parts_.pop_back();
        }
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
                throw error(errc::domain_error, "not a partition: parts must be positive and weakly decreasing");
            }
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }

    /// |lambda|
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Number of nonzero parts.
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    bool empty() const noexcept { return parts_.empty(); }

    /// Zero-based part access; zero past the last part.
    int operator[](int i) const noexcept
    {
        return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    bool operator==(const Partition&) const = default;

    /// Lexicographic on the parts.
    std::strong_ordering operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

private:
    std::vector<int> parts_;
};

/// Rectangular single-row partition [m] (empty for m == 0).
inline Partition row_partition(int m)
{
    return m > 0 ? Partition{m} : Partition{};
}

/// The partition with its largest part removed.
inline Partition without_first_part(const Partition& lambda)
{
    if (lambda.empty()) {
        return lambda;
    }
    return Partition(std::vector<int>(lambda.parts().begin() + 1, lambda.parts().end()));
}

inline Partition conjugate(const Partition& lambda)
{
    std::vector<int> columns(static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda.parts()) {
        for (int c = 0; c < part; ++c) {
            ++columns[static_cast<std::size_t>(c)];
        }
    }
    return Partition(std::move(columns));
}

inline bool is_self_conjugate(const Partition& lambda)
{
    return conjugate(lambda) == lambda;
}

inline int odd_part_count(const Partition& lambda)
{
    return static_cast<int>(std::count_if(lambda.parts().begin(), lambda.parts().end(), [](int p) { return p % 2 != 0; }));
}

enum class Dominance { less, equal, greater, incomparable };

/// Dominance order by partial sums.
inline Dominance dominance_compare(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size()) {
        throw error(errc::size_mismatch, "dominance compares partitions of the same size");
    }
    bool some_greater = false;
    bool some_less = false;
    int sum_lambda = 0;
    int sum_mu = 0;
    const int rows = std::max(lambda.length(), mu.length());
    for (int i = 0; i < rows; ++i) {
        sum_lambda += lambda[i];
        sum_mu += mu[i];
        some_greater = some_greater || sum_lambda > sum_mu;
        some_less = some_less || sum_lambda < sum_mu;
    }
    if (some_greater && some_less) {
        return Dominance::incomparable;
    }
    if (some_greater) {
        return Dominance::greater;
    }
    return some_less ? Dominance::less : Dominance::equal;
}

/// Hook length of the box in 1-based (row, col).
inline int hook_length(const Partition& lambda, int row, int col)
{
    if (row < 1 || col < 1 || row > lambda.length() || col > lambda[row - 1]) {
        throw error(errc::out_of_shape, "box (" + std::to_string(row) + "," + std::to_string(col) + ") is not in the diagram");
    }
    const int arm = lambda[row - 1] - col;
    int leg = 0;
    for (int r = row; r < lambda.length() && lambda[r] >= col; ++r) {
        ++leg;
    }
    return arm + leg + 1;
}

/// f^lambda by the hook-length formula.
inline Nat num_syt(const Partition& lambda)
{
    Nat hooks = 1;
    for (int r = 1; r <= lambda.length(); ++r) {
        for (int c = 1; c <= lambda[r - 1]; ++c) {
            hooks *= hook_length(lambda, r, c);
        }
    }
    return factorial(lambda.size()) / hooks;
}

inline bool contains(const Partition& outer, const Partition& inner)
{
    if (inner.length() > outer.length()) {
        return false;
    }
    for (int i = 0; i < inner.length(); ++i) {
        if (inner[i] > outer[i]) {
            return false;
        }
    }
    return true;
}

class SkewShape {
public:
    SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner))
    {
        if (!contains(outer_, inner_)) {
            throw error(errc::out_of_shape, "inner shape does not fit inside outer shape");
        }
    }

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    int size() const noexcept { return outer_.size() - inner_.size(); }

private:
    Partition outer_;
    Partition inner_;
};

namespace detail {

class skew_syt_cache {
public:
    bool find(const std::pair<Partition, Partition>& key, Nat& out)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = values_.find(key);
        if (it == values_.end()) {
            return false;
        }
        out = it->second;
        return true;
    }

    void store(std::pair<Partition, Partition> key, const Nat& value)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        values_.emplace(std::move(key), value);
    }

private:
    std::mutex mutex_;
    std::map<std::pair<Partition, Partition>, Nat> values_;
};

inline skew_syt_cache& skew_cache()
{
    static skew_syt_cache cache;
    return cache;
}

// The largest entry of a standard skew filling sits in a corner of the outer
// shape that is not in the inner shape; recurse on each such corner.
inline Nat skew_syt_count(const Partition& outer, const Partition& inner)
{
    if (outer == inner) {
        return 1;
    }
    auto key = std::make_pair(outer, inner);
    Nat cached;
    if (skew_cache().find(key, cached)) {
        return cached;
    }
    Nat total = 0;
    std::vector<int> parts = outer.parts();
    for (int r = 0; r < outer.length(); ++r) {
        const bool corner = r + 1 == outer.length() || outer[r + 1] < outer[r];
        if (!corner || outer[r] <= inner[r]) {
            continue;
        }
        --parts[static_cast<std::size_t>(r)];
        total += skew_syt_count(Partition(parts), inner);
        ++parts[static_cast<std::size_t>(r)];
    }
    skew_cache().store(std::move(key), total);
    return total;
}

} // namespace detail

/// Standard fillings of outer/inner with 1..|outer|-|inner|.
inline Nat num_skew_syt(const SkewShape& shape)
{
    return detail::skew_syt_count(shape.outer(), shape.inner());
}

/// Finite list of nonnegative integers (the content of a tableau).
class WeakComposition {
public:
    WeakComposition() = default;
    WeakComposition(std::initializer_list<int> entries) : WeakComposition(std::vector<int>(entries)) {}

    explicit WeakComposition(std::vector<int> entries) : entries_(std::move(entries))
    {
        for (int e : entries_) {
            if (e < 0) {
                throw error(errc::domain_error, "weak composition entries must be nonnegative");
            }
        }
    }

    const std::vector<int>& entries() const noexcept { return entries_; }
    int size() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0); }

private:
    std::vector<int> entries_;
};

/// 1-based box coordinates.
struct Box {
    int row = 0;
    int col = 0;

    bool operator==(const Box&) const = default;
};

/// Rows weakly increase, columns strictly increase. Entries are nonnegative;
/// zero is an ordinary value below every positive entry.
class SemistandardTableau {
public:
    SemistandardTableau() = default;

    explicit SemistandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows))
    {
        while (!rows_.empty() && rows_.back().empty()) {
            rows_.pop_back();
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto& row = rows_[r];
            if (row.empty() || (r > 0 && row.size() > rows_[r - 1].size())) {
                throw error(errc::domain_error, "tableau rows do not form a partition shape");
            }
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (row[c] < 0) {
                    throw error(errc::domain_error, "tableau entries must be nonnegative");
                }
                if (c > 0 && row[c] < row[c - 1]) {
                    throw error(errc::domain_error, "tableau row is not weakly increasing");
                }
                if (r > 0 && row[c] <= rows_[r - 1][c]) {
                    throw error(errc::domain_error, "tableau column is not strictly increasing");
                }
            }
        }
    }

    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

    Partition shape() const
    {
        std::vector<int> lengths;
        lengths.reserve(rows_.size());
        for (const auto& row : rows_) {
            lengths.push_back(static_cast<int>(row.size()));
        }
        return Partition(std::move(lengths));
    }

    int count(int value) const
    {
        int n = 0;
        for (const auto& row : rows_) {
            n += static_cast<int>(std::count(row.begin(), row.end(), value));
        }
        return n;
    }

    bool operator==(const SemistandardTableau&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

namespace detail {

// Semistandard tableaux of shape lambda and content gamma, built value by
// value: the boxes holding one value form a horizontal strip, so row r may
// grow at most to the length row r-1 had before that value was placed.
class kostka_counter {
public:
    kostka_counter(const Partition& lambda, const std::vector<int>& gamma) : lambda_(lambda), gamma_(gamma) {}

    Nat count()
    {
        std::vector<int> empty(static_cast<std::size_t>(lambda_.length()), 0);
        return place_value(empty, 0);
    }

private:
    Nat place_value(const std::vector<int>& before, std::size_t index)
    {
        if (index == gamma_.size()) {
            return before == lambda_.parts() ? Nat(1) : Nat(0);
        }
        std::vector<int> after = before;
        return extend_row(before, after, index, 0, gamma_[index]);
    }

    Nat extend_row(const std::vector<int>& before, std::vector<int>& after, std::size_t index, int row, int remaining)
    {
        if (row == lambda_.length()) {
            return remaining == 0 ? place_value(after, index + 1) : Nat(0);
        }
        const auto r = static_cast<std::size_t>(row);
        int cap = lambda_[row];
        if (row > 0) {
            cap = std::min(cap, before[r - 1]);
        }
        Nat total = 0;
        for (int len = before[r]; len <= cap && len - before[r] <= remaining; ++len) {
            after[r] = len;
            total += extend_row(before, after, index, row + 1, remaining - (len - before[r]));
        }
        after[r] = before[r];
        return total;
    }

    const Partition& lambda_;
    const std::vector<int>& gamma_;
};

} // namespace detail

/// K_{lambda,gamma}: semistandard tableaux of shape lambda whose entry i
/// occurs gamma_i times.
inline Nat kostka(const Partition& lambda, const WeakComposition& gamma)
{
    if (lambda.size() != gamma.size()) {
        throw error(errc::size_mismatch, "Kostka number needs |lambda| = |gamma|");
    }
    return detail::kostka_counter(lambda, gamma.entries()).count();
}

/// K_{lambda,[n-t,1^t]}, with t = n read as type [1^n]. Evaluated through
/// the skew count f^{lambda/[n-t]}: the n-t smallest entries fill the start of
/// the first row and the t distinct ones fill the rest standardly.
inline Nat kostka_hook_type(const Partition& lambda, int n, int t)
{
    if (lambda.size() != n) {
        throw error(errc::size_mismatch, "lambda must be a partition of n");
    }
    if (t < 0 || t > n) {
        throw error(errc::t_out_of_range, "t = " + std::to_string(t) + " outside [0, " + std::to_string(n) + "]");
    }
    if (lambda[0] < n - t) {
        return 0;
    }
    return num_skew_syt(SkewShape(lambda, row_partition(n - t)));
}

/// The hook-type content [n-t,1^t] as a weak composition.
inline WeakComposition hook_type(int n, int t)
{
    std::vector<int> entries;
    if (n - t > 0) {
        entries.push_back(n - t);
    }
    entries.insert(entries.end(), static_cast<std::size_t>(t), 1);
    return WeakComposition(std::move(entries));
}

/// All partitions of n, in decreasing lexicographic order.
inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> result;
    if (n < 0) {
        return result;
    }
    std::vector<int> parts;
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            result.emplace_back(parts);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    recurse(recurse, n, n);
    return result;
}

/// Involutions of S_r with exactly p fixed points: C(r,p)(r-p-1)!!.
inline Nat involutions_with_fixed_points(int r, int p)
{
    if (p < 0 || p > r) {
        throw error(errc::domain_error, "need 0 <= p <= r");
    }
    if ((r - p) % 2 != 0) {
        return 0;
    }
    return binomial(r, p) * odd_double_factorial(r - p - 1);
}

// Text format: "3,1,1"; the empty partition is "empty".
inline std::string to_string(const Partition& lambda)
{
    if (lambda.empty()) {
        return "empty";
    }
    std::string out;
    for (int i = 0; i < lambda.length(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(lambda[i]);
    }
    return out;
}

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, const char* what)
{
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view token = text.substr(pos, comma - pos);
        if (token.empty() || token.size() > 6 ||
            !std::all_of(token.begin(), token.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
            throw error(errc::parse_error, std::string("malformed ") + what + ": \"" + std::string(text) + "\"");
        }
        values.push_back(std::stoi(std::string(token)));
        pos = comma + 1;
    }
    return values;
}

} // namespace detail

inline Partition parse_partition(std::string_view text)
{
    if (text == "empty") {
        return Partition{};
    }
    auto parts = detail::parse_int_list(text, "partition");
    try {
        return Partition(std::move(parts));
    } catch (const error&) {
        throw error(errc::parse_error, "not a weakly decreasing list of positive parts: \"" + std::string(text) + "\"");
    }
}

} // namespace centralizer
