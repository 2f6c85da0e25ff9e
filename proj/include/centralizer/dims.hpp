#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "centralizer/arith.hpp"
#include "centralizer/branch.hpp"
#include "centralizer/error.hpp"
#include "centralizer/young.hpp"

namespace centralizer {

/// A level l in (1/2)Z>=0, stored as 2l.
class HalfLevel {
public:
    HalfLevel() = default;

    explicit HalfLevel(int twice) : twice_(twice)
    {
        if (twice < 0) {
            throw error(errc::domain_error, "levels are nonnegative");
        }
    }

    static HalfLevel integer(int k) { return HalfLevel(2 * k); }

    /// The level k + 1/2.
    static HalfLevel half(int k) { return HalfLevel(2 * k + 1); }

    int twice() const noexcept { return twice_; }
    bool is_half() const noexcept { return twice_ % 2 != 0; }

    /// floor(l): the k of level k or k + 1/2.
    int whole() const noexcept { return twice_ / 2; }

    HalfLevel next() const { return HalfLevel(twice_ + 1); }

    auto operator<=>(const HalfLevel&) const = default;

private:
    int twice_ = 0;
};

inline std::string to_string(HalfLevel level)
{
    if (level.is_half()) {
        return std::to_string(level.twice()) + "/2";
    }
    return std::to_string(level.whole());
}

/// Accepts "3", "7/2" and "3.5".
inline HalfLevel parse_level(std::string_view text)
{
    auto digits = [&](std::string_view s) {
        if (s.empty() || s.size() > 6) {
            throw error(errc::parse_error, "malformed level \"" + std::string(text) + "\"");
        }
        for (char ch : s) {
            if (ch < '0' || ch > '9') {
                throw error(errc::parse_error, "malformed level \"" + std::string(text) + "\"");
            }
        }
        return std::stoi(std::string(s));
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const int num = digits(text.substr(0, slash));
        const int den = digits(text.substr(slash + 1));
        if (den == 1) {
            return HalfLevel::integer(num);
        }
        if (den != 2) {
            throw error(errc::parse_error, "levels are multiples of 1/2: \"" + std::string(text) + "\"");
        }
        return HalfLevel(num);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const int whole = digits(text.substr(0, dot));
        const auto frac = text.substr(dot + 1);
        if (frac == "5") {
            return HalfLevel::half(whole);
        }
        if (frac == "0") {
            return HalfLevel::integer(whole);
        }
        throw error(errc::parse_error, "levels are multiples of 1/2: \"" + std::string(text) + "\"");
    }
    return HalfLevel::integer(digits(text));
}

enum class Group { sym, alt };
enum class Module { perm, refl };

inline const char* to_string(Module module)
{
    return module == Module::perm ? "perm" : "refl";
}

/// One centralizer algebra: End over G (integer level) or over the point
/// stabilizer subgroup (half level) of the permutation or reflection module's
/// floor(level)-th tensor power.
struct Context {
    Group group = Group::sym;
    int n = 1;
    Module module = Module::perm;
    HalfLevel level;

    /// Size of the partitions labelling irreducibles at this level.
    int label_size() const noexcept { return level.is_half() ? n - 1 : n; }
};

/// Alternating labels need n >= 2 (integer levels) and n >= 3 (half levels):
/// on A_1 the self-conjugate [1] does not split.
inline void validate(const Context& ctx)
{
    if (ctx.n < 1) {
        throw error(errc::invalid_context, "n must be at least 1");
    }
    if (ctx.group == Group::alt && ctx.label_size() < 2) {
        throw error(errc::invalid_context, "alternating-group contexts need labels of size at least 2");
    }
}

namespace detail {

inline void require_size(const Partition& lambda, int size, const char* what)
{
    if (lambda.size() != size) {
        throw error(errc::size_mismatch, std::string(what) + " must be a partition of " + std::to_string(size) + ", got " +
                                             to_string(lambda));
    }
}

inline void require_n_k(int n, int k)
{
    if (n < 1) {
        throw error(errc::domain_error, "n must be at least 1");
    }
    if (k < 0) {
        throw error(errc::domain_error, "k must be nonnegative");
    }
}

inline Nat require_nonnegative(const BigInt& value, const char* what)
{
    if (value < 0) {
        throw error(errc::negative_count, std::string(what) + " evaluated to a negative number");
    }
    return value;
}

} // namespace detail

/// Multiplicity of S_n^lambda in M_n^{(x)k}:
///   sum_{t=0}^{n} S(k,t) K_{lambda,[n-t,1^t]}.
inline Nat dim_z(int n, int k, const Partition& lambda)
{
    detail::require_n_k(n, k);
    detail::require_size(lambda, n, "lambda");
    Nat sum = 0;
    for (int t = 0; t <= n && t <= k; ++t) {
        sum += stirling2(k, t) * kostka_hook_type(lambda, n, t);
    }
    return sum;
}

/// Multiplicity of S_{n-1}^mu in M_n^{(x)k} restricted to S_{n-1}:
///   sum_{t=0}^{n-1} S(k+1,t+1) K_{mu,[n-1-t,1^t]}.
inline Nat dim_z_half(int n, int k, const Partition& mu)
{
    detail::require_n_k(n, k);
    detail::require_size(mu, n - 1, "mu");
    Nat sum = 0;
    for (int t = 0; t <= n - 1 && t <= k; ++t) {
        sum += stirling2(k + 1, t + 1) * kostka_hook_type(mu, n - 1, t);
    }
    return sum;
}

/// Equivalent closed forms of dim_z / dim_z_half, kept for cross-checking.
namespace forms {

/// Kostka sum with the Kostka number counted by tableau enumeration.
inline Nat dim_z_kostka(int n, int k, const Partition& lambda)
{
    Nat sum = 0;
    for (int t = 0; t <= n; ++t) {
        sum += stirling2(k, t) * kostka(lambda, hook_type(n, t));
    }
    return sum;
}

inline Nat dim_z_half_kostka(int n, int k, const Partition& mu)
{
    Nat sum = 0;
    for (int t = 0; t <= n - 1; ++t) {
        sum += stirling2(k + 1, t + 1) * kostka(mu, hook_type(n - 1, t));
    }
    return sum;
}

/// sum_{t=|lambda#|}^{n} S(k,t) f^{lambda/[n-t]}
inline Nat dim_z_skew(int n, int k, const Partition& lambda)
{
    const int rest = n - lambda[0];
    Nat sum = 0;
    for (int t = rest; t <= n; ++t) {
        sum += stirling2(k, t) * num_skew_syt(SkewShape(lambda, row_partition(n - t)));
    }
    return sum;
}

/// The first row splits off as a binomial while n - t >= lambda_2:
///   f^{lambda#} sum_{t=|lambda#|}^{n-lambda_2} S(k,t) C(t,|lambda#|)
///     + sum_{t=n-lambda_2+1}^{n} S(k,t) f^{lambda/[n-t]}
inline Nat dim_z_split(int n, int k, const Partition& lambda)
{
    const Partition rest = without_first_part(lambda);
    const int r = rest.size();
    Nat head = 0;
    for (int t = r; t <= n - lambda[1]; ++t) {
        head += stirling2(k, t) * binomial(t, r);
    }
    Nat tail = 0;
    for (int t = n - lambda[1] + 1; t <= n; ++t) {
        tail += stirling2(k, t) * num_skew_syt(SkewShape(lambda, row_partition(n - t)));
    }
    return num_syt(rest) * head + tail;
}

inline Nat dim_z_half_skew(int n, int k, const Partition& mu)
{
    const int m = n - 1;
    Nat sum = 0;
    for (int t = m - mu[0]; t <= m; ++t) {
        sum += stirling2(k + 1, t + 1) * num_skew_syt(SkewShape(mu, row_partition(m - t)));
    }
    return sum;
}

/// Half-level analogue of dim_z_split, with S(k+1,t+1) throughout and the
/// tail running to n-1.
inline Nat dim_z_half_split(int n, int k, const Partition& mu)
{
    const int m = n - 1;
    const Partition rest = without_first_part(mu);
    const int r = rest.size();
    Nat head = 0;
    for (int t = r; t <= m - mu[1]; ++t) {
        head += stirling2(k + 1, t + 1) * binomial(t, r);
    }
    Nat tail = 0;
    for (int t = m - mu[1] + 1; t <= m; ++t) {
        tail += stirling2(k + 1, t + 1) * num_skew_syt(SkewShape(mu, row_partition(m - t)));
    }
    return num_syt(rest) * head + tail;
}

/// Closed form for lambda_2 <= 2 (every lambda once n <= 5).
inline Nat dim_z_small_second_row(int n, int k, const Partition& lambda)
{
    if (lambda[1] > 2) {
        throw error(errc::domain_error, "closed form needs lambda_2 <= 2");
    }
    const Nat tail = stirling2(k, n - 1) + stirling2(k, n);
    if (lambda[0] == 1) {
        return tail;
    }
    const Partition rest = without_first_part(lambda);
    const int r = rest.size();
    Nat head = 0;
    for (int t = r; t <= n - 2; ++t) {
        head += binomial(t, r) * stirling2(k, t);
    }
    return num_syt(rest) * head + num_syt(lambda) * tail;
}

} // namespace forms

/// Dimension of the irreducible partition-algebra module indexed by nu at a
/// generic parameter; level k or k + 1/2.
inline Nat dim_partition_algebra_irr(HalfLevel level, const Partition& nu)
{
    const int k = level.whole();
    const int r = nu.size();
    if (r > k) {
        throw error(errc::nu_too_large, "|nu| = " + std::to_string(r) + " exceeds " + std::to_string(k));
    }
    Nat sum = 0;
    for (int t = r; t <= k; ++t) {
        sum += binomial(t, r) * (level.is_half() ? stirling2(k + 1, t + 1) : stirling2(k, t));
    }
    return num_syt(nu) * sum;
}

/// Irreducible dimension for End over A_n of M_n^{(x)k}.
inline Nat dim_z_alt(int n, int k, const AltLabel& label)
{
    detail::require_size(label.base(), n, "label");
    if (label.is_split()) {
        return dim_z(n, k, label.base());
    }
    return dim_z(n, k, label.base()) + dim_z(n, k, conjugate(label.base()));
}

/// Irreducible dimension for End over A_{n-1} of M_n^{(x)k}.
inline Nat dim_z_alt_half(int n, int k, const AltLabel& label)
{
    detail::require_size(label.base(), n - 1, "label");
    if (label.is_split()) {
        return dim_z_half(n, k, label.base());
    }
    return dim_z_half(n, k, label.base()) + dim_z_half(n, k, conjugate(label.base()));
}

namespace detail {

/// sum_{l=0}^{k} (-1)^{k-l} C(k,l) term(l)
template <typename Term>
Nat binomial_inverse(int k, Term term)
{
    BigInt sum = 0;
    for (int l = 0; l <= k; ++l) {
        BigInt value = binomial(k, l) * term(l);
        if ((k - l) % 2 != 0) {
            value = -value;
        }
        sum += value;
    }
    return require_nonnegative(sum, "alternating binomial sum");
}

} // namespace detail

/// Multiplicity of S_n^lambda in the k-th tensor power of the reflection
/// module, by binomial inversion of the permutation-module multiplicities.
inline Nat dim_qz(int n, int k, const Partition& lambda)
{
    detail::require_n_k(n, k);
    detail::require_size(lambda, n, "lambda");
    return detail::binomial_inverse(k, [&](int l) { return dim_z(n, l, lambda); });
}

inline Nat dim_qz_half(int n, int k, const Partition& mu)
{
    detail::require_n_k(n, k);
    detail::require_size(mu, n - 1, "mu");
    return detail::binomial_inverse(k, [&](int l) { return dim_z_half(n, l, mu); });
}

inline Nat dim_qz_alt(int n, int k, const AltLabel& label)
{
    detail::require_n_k(n, k);
    return detail::binomial_inverse(k, [&](int l) { return dim_z_alt(n, l, label); });
}

inline Nat dim_qz_alt_half(int n, int k, const AltLabel& label)
{
    detail::require_n_k(n, k);
    return detail::binomial_inverse(k, [&](int l) { return dim_z_alt_half(n, l, label); });
}

/// Irreducible quasi-partition-algebra module at a generic parameter.
inline Nat dim_qp_irr(int k, const Partition& nu)
{
    const int r = nu.size();
    if (r > k) {
        throw error(errc::nu_too_large, "|nu| = " + std::to_string(r) + " exceeds " + std::to_string(k));
    }
    const Nat inner = detail::binomial_inverse(k, [&](int l) {
        Nat sum = 0;
        for (int t = r; t <= l; ++t) {
            sum += binomial(t, r) * stirling2(l, t);
        }
        return sum;
    });
    return num_syt(nu) * inner;
}

/// Block of the partition-algebra Gelfand model spanned by the nu with
/// |nu| = r and p odd parts: C(r,p)(r-p-1)!! sum_{t=r}^{k} C(t,r) S(k,t).
inline Nat dim_model_block(int k, int r, int p)
{
    if (p < 0 || p > r || r > k) {
        throw error(errc::domain_error, "need 0 <= p <= r <= k");
    }
    if ((r - p) % 2 != 0) {
        throw error(errc::parity_error, "r - p must be even");
    }
    Nat sum = 0;
    for (int t = r; t <= k; ++t) {
        sum += binomial(t, r) * stirling2(k, t);
    }
    return binomial(r, p) * odd_double_factorial(r - p - 1) * sum;
}

/// Dimension of the centralizer algebra itself.
inline Nat dim_algebra(const Context& ctx)
{
    validate(ctx);
    const int n = ctx.n;
    const int k = ctx.level.whole();
    const int shift = ctx.level.is_half() ? 1 : 0;
    // Multiplicity of the trivial module in the 2k-th tensor power of M_n
    // (restricted to the subgroup at half levels), plus the sign module for A_n.
    auto trivial = [&](int power) {
        Nat value = bell_restricted(power + shift, n);
        if (ctx.group == Group::alt) {
            value += stirling2(power + shift, n - 1) + stirling2(power + shift, n);
        }
        return value;
    };
    if (ctx.module == Module::perm) {
        return trivial(2 * k);
    }
    return detail::binomial_inverse(2 * k, trivial);
}

/// Multiplicity of `label` in the context's tensor power; zero for labels of
/// the right group that do not occur.
inline Nat multiplicity(const Context& ctx, const Label& label)
{
    validate(ctx);
    const int k = ctx.level.whole();
    const bool half = ctx.level.is_half();
    const bool refl = ctx.module == Module::refl;
    if (ctx.group == Group::sym) {
        const auto* lambda = std::get_if<Partition>(&label);
        if (lambda == nullptr) {
            throw error(errc::invalid_context, "symmetric-group contexts take partition labels");
        }
        if (half) {
            return refl ? dim_qz_half(ctx.n, k, *lambda) : dim_z_half(ctx.n, k, *lambda);
        }
        return refl ? dim_qz(ctx.n, k, *lambda) : dim_z(ctx.n, k, *lambda);
    }
    const auto* alt = std::get_if<AltLabel>(&label);
    if (alt == nullptr) {
        throw error(errc::invalid_context, "alternating-group contexts take A_n labels");
    }
    if (half) {
        return refl ? dim_qz_alt_half(ctx.n, k, *alt) : dim_z_alt_half(ctx.n, k, *alt);
    }
    return refl ? dim_qz_alt(ctx.n, k, *alt) : dim_z_alt(ctx.n, k, *alt);
}

/// Every irreducible label of the group acting at this level, in display order.
inline std::vector<Label> labels_for(const Context& ctx)
{
    validate(ctx);
    std::vector<Label> labels;
    if (ctx.group == Group::sym) {
        for (auto& lambda : partitions_of(ctx.label_size())) {
            labels.emplace_back(std::move(lambda));
        }
    } else {
        for (auto& label : alt_labels_of(ctx.label_size())) {
            labels.emplace_back(std::move(label));
        }
    }
    return labels;
}

struct Component {
    Label label;
    Nat multiplicity;
};

/// Decomposition of the tensor power into irreducibles; only labels with
/// multiplicity >= 1, in display order.
inline std::vector<Component> decompose(const Context& ctx)
{
    std::vector<Component> result;
    for (auto& label : labels_for(ctx)) {
        Nat m = multiplicity(ctx, label);
        if (m > 0) {
            result.push_back({std::move(label), std::move(m)});
        }
    }
    return result;
}

} // namespace centralizer
