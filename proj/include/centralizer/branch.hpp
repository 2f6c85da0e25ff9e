#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "centralizer/error.hpp"
#include "centralizer/young.hpp"

namespace centralizer {

enum class Sign { none, plus, minus };

/// Label of an irreducible A_n-module. A conjugate pair {lambda, lambda*}
/// restricts to one module, labeled by the lexicographically greater member;
/// a self-conjugate lambda splits into lambda^+ and lambda^-.
class AltLabel {
public:
    AltLabel(Partition base, Sign sign) : base_(std::move(base)), sign_(sign)
    {
        const Partition conj = conjugate(base_);
        if (sign_ == Sign::none) {
            if (conj == base_) {
                throw error(errc::domain_error, "self-conjugate " + to_string(base_) + " needs a + or - sign");
            }
            if (base_ < conj) {
                throw error(errc::domain_error, to_string(base_) + " is not the representative of its conjugate pair");
            }
        } else if (conj != base_) {
            throw error(errc::domain_error, "only self-conjugate partitions carry a sign");
        }
    }

    /// The unsigned label of the pair {lambda, lambda*}; lambda must not be
    /// self-conjugate.
    static AltLabel of_pair(const Partition& lambda)
    {
        return AltLabel(std::max(lambda, conjugate(lambda)), Sign::none);
    }

    const Partition& base() const noexcept { return base_; }
    Sign sign() const noexcept { return sign_; }
    bool is_split() const noexcept { return sign_ != Sign::none; }

    bool operator==(const AltLabel&) const = default;

    auto operator<=>(const AltLabel& other) const
    {
        if (auto c = base_ <=> other.base_; c != 0) {
            return c;
        }
        return static_cast<int>(sign_) <=> static_cast<int>(other.sign_);
    }

private:
    Partition base_;
    Sign sign_;
};

/// Irreducible label of S_n (Partition) or A_n (AltLabel).
using Label = std::variant<Partition, AltLabel>;

inline const Partition& base_of(const Label& label)
{
    if (const auto* p = std::get_if<Partition>(&label)) {
        return *p;
    }
    return std::get<AltLabel>(label).base();
}

inline std::string to_string(const AltLabel& label)
{
    std::string out = to_string(label.base());
    if (label.sign() == Sign::plus) {
        out += '+';
    } else if (label.sign() == Sign::minus) {
        out += '-';
    }
    return out;
}

inline std::string to_string(const Label& label)
{
    return std::visit([](const auto& l) { return to_string(l); }, label);
}

/// "2,2+" / "2,2-" / "3,1". A trailing sign may also be the Unicode minus.
/// Unsigned non-self-conjugate partitions are mapped to their pair's label.
inline AltLabel parse_alt_label(std::string_view text)
{
    Sign sign = Sign::none;
    if (!text.empty() && text.back() == '+') {
        sign = Sign::plus;
        text.remove_suffix(1);
    } else if (!text.empty() && text.back() == '-') {
        sign = Sign::minus;
        text.remove_suffix(1);
    } else if (text.size() >= 3 && text.substr(text.size() - 3) == "\xE2\x88\x92") {
        sign = Sign::minus;
        text.remove_suffix(3);
    }
    const Partition base = parse_partition(text);
    const bool self_conjugate = is_self_conjugate(base);
    if (sign == Sign::none && self_conjugate) {
        throw error(errc::parse_error, "self-conjugate label " + to_string(base) + " needs a trailing + or -");
    }
    if (sign != Sign::none && !self_conjugate) {
        throw error(errc::parse_error, "sign given for non-self-conjugate " + to_string(base));
    }
    return sign == Sign::none ? AltLabel::of_pair(base) : AltLabel(base, sign);
}

/// Row order used everywhere a list of labels is displayed: decreasing
/// lexicographic on the base partition, then unsigned, +, -.
struct display_order {
    bool operator()(const Partition& a, const Partition& b) const { return a > b; }

    bool operator()(const AltLabel& a, const AltLabel& b) const
    {
        if (a.base() != b.base()) {
            return a.base() > b.base();
        }
        return static_cast<int>(a.sign()) < static_cast<int>(b.sign());
    }

    bool operator()(const Label& a, const Label& b) const
    {
        if (a.index() != b.index()) {
            return a.index() < b.index();
        }
        return std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                return (*this)(x, std::get<T>(b));
            },
            a);
    }
};

/// Partitions obtained by removing one box from the end of a row.
inline std::vector<Partition> restrict_sym(const Partition& lambda)
{
    if (lambda.empty()) {
        throw error(errc::empty_partition, "cannot restrict the empty partition");
    }
    std::vector<Partition> result;
    std::vector<int> parts = lambda.parts();
    for (int r = lambda.length() - 1; r >= 0; --r) {
        if (r + 1 < lambda.length() && lambda[r + 1] == lambda[r]) {
            continue;
        }
        --parts[static_cast<std::size_t>(r)];
        result.emplace_back(parts);
        ++parts[static_cast<std::size_t>(r)];
    }
    std::sort(result.begin(), result.end(), display_order{});
    return result;
}

/// Partitions of n obtained by adding one box to mu (|mu| = n-1).
inline std::vector<Partition> induce_sym(const Partition& mu, int n)
{
    if (mu.size() != n - 1) {
        throw error(errc::size_mismatch, "induction to S_" + std::to_string(n) + " needs a partition of " + std::to_string(n - 1));
    }
    std::vector<Partition> result;
    std::vector<int> parts = mu.parts();
    parts.push_back(0);
    for (int r = 0; r <= mu.length(); ++r) {
        if (r > 0 && mu[r - 1] == mu[r]) {
            continue;
        }
        ++parts[static_cast<std::size_t>(r)];
        result.emplace_back(parts);
        --parts[static_cast<std::size_t>(r)];
    }
    std::sort(result.begin(), result.end(), display_order{});
    return result;
}

/// Res^{S_n}_{A_n}: one unsigned label, or the two halves of a
/// self-conjugate lambda.
inline std::vector<AltLabel> restrict_sym_to_alt(const Partition& lambda)
{
    if (is_self_conjugate(lambda)) {
        return {AltLabel(lambda, Sign::plus), AltLabel(lambda, Sign::minus)};
    }
    return {AltLabel::of_pair(lambda)};
}

/// All irreducible labels of A_n, in display order.
inline std::vector<AltLabel> alt_labels_of(int n)
{
    std::vector<AltLabel> result;
    for (const auto& lambda : partitions_of(n)) {
        const Partition conj = conjugate(lambda);
        if (conj == lambda) {
            result.emplace_back(lambda, Sign::plus);
            result.emplace_back(lambda, Sign::minus);
        } else if (lambda > conj) {
            result.emplace_back(lambda, Sign::none);
        }
    }
    return result;
}

/// Res^{A_n}_{A_{n-1}} as a multiset, computed from the S_n-branching of the
/// base partition. A split label lambda^+ keeps the sign on self-conjugate
/// mu; each conjugate pair {mu, mu*} of removable shapes contributes one copy.
inline std::vector<AltLabel> restrict_alt(const AltLabel& label)
{
    // A_1 is trivial, so [1] must not be split: restriction starts at A_3.
    if (label.base().size() < 3) {
        throw error(errc::empty_partition, "A_n restriction needs n >= 3");
    }
    std::vector<AltLabel> result;
    const auto shapes = restrict_sym(label.base());
    if (!label.is_split()) {
        for (const auto& mu : shapes) {
            const auto parts = restrict_sym_to_alt(mu);
            result.insert(result.end(), parts.begin(), parts.end());
        }
    } else {
        std::vector<AltLabel> paired;
        for (const auto& mu : shapes) {
            if (is_self_conjugate(mu)) {
                result.emplace_back(mu, label.sign());
            } else {
                paired.push_back(AltLabel::of_pair(mu));
            }
        }
        std::sort(paired.begin(), paired.end());
        for (std::size_t i = 0; i < paired.size(); i += 2) {
            if (i + 1 >= paired.size() || paired[i] != paired[i + 1]) {
                throw error(errc::domain_error, "unpaired restriction of self-conjugate " + to_string(label.base()));
            }
            result.push_back(paired[i]);
        }
    }
    std::sort(result.begin(), result.end(), display_order{});
    return result;
}

/// Ind^{A_n}_{A_{n-1}} as a multiset: every A_n label whose restriction
/// contains `label`, repeated by that multiplicity.
inline std::vector<AltLabel> induce_alt(const AltLabel& label, int n)
{
    if (label.base().size() != n - 1) {
        throw error(errc::size_mismatch, "induction to A_" + std::to_string(n) + " needs a label of size " + std::to_string(n - 1));
    }
    std::vector<AltLabel> result;
    for (const auto& kappa : alt_labels_of(n)) {
        for (const auto& alpha : restrict_alt(kappa)) {
            if (alpha == label) {
                result.push_back(kappa);
            }
        }
    }
    return result;
}

} // namespace centralizer
