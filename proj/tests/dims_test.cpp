#include <gtest/gtest.h>

#include "brute.hpp"
#include "centralizer/dims.hpp"

using namespace centralizer;

namespace {

AltLabel alt(std::initializer_list<int> parts, Sign sign = Sign::none)
{
    return AltLabel(Partition(parts), sign);
}

Context sym(int n, Module m, HalfLevel level) { return {Group::sym, n, m, level}; }
Context alt_ctx(int n, Module m, HalfLevel level) { return {Group::alt, n, m, level}; }

} // namespace

TEST(HalfLevel, ParseAndFormat)
{
    EXPECT_EQ(parse_level("7/2"), HalfLevel(7));
    EXPECT_EQ(parse_level("3.5"), HalfLevel(7));
    EXPECT_EQ(parse_level("3"), HalfLevel(6));
    EXPECT_EQ(parse_level("4/1"), HalfLevel(8));
    EXPECT_EQ(to_string(HalfLevel(7)), "7/2");
    EXPECT_EQ(to_string(HalfLevel(1)), "1/2");
    EXPECT_EQ(to_string(HalfLevel(8)), "4");
    EXPECT_THROW(parse_level("7/3"), error);
    EXPECT_THROW(parse_level("3.25"), error);
    EXPECT_THROW(parse_level("-1"), error);
    EXPECT_THROW(HalfLevel(-2), error);
}

TEST(Context, Validation)
{
    EXPECT_NO_THROW(validate(sym(1, Module::perm, HalfLevel(3))));
    EXPECT_THROW(validate(sym(0, Module::perm, HalfLevel(0))), error);
    EXPECT_NO_THROW(validate(alt_ctx(2, Module::perm, HalfLevel(4))));
    try {
        validate(alt_ctx(2, Module::perm, HalfLevel(3)));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::invalid_context);
    }
}

TEST(DimZ, Examples)
{
    EXPECT_EQ(dim_z(4, 3, Partition{2, 2}), 5);
    EXPECT_EQ(dim_z(6, 4, Partition{3, 2, 1}), 20);
    EXPECT_EQ(dim_z(4, 3, Partition{1, 1, 1, 1}), 1);
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            EXPECT_EQ(dim_z(n, 0, lambda), lambda == row_partition(n) ? 1 : 0);
        }
    }
    try {
        dim_z(4, 3, Partition{2, 2, 1});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::size_mismatch);
    }
}

TEST(DimZHalf, Examples)
{
    EXPECT_EQ(dim_z_half(4, 3, Partition{2, 1}), 21);
    EXPECT_EQ(dim_z_half(6, 3, Partition{4, 1}), 22);
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(dim_z_half(n, 0, row_partition(n - 1)), 1);
    }
    EXPECT_THROW(dim_z_half(4, 3, Partition{2, 2}), error);
}

TEST(DimZ, ThreeExpressionsAgree)
{
    for (int n = 1; n <= 6; ++n) {
        for (int k = 0; k <= 6; ++k) {
            for (const auto& lambda : partitions_of(n)) {
                const Nat value = dim_z(n, k, lambda);
                EXPECT_EQ(value, forms::dim_z_kostka(n, k, lambda));
                EXPECT_EQ(value, forms::dim_z_skew(n, k, lambda));
                EXPECT_EQ(value, forms::dim_z_split(n, k, lambda));
            }
            for (const auto& mu : partitions_of(n - 1)) {
                const Nat value = dim_z_half(n, k, mu);
                EXPECT_EQ(value, forms::dim_z_half_kostka(n, k, mu));
                EXPECT_EQ(value, forms::dim_z_half_skew(n, k, mu));
                EXPECT_EQ(value, forms::dim_z_half_split(n, k, mu));
            }
        }
    }
}

TEST(DimZ, SecondRowAtMostTwo)
{
    for (int n = 1; n <= 7; ++n) {
        for (int k = 0; k <= 6; ++k) {
            for (const auto& lambda : partitions_of(n)) {
                if (lambda[1] <= 2) {
                    EXPECT_EQ(forms::dim_z_small_second_row(n, k, lambda), dim_z(n, k, lambda))
                        << n << " " << k << " " << to_string(lambda);
                }
            }
            const Partition column(std::vector<int>(static_cast<std::size_t>(n), 1));
            EXPECT_EQ(dim_z(n, k, column), stirling2(k, n - 1) + stirling2(k, n));
        }
    }
    EXPECT_THROW(forms::dim_z_small_second_row(6, 3, Partition{3, 3}), error);
}

TEST(DimZ, PascalRule)
{
    for (int n = 1; n <= 6; ++n) {
        for (int k = 0; k <= 5; ++k) {
            for (const auto& mu : partitions_of(n - 1)) {
                Nat sum = 0;
                for (const auto& lambda : induce_sym(mu, n)) {
                    sum += dim_z(n, k, lambda);
                }
                EXPECT_EQ(dim_z_half(n, k, mu), sum);
            }
            for (const auto& lambda : partitions_of(n)) {
                Nat sum = 0;
                for (const auto& mu : restrict_sym(lambda)) {
                    sum += dim_z_half(n, k, mu);
                }
                EXPECT_EQ(dim_z(n, k + 1, lambda), sum);
            }
        }
    }
}

TEST(DimAlgebra, Examples)
{
    EXPECT_EQ(dim_algebra(sym(4, Module::perm, HalfLevel::integer(3))), 187);
    EXPECT_EQ(dim_algebra(alt_ctx(4, Module::perm, HalfLevel::half(3))), 1366);
    EXPECT_EQ(dim_algebra(sym(6, Module::refl, HalfLevel::integer(4))), 694);
    EXPECT_EQ(dim_algebra(alt_ctx(6, Module::refl, HalfLevel::integer(4))), 1114);
    for (int k = 1; k <= 5; ++k) {
        EXPECT_EQ(dim_algebra(alt_ctx(2 * k + 1, Module::perm, HalfLevel::integer(k))), bell(2 * k) + 1);
    }
}

TEST(DimAlgebra, SumOfSquaresAndOrbitCount)
{
    for (int n = 1; n <= 6; ++n) {
        for (int twice = 0; twice <= 8; ++twice) {
            for (Group g : {Group::sym, Group::alt}) {
                for (Module m : {Module::perm, Module::refl}) {
                    const Context ctx{g, n, m, HalfLevel(twice)};
                    if (g == Group::alt && ctx.label_size() < 2) {
                        continue;
                    }
                    Nat squares = 0;
                    for (const auto& label : labels_for(ctx)) {
                        const Nat d = multiplicity(ctx, label);
                        squares += d * d;
                    }
                    const Nat dim = dim_algebra(ctx);
                    EXPECT_EQ(squares, dim);
                    EXPECT_EQ(dim, brute::centralizer_dimension(n, ctx.level.whole(), g == Group::alt,
                                                                ctx.level.is_half(), m == Module::refl))
                        << "n=" << n << " l=" << to_string(ctx.level);
                }
            }
        }
    }
}

TEST(DimPartitionAlgebra, Values)
{
    for (int k = 0; k <= 6; ++k) {
        for (const auto& nu : partitions_of(k)) {
            EXPECT_EQ(dim_partition_algebra_irr(HalfLevel::integer(k), nu), num_syt(nu));
            EXPECT_EQ(dim_partition_algebra_irr(HalfLevel::half(k), nu), num_syt(nu));
        }
        if (k > 0) {
            EXPECT_EQ(dim_partition_algebra_irr(HalfLevel::integer(k), row_partition(k)), 1);
        }
        EXPECT_EQ(dim_partition_algebra_irr(HalfLevel::integer(k), Partition{}), bell(k));
    }
    try {
        dim_partition_algebra_irr(HalfLevel::integer(2), Partition{2, 1});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::nu_too_large);
    }
}

TEST(DimPartitionAlgebra, StableRange)
{
    for (int k = 0; k <= 4; ++k) {
        for (int n = 2 * k; n <= 2 * k + 2; ++n) {
            if (n < 1) {
                continue;
            }
            for (int r = 0; r <= k; ++r) {
                for (const auto& nu : partitions_of(r)) {
                    std::vector<int> parts{n - r};
                    parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
                    EXPECT_EQ(dim_z(n, k, Partition(parts)), dim_partition_algebra_irr(HalfLevel::integer(k), nu));
                    if (n - 1 >= 2 * k) {
                        std::vector<int> half{n - 1 - r};
                        half.insert(half.end(), nu.parts().begin(), nu.parts().end());
                        EXPECT_EQ(dim_z_half(n, k, Partition(half)),
                                  dim_partition_algebra_irr(HalfLevel::half(k), nu));
                    }
                }
            }
        }
    }
}

TEST(DimZAlt, Examples)
{
    EXPECT_EQ(dim_z_alt(4, 3, alt({4})), 6);
    EXPECT_EQ(dim_z_alt(4, 3, alt({3, 1})), 16);
    EXPECT_EQ(dim_z_alt(4, 3, alt({2, 2}, Sign::plus)), 5);
    EXPECT_EQ(dim_z_alt_half(4, 3, alt({3})), 22);
    EXPECT_EQ(dim_z_alt_half(4, 2, alt({2, 1}, Sign::plus)), 5);
    EXPECT_EQ(dim_z_alt_half(6, 3, alt({3, 1, 1}, Sign::plus)), 9);
    EXPECT_THROW(dim_z_alt(5, 3, alt({3, 1})), error);
}

TEST(DimQZ, Examples)
{
    EXPECT_EQ(dim_qz(6, 1, Partition{6}), 0);
    EXPECT_EQ(dim_qz(6, 3, Partition{3, 2, 1}), 2);
    EXPECT_EQ(dim_qz(6, 4, Partition{4, 2}), 13);
    EXPECT_EQ(dim_qz_half(6, 3, Partition{4, 1}), 10);
    EXPECT_EQ(dim_qz_half(6, 0, Partition{5}), 1);
    EXPECT_EQ(dim_qz_half(6, 3, Partition{2, 2, 1}), 2);
    EXPECT_EQ(dim_qz_alt(6, 4, alt({4, 1, 1})), 19);
    EXPECT_EQ(dim_qz_alt(6, 4, alt({3, 2, 1}, Sign::plus)), 12);
    EXPECT_EQ(dim_qz_alt_half(6, 3, alt({3, 1, 1}, Sign::minus)), 6);
}

TEST(DimQZ, BinomialInversionRoundTrip)
{
    for (int n = 1; n <= 6; ++n) {
        for (int k = 0; k <= 5; ++k) {
            for (const auto& lambda : partitions_of(n)) {
                Nat sum = 0;
                for (int l = 0; l <= k; ++l) {
                    sum += binomial(k, l) * dim_qz(n, l, lambda);
                }
                EXPECT_EQ(sum, dim_z(n, k, lambda));
            }
            for (const auto& mu : partitions_of(n - 1)) {
                Nat sum = 0;
                for (int l = 0; l <= k; ++l) {
                    sum += binomial(k, l) * dim_qz_half(n, l, mu);
                }
                EXPECT_EQ(sum, dim_z_half(n, k, mu));
            }
        }
    }
}

TEST(DimQZ, SignedAltLabelsMatchSymmetric)
{
    for (int k = 0; k <= 4; ++k) {
        EXPECT_EQ(dim_qz_alt(6, k, alt({3, 2, 1}, Sign::plus)), dim_qz(6, k, Partition{3, 2, 1}));
        EXPECT_EQ(dim_qz_alt_half(6, k, alt({3, 1, 1}, Sign::minus)), dim_qz_half(6, k, Partition{3, 1, 1}));
    }
}

TEST(QuasiAlgebra, SingletonFreeInStableRange)
{
    for (int k = 0; k <= 4; ++k) {
        // alternating Bell sum and its telescoped form
        BigInt alternating = 0;
        for (int l = 0; l <= 2 * k; ++l) {
            BigInt term = binomial(2 * k, l) * bell(l);
            alternating += (2 * k - l) % 2 == 0 ? term : BigInt(-term);
        }
        BigInt telescoped = 1;
        for (int l = 1; l <= 2 * k; ++l) {
            telescoped += l % 2 == 1 ? BigInt(bell(2 * k - l)) : BigInt(-bell(2 * k - l));
        }
        EXPECT_EQ(alternating, singleton_free_bell(2 * k));
        EXPECT_EQ(telescoped, singleton_free_bell(2 * k));
        for (int n = 2 * k + 2; n <= 2 * k + 4; ++n) {
            EXPECT_EQ(dim_algebra(sym(n, Module::refl, HalfLevel::integer(k))), singleton_free_bell(2 * k));
            EXPECT_EQ(dim_algebra(alt_ctx(n, Module::refl, HalfLevel::integer(k))), singleton_free_bell(2 * k));
        }
        for (int n = 2 * k + 2; n <= 2 * k + 4; ++n) {
            EXPECT_EQ(dim_algebra(sym(n, Module::refl, HalfLevel::half(k))), bell(2 * k));
            // at n = 2k + 2 the sign of S_{n-1} still occurs once in M_{n-1}^{(x)2k},
            // giving A_{n-1} one extra invariant
            if (n >= 2 * k + 3) {
                EXPECT_EQ(dim_algebra(alt_ctx(n, Module::refl, HalfLevel::half(k))), bell(2 * k));
            } else if (n >= 3) {
                EXPECT_EQ(dim_algebra(alt_ctx(n, Module::refl, HalfLevel::half(k))), bell(2 * k) + 1);
            }
        }
    }
    EXPECT_EQ(dim_algebra(sym(6, Module::refl, HalfLevel::integer(3))), 41);
    EXPECT_EQ(dim_algebra(sym(10, Module::refl, HalfLevel::integer(4))), 715);
}

TEST(QuasiPartitionAlgebra, Irreducibles)
{
    for (int k = 0; k <= 5; ++k) {
        for (const auto& nu : partitions_of(k)) {
            EXPECT_EQ(dim_qp_irr(k, nu), num_syt(nu));
        }
    }
    EXPECT_EQ(dim_qp_irr(3, Partition{2, 1}), 2);
    EXPECT_EQ(dim_qp_irr(2, Partition{1}), 1);
    for (int n = 6; n <= 8; ++n) {
        EXPECT_EQ(dim_qz(n, 2, Partition{n - 1, 1}), dim_qp_irr(2, Partition{1}));
    }
    EXPECT_THROW(dim_qp_irr(1, Partition{2}), error);
}

TEST(ModelBlock, Identity)
{
    for (int k = 0; k <= 6; ++k) {
        EXPECT_EQ(dim_model_block(k, 0, 0), bell(k));
        for (int r = 0; r <= std::min(k, 6); ++r) {
            for (int p = r % 2; p <= r; p += 2) {
                Nat sum = 0;
                for (const auto& nu : partitions_of(r)) {
                    if (odd_part_count(nu) == p) {
                        sum += dim_partition_algebra_irr(HalfLevel::integer(k), nu);
                    }
                }
                EXPECT_EQ(dim_model_block(k, r, p), sum) << k << " " << r << " " << p;
            }
        }
    }
    EXPECT_EQ(dim_model_block(3, 3, 3), 1);
    try {
        dim_model_block(4, 3, 0);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::parity_error);
    }
}

TEST(Decompose, Examples)
{
    const auto s = decompose(sym(4, Module::perm, HalfLevel::integer(3)));
    ASSERT_EQ(s.size(), 5u);
    const std::vector<std::pair<Partition, int>> expected = {
        {{4}, 5}, {{3, 1}, 10}, {{2, 2}, 5}, {{2, 1, 1}, 6}, {{1, 1, 1, 1}, 1}};
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_EQ(std::get<Partition>(s[i].label), expected[i].first);
        EXPECT_EQ(s[i].multiplicity, expected[i].second);
    }

    const auto a = decompose(alt_ctx(4, Module::perm, HalfLevel::integer(3)));
    ASSERT_EQ(a.size(), 4u);
    EXPECT_EQ(to_string(a[0].label), "4");
    EXPECT_EQ(a[0].multiplicity, 6);
    EXPECT_EQ(to_string(a[1].label), "3,1");
    EXPECT_EQ(a[1].multiplicity, 16);
    EXPECT_EQ(to_string(a[2].label), "2,2+");
    EXPECT_EQ(a[2].multiplicity, 5);
    EXPECT_EQ(to_string(a[3].label), "2,2-");
    EXPECT_EQ(a[3].multiplicity, 5);

    for (Group g : {Group::sym, Group::alt}) {
        for (Module m : {Module::perm, Module::refl}) {
            const auto trivial = decompose({g, 5, m, HalfLevel(0)});
            ASSERT_EQ(trivial.size(), 1u);
            EXPECT_EQ(base_of(trivial[0].label), Partition{5});
            EXPECT_EQ(trivial[0].multiplicity, 1);
        }
    }
}

TEST(Decompose, OmitsZeroMultiplicities)
{
    const Context ctx = sym(6, Module::refl, HalfLevel::integer(1));
    const auto parts = decompose(ctx);
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(std::get<Partition>(parts[0].label), (Partition{5, 1}));
    EXPECT_EQ(multiplicity(ctx, Label(Partition{6})), 0);
    EXPECT_THROW(multiplicity(ctx, Label(alt({6}))), error);
}
