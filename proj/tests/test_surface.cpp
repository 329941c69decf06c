#include "common.hpp"

using namespace kt;

namespace {

template <FieldElement K>
void kappa_agrees(const Genus2Curve<K>& C, std::uint64_t seed, std::size_t n) {
    const auto b = generic_samples(C, seed, n);
    ASSERT_EQ(b.samples.size(), n);
    for (const auto& s : b.samples) {
        const auto k = kappa_explicit(s.xi, C);
        const auto full = kappa_constructive_full(s.D, C);
        EXPECT_TRUE(full.congruence && full.square);
        EXPECT_TRUE(proj_eq(k, kappa_constructive(s.D, C))) << divisor_string(s.D);
        EXPECT_TRUE(s_membership(k, C));
    }
}

// P^2 mod F = sum_j omega_j pi_j^2 P_j, since P_i P_j = 0 mod F for i != j and
// P_j^2 = omega_j P_j mod F.
template <FieldElement K>
UniPoly<K> lagrange_square(const Vec<K>& p, const Genus2Curve<K>& C) {
    const auto pi = to_pi(p, C);
    UniPoly<K> r;
    for (int j = 1; j <= 6; ++j) r += C.P(j) * (C.omega(j) * pi[C.idx(j)] * pi[C.idx(j)]);
    return r;
}

}  // namespace

TEST(Kappa, ExplicitMatchesConstructive) {
    kappa_agrees(fixture_qq(), 1, 150);
    kappa_agrees(fixture_gf101(), 2, 300);
    kappa_agrees(fixture_pm(), 3, 100);
    kappa_agrees(gf(10007, {3, 17, 99, 1000, 5000, 9999}), 4, 200);
}

TEST(Kappa, NonMonicCurve) {
    PrimeField k(103);
    const auto C = Genus2Curve<Fp>::from_coeffs(k, {k(3), k(-1), k(0), k(5), k(2), k(1), k(7)});
    kappa_agrees(C, 5, 100);
}

TEST(Kappa, ExplicitFormsHaveABaseLocusOnK) {
    // (0, 7) with w = +-720 on (X-1)...(X-6): one sign lands on the common zero set of the
    // explicit forms, the other does not; the constructive map is defined for both.
    const auto& C = fixture_qq();
    int vanish = 0;
    for (long w : {720L, -720L}) {
        const auto D = DivisorPair<Rational>::from_even(C, 0, 7, w);
        const auto why = classify(D, C);
        if (why && *why == SkipReason::FormsVanish) {
            ++vanish;
            EXPECT_EQ(code_of([&] { kappa_explicit(kummer_coords(D, C), C); }), Errc::ZeroVector);
        } else {
            EXPECT_TRUE(proj_eq(kappa_explicit(kummer_coords(D, C), C), kappa_constructive(D, C)));
        }
        EXPECT_TRUE(s_membership(kappa_constructive(D, C), C));
    }
    EXPECT_EQ(vanish, 1);
}

TEST(Kappa, SymmetricAndRejectsBadInput) {
    const auto& C = fixture_gf101();
    DivisorSampler<Fp> s(C, 6);
    for (int t = 0; t < 100; ++t) {
        const auto D = s.next();
        EXPECT_TRUE(proj_eq(kappa_constructive(D, C), kappa_constructive(D.swapped(), C)));
    }
    EXPECT_EQ(code_of([&] { kappa_explicit(ProjPoint<Fp>({C.one(), C.one(), C.one(), C.one()}), C); }), Errc::NotOnKummer);
}

TEST(Membership, ResidueMatchesLagrangeOracle) {
    for (const auto* C : {&fixture_gf101()}) {
        Rng rng(7);
        for (int t = 0; t < 100; ++t) {
            const auto p = rnd_vec(C->field(), rng, 6);
            const auto sq = (to_poly(p) * to_poly(p)) % C->F();
            EXPECT_EQ(sq, lagrange_square(p, *C));
            const auto r = s_residue(p, *C);
            EXPECT_EQ(r[0], sq[3]);
            EXPECT_EQ(r[1], sq[4]);
            EXPECT_EQ(r[2], sq[5]);
        }
    }
}

TEST(Membership, QuadricsInPiCoordinates) {
    const auto& C = fixture_qq();
    Rng rng(8);
    const auto G = s_quadric_grams_pi(C);
    for (int t = 0; t < 50; ++t) {
        const auto p = rnd_vec(RationalField{}, rng, 6);
        const auto pi = to_pi(p, C);
        EXPECT_EQ(from_pi(pi, C), p);
        const auto q = s_quadrics_pi(pi, C);
        for (int c = 0; c < 3; ++c) EXPECT_EQ(quad_form(G[static_cast<std::size_t>(c)], pi), q[static_cast<std::size_t>(c)]);
        // on S exactly when the three quadrics vanish
        EXPECT_EQ(s_membership(p, C), q[0].is_zero() && q[1].is_zero() && q[2].is_zero());
    }
    for (const auto& s : generic_samples(C, 9, 40).samples) {
        const auto p = kappa_explicit(s.xi, C).coords();
        const auto q = s_quadrics_pi(to_pi(p, C), C);
        EXPECT_TRUE(q[0].is_zero() && q[1].is_zero() && q[2].is_zero());
        EXPECT_TRUE(polar_duality_check(p, C, 0));
        EXPECT_TRUE(polar_duality_check(p, C, 2));
    }
    const Vec<Rational> x5{0, 0, 0, 0, 0, 1};
    ASSERT_FALSE(s_quadrics_pi(to_pi(x5, C), C)[0].is_zero());
    EXPECT_EQ(code_of([&] { polar_duality_check(x5, C, 0); }), Errc::NotOnQuadric);
    EXPECT_TRUE(s_membership(Vec<Rational>{1, 0, 0, 0, 0, 0}, C));  // 1^2 has degree 0
}

TEST(Involutions, GeneratorsAndGroup) {
    const auto& C = fixture_gf101();
    const auto I = Matrix<Fp>::identity(6, C.one());
    Matrix<Fp> all = I;
    for (int i = 1; i <= 6; ++i) {
        const auto E = epsilon_matrix(i, C);
        EXPECT_EQ(E * E, I);
        for (int j = 1; j <= 6; ++j) {
            const auto F = epsilon_matrix(j, C);
            EXPECT_EQ(E * F, F * E);
        }
        all = E * all;
    }
    EXPECT_TRUE(matrix_proj_eq(all, I));  // the product of all six is -1
    EXPECT_FALSE(all == I);
    const auto G = inv_group(C);
    EXPECT_EQ(G.size(), 32u);
    for (const auto& e : G) EXPECT_TRUE(matrix_proj_eq(e.coeff, pi_to_coeff(epsilon_mask_pi(e.mask, C), C)));
}

TEST(Involutions, PreserveS) {
    const auto& C = fixture_qq();
    for (const auto& s : generic_samples(C, 10, 30).samples) {
        const auto p = kappa_explicit(s.xi, C).coords();
        for (unsigned m = 0; m < 64; m += 5) EXPECT_TRUE(s_membership(epsilon_mask(m, p, C), C));
        for (int i = 1; i <= 6; ++i) EXPECT_EQ(epsilon(i, p, C), epsilon_matrix(i, C) * p);
    }
}

TEST(Lines, CanonicalMasks) {
    std::set<unsigned> c;
    for (unsigned m = 0; m < 64; ++m) {
        c.insert(canonical_line_mask(m));
        EXPECT_EQ(canonical_line_mask(m), canonical_line_mask(63u ^ m));
        EXPECT_LE(__builtin_popcount(canonical_line_mask(m)), 3);
    }
    EXPECT_EQ(c.size(), 32u);
}

TEST(Lines, IncidenceOverSeveralCurves) {
    auto run = [](const auto& C) {
        const auto T = line_incidence(C);
        EXPECT_EQ(T.lines.size(), 32u);
        EXPECT_EQ(T.meetings.size(), 96u);
        for (int d : T.degree) EXPECT_EQ(d, 6);
        for (const auto& l : T.lines) {
            EXPECT_TRUE(s_membership(l.a, C) && s_membership(l.b, C));
            EXPECT_TRUE(s_membership(l.a + C.scalar(3) * l.b, C));
        }
        for (const auto& m : T.meetings) {
            EXPECT_TRUE(on_line(m.point, T.lines[m.first]));
            EXPECT_TRUE(on_line(m.point, T.lines[m.second]));
        }
    };
    run(fixture_qq());
    run(fixture_gf101());
    run(fixture_pm());
    run(gf(31, {0, 3, 7, 12, 20, 30}));
}

TEST(Lines, Delta0MeetsOnlyTheSixDeltaI) {
    const auto& C = fixture_pm();
    const auto d0 = line_delta(0u, C);
    EXPECT_EQ(d0.label(), "Delta_0");
    EXPECT_EQ(line_delta(std::vector<int>{2, 5}, C).label(), "Delta_25");
    for (int i = 1; i <= 6; ++i) {
        const auto x = line_intersection(d0, line_delta(1u << (i - 1), C));
        ASSERT_TRUE(x);
        EXPECT_TRUE(proj_eq(*x, point_p(i, C)));
    }
    for (unsigned m = 1; m < 64; ++m)
        if (canonical_line_mask(m) == m && __builtin_popcount(m) >= 2) { EXPECT_FALSE(line_intersection(d0, line_delta(m, C))); }
}

TEST(Lines, DeltaIParametrization) {
    const auto& C = fixture_qq();
    for (int i = 1; i <= 6; ++i)
        for (long x = -4; x <= 9; ++x) {
            const auto p = delta_i_param(i, Rational(x), C);
            EXPECT_TRUE(s_membership(p, C));
            EXPECT_TRUE(on_line(p, line_delta(1u << (i - 1), C)));
            Vec<Rational> lin{-x, 1, 0, 0, 0, 0};
            EXPECT_TRUE(proj_eq(p, epsilon(i, lin, C)));
        }
}

TEST(BlowUp, DirectionAtNode0) {
    for (const auto* C : {&fixture_qq(), &fixture_pm()})
        for (long x : {-5L, 0L, 7L, 11L}) {
            if (C->F()(Rational(x)).is_zero()) continue;
            EXPECT_TRUE(proj_eq(blowup_direction_node0(Rational(x), *C), Vec<Rational>{-x, 1, 0, 0, 0, 0}));
        }
    const auto& G = fixture_gf101();
    for (long x = 7; x < 101; x += 9) EXPECT_TRUE(proj_eq(blowup_direction_node0(G.scalar(x), G), Vec<Fp>{G.scalar(-x), G.one(), G.scalar(0), G.scalar(0), G.scalar(0), G.scalar(0)}));
}
