#include "common.hpp"

using namespace kt;

namespace {

template <FieldElement K>
UniPoly<K> coprime_poly(const Genus2Curve<K>& C, Rng& rng) {
    for (;;) {
        std::vector<K> c(6);
        for (auto& a : c) a = rnd(C, rng);
        UniPoly<K> b(c);
        if (b.degree() >= 1 && gcd(b, C.F()).degree() == 0) return b;
    }
}

// every point of P^5(GF(p)), one representative each
std::vector<Vec<Fp>> all_points(const PrimeField& k) {
    std::vector<Vec<Fp>> out;
    const long p = static_cast<long>(k.p);
    for (int lead = 0; lead < 6; ++lead) {
        long count = 1;
        for (int i = lead + 1; i < 6; ++i) count *= p;
        for (long n = 0; n < count; ++n) {
            Vec<Fp> x(6, k(0));
            x[static_cast<std::size_t>(lead)] = k(1);
            long m = n;
            for (int i = 5; i > lead; --i, m /= p) x[static_cast<std::size_t>(i)] = k(m % p);
            out.push_back(std::move(x));
        }
    }
    return out;
}

}  // namespace

TEST(Twists, TwistByOneIsS) {
    auto run = [](const auto& C, std::uint64_t seed) {
        Rng rng(seed);
        const auto T = twist_surface(UniPoly<std::decay_t<decltype(C.one())>>::constant(C.one()), C);
        for (int t = 0; t < 50; ++t) {
            const auto p = rnd_vec(C.field(), rng, 6);
            const auto f = T.forms(p);
            const auto s = s_residue(p, C);
            EXPECT_EQ(f[0], s[2]);
            EXPECT_EQ(f[1], s[1]);
            EXPECT_EQ(f[2], s[0]);
            EXPECT_EQ(T.contains(p), s_membership(p, C));
        }
        for (int c = 0; c < 3; ++c) EXPECT_EQ(T.gram[static_cast<std::size_t>(c)], T.gram[static_cast<std::size_t>(c)].transpose());
    };
    run(fixture_qq(), 1);
    run(fixture_gf101(), 2);
}

TEST(Twists, GramMembershipMatchesDefinition) {
    const auto& C = fixture_gf101();
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto xi = rnd_poly(C.field(), rng, 5);
        const auto T = twist_surface(xi, C);
        for (int s = 0; s < 50; ++s) {
            const auto p = rnd_vec(C.field(), rng, 6);
            EXPECT_EQ(T.contains(p), twist_member_direct(xi, p, C));
        }
    }
}

TEST(Twists, IsomorphismToS) {
    auto run = [](const auto& C, std::uint64_t seed) {
        Rng rng(seed);
        std::vector<std::decay_t<decltype(kappa_explicit(generic_samples(C, 1, 1).samples[0].xi, C).coords())>> pts;
        for (const auto& s : generic_samples(C, seed, 25).samples) pts.push_back(kappa_explicit(s.xi, C).coords());
        for (int t = 0; t < 10; ++t) {
            const auto beta = coprime_poly(C, rng);
            const auto xi = (beta * beta) % C.F();
            const auto T = twist_surface(xi, C);
            const auto binv = inverse_mod(beta, C.F());
            for (const auto& p : pts) {
                const auto q = to_vec6((binv * to_poly(p)) % C.F());
                ASSERT_TRUE(T.contains(q));
                const auto back = twist_iso(beta, xi, q, C);
                EXPECT_TRUE(s_membership(back, C));
                EXPECT_TRUE(proj_eq(back, p));
            }
        }
    };
    run(fixture_gf101(), 4);
    run(fixture_qq(), 5);
}

TEST(Twists, WrongWitnessRejected) {
    const auto& C = fixture_gf101();
    const UniPoly<Fp> beta({C.scalar(2), C.one()});
    const auto xi = (beta * beta + UniPoly<Fp>::constant(C.one())) % C.F();
    EXPECT_EQ(code_of([&] { twist_iso(beta, xi, Vec<Fp>(6, C.one()), C); }), Errc::WitnessMismatch);
}

TEST(Twists, DiagonalCombinations) {
    auto run = [](const auto& C, std::uint64_t seed) {
        Rng rng(seed);
        for (int t = 0; t < 15; ++t) {
            const auto xi = (coprime_poly(C, rng) * coprime_poly(C, rng)) % C.F();  // not necessarily a square
            const auto d = twist_diagonal(xi, C);
            EXPECT_TRUE(d.matches());
            for (int c = 0; c < 3; ++c) EXPECT_EQ(d.combos[static_cast<std::size_t>(c)], d.combos[static_cast<std::size_t>(c)].transpose());
        }
    };
    run(fixture_gf101(), 6);
    run(fixture_qq(), 7);
    run(qq({Rational(1, 2), 1, Rational(3, 2), 2, Rational(5, 2), 3}), 8);
    const auto& C = fixture_qq();
    EXPECT_EQ(code_of([&] { twist_diagonal(UniPoly<Rational>({-3, 1}), C); }), Errc::VanishingAtRoot);
}

TEST(Twists, FastSearchMatchesBruteForceOverGF7) {
    const auto C = gf(7, {1, 2, 3, 4, 5, 6});
    const auto pts = all_points(C.field());
    ASSERT_EQ(pts.size(), 19608u);  // (7^6 - 1) / 6
    Rng rng(9);
    std::vector<UniPoly<Fp>> xis{UniPoly<Fp>::constant(C.one()), (UniPoly<Fp>({C.scalar(1), C.scalar(1)}) * UniPoly<Fp>({C.scalar(1), C.scalar(1)})) % C.F(),
                                 UniPoly<Fp>({C.scalar(3), C.scalar(0), C.scalar(1)})};
    for (const auto& xi : xis) {
        const auto T = twist_surface(xi, C);
        std::set<std::string> brute, fast;
        for (const auto& p : pts)
            if (twist_member_direct(xi, p, C)) brute.insert(proj_key(p));
        for (const auto& p : search_points(T, C)) fast.insert(proj_key(p));
        EXPECT_EQ(fast, brute) << xi.to_string();
    }
}

TEST(Twists, BijectionOnSmallFields) {
    for (std::uint64_t p : {13ull, 31ull}) {
        const auto C = gf(p, {1, 2, 3, 4, 5, 6});
        Rng rng(p);
        const auto bj = twist_bijection_check(coprime_poly(C, rng), C);
        EXPECT_TRUE(bj.bijective()) << p;
        EXPECT_GT(bj.surface_points, 0u);
    }
}

TEST(Twists, RationalSearch) {
    const auto& C = fixture_qq();
    const auto T = twist_surface(UniPoly<Rational>::constant(1), C);
    const auto pts = search_points(T, C, 2);
    EXPECT_FALSE(pts.empty());
    bool has_one = false;
    for (const auto& p : pts) {
        EXPECT_TRUE(s_membership(p, C));
        has_one = has_one || p == Vec<Rational>{1, 0, 0, 0, 0, 0};
    }
    EXPECT_TRUE(has_one);
    EXPECT_EQ(code_of([&] { search_points(T, C, 0); }), Errc::InvalidArgument);
    EXPECT_EQ(code_of([&] { search_points(T, C, 20); }), Errc::SearchSpaceTooLarge);
}
