#include "common.hpp"

using namespace kt;

namespace {

template <FieldElement K>
using Form = typename KummerQuartic<K>::Form;

template <FieldElement K>
std::array<K, 4> arr(const ProjPoint<K>& p) {
    return {p[0], p[1], p[2], p[3]};
}

template <FieldElement K>
void quartic_shape(const Genus2Curve<K>& C) {
    const auto& q = C.quartic();
    const auto x1 = Form<K>::var(0, C.one()), x2 = Form<K>::var(1, C.one()), x3 = Form<K>::var(2, C.one());
    EXPECT_EQ(q.K2, x2 * x2 - Form<K>::constant(C.scalar(4)) * x1 * x3);
    EXPECT_EQ(q.K1.homogeneous_degree(), 3);
    EXPECT_EQ(q.K0.homogeneous_degree(), 4);
    EXPECT_EQ(q.poly.homogeneous_degree(), 4);
}

// K is singular at each node: all partials vanish there
template <FieldElement K>
void nodes_are_singular(const Genus2Curve<K>& C) {
    const auto& q = C.quartic();
    const auto nodes = all_nodes(C);
    ASSERT_EQ(nodes.size(), 16u);
    std::set<std::string> keys;
    for (const auto& n : nodes) {
        keys.insert(n.key());
        EXPECT_TRUE(q(n).is_zero());
        for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(q.poly.partial(i).eval(arr(n)).is_zero()) << n.to_string();
    }
    EXPECT_EQ(keys.size(), 16u);
}

// 16_6 configuration
template <FieldElement K>
void kummer_configuration(const Genus2Curve<K>& C) {
    const auto nodes = all_nodes(C);
    const auto tropes = all_tropes(C);
    ASSERT_EQ(tropes.size(), 16u);
    for (const auto& T : tropes) {
        int n = 0;
        for (const auto& N : nodes) n += dot(T.coords(), N.coords()).is_zero();
        EXPECT_EQ(n, 6) << T.to_string();
    }
    for (const auto& N : nodes) {
        int n = 0;
        for (const auto& T : tropes) n += dot(T.coords(), N.coords()).is_zero();
        EXPECT_EQ(n, 6) << N.to_string();
    }
}

}  // namespace

TEST(Quartic, ShapeOverBothFields) {
    quartic_shape(fixture_qq());
    quartic_shape(fixture_gf101());
    quartic_shape(qq({Rational(1, 2), 1, Rational(3, 2), 2, Rational(5, 2), 3}));
}

TEST(Quartic, VanishesOnDivisorImagesFromActualPoints) {
    const auto& C = fixture_gf101();
    DivisorSampler<Fp> s(C, 11);
    for (int t = 0; t < 300; ++t) {
        const auto D = s.next();
        ASSERT_TRUE(D.y && D.v);
        EXPECT_TRUE(C.quartic()(kummer_coords(D, C)).is_zero());
        // the divisor and its conjugate have the same image; so does the swapped pair
        EXPECT_EQ(kummer_coords(D.conjugate(), C), kummer_coords(D, C));
        EXPECT_EQ(kummer_coords(D.swapped(), C), kummer_coords(D, C));
    }
}

TEST(Quartic, VanishesForNonMonicCurves) {
    PrimeField k(103);
    const auto C = Genus2Curve<Fp>::from_coeffs(k, {k(3), k(-1), k(0), k(5), k(2), k(1), k(7)});
    DivisorSampler<Fp> s(C, 12);
    for (int t = 0; t < 100; ++t) EXPECT_TRUE(C.quartic()(kummer_coords(s.next(), C)).is_zero());
}

TEST(Nodes, SingularPointsOfK) {
    nodes_are_singular(fixture_qq());
    nodes_are_singular(fixture_gf101());
    nodes_are_singular(fixture_pm());
    nodes_are_singular(qq({Rational(1, 2), 1, Rational(3, 2), 2, Rational(5, 2), 3}).with_roots(
        {Rational(1, 2), 1, Rational(3, 2), 2, Rational(5, 2), 3}));
}

TEST(Nodes, NonMonicScaling) {
    const std::array<Rational, 6> r{-2, -1, 0, 1, 2, 5};
    const auto C = Genus2Curve<Rational>::from_roots(RationalField{}, r, Rational(3));
    nodes_are_singular(C);
    kummer_configuration(C);
}

TEST(Tropes, SixteenSixConfiguration) {
    kummer_configuration(fixture_qq());
    kummer_configuration(fixture_gf101());
    kummer_configuration(gf(31, {0, 3, 7, 12, 20, 30}));
}

TEST(Tropes, TropeSectionIsADoubleConic) {
    // K restricted to T_i is a square: K(p) has no simple zeros along a random line in T_i
    const auto& C = fixture_gf101();
    Rng rng(13);
    for (int i = 1; i <= 6; ++i) {
        const auto T = trope_i(i, C).coords();
        for (int t = 0; t < 20; ++t) {
            // two points in the plane T . xi = 0
            auto pick = [&] {
                Vec<Fp> a = rnd_vec(C.field(), rng, 4);
                // solve for xi3 (T has xi3 coefficient 1)
                a[2] = -(T[0] * a[0] + T[1] * a[1] + T[3] * a[3]);
                return a;
            };
            const auto a = pick(), b = pick();
            int roots = 0, distinct_simple = 0;
            for (std::uint64_t s = 0; s < 101; ++s) {
                const Fp st(s, 101);
                const auto p = a + st * b;
                if (!C.quartic()(p).is_zero()) continue;
                ++roots;
                // derivative along the line
                Fp d = C.field()(0);
                for (std::size_t j = 0; j < 4; ++j) {
                    std::array<Fp, 4> pa{p[0], p[1], p[2], p[3]};
                    d += C.quartic().poly.partial(j).eval(pa) * b[j];
                }
                distinct_simple += !d.is_zero();
            }
            EXPECT_EQ(distinct_simple, 0) << "trope " << i;
            (void)roots;
        }
    }
}

TEST(Divisors, InvalidInput) {
    const auto& C = fixture_qq();
    EXPECT_EQ(code_of([&] { DivisorPair<Rational>::from_points(C, 0, 1, 7, 0); }), Errc::InvalidArgument);
    EXPECT_EQ(code_of([&] { DivisorPair<Rational>::from_even(C, 0, 7, 1); }), Errc::InvalidArgument);
    const auto D = DivisorPair<Rational>::from_even(C, 0, 7, 720);
    EXPECT_EQ(kummer_coords(D, C), ProjPoint<Rational>({1, 7, 0, (f0_sym(Rational(0), Rational(7), C) - 1440) / 49}));
    auto E = D;
    E.u = E.x;
    EXPECT_EQ(code_of([&] { kummer_coords(E, C); }), Errc::EqualAbscissae);
}

TEST(Curves, ConstructionErrors) {
    RationalField k;
    EXPECT_EQ(code_of([&] { qq({1, 1, 2, 3, 4, 5}); }), Errc::RepeatedRoot);
    EXPECT_EQ(code_of([&] { Genus2Curve<Rational>::from_coeffs(k, {1, 0, 0, 0, 0, 1, 0}); }), Errc::InvalidCurve);
    EXPECT_EQ(code_of([&] { Genus2Curve<Rational>::from_coeffs(k, {0, 0, 1, 0, 0, 0, 1}); }), Errc::RepeatedRoot);
    const auto ns = Genus2Curve<Rational>::from_coeffs(k, {1, 1, 0, 0, 0, 0, 1});
    EXPECT_FALSE(ns.has_roots());
    EXPECT_EQ(code_of([&] { ns.theta(1); }), Errc::RootsUnavailable);
    EXPECT_EQ(code_of([&] { ns.with_found_roots(); }), Errc::NotSplit);
    EXPECT_EQ(code_of([&] { fixture_qq().with_roots({1, 2, 3, 4, 5, 7}); }), Errc::InvalidCurve);
}

TEST(Curves, FoundRootsReproduceF) {
    const auto C = Genus2Curve<Rational>::from_coeffs(RationalField{}, {-36, 0, 49, 0, -14, 0, 1}).with_found_roots();
    ASSERT_TRUE(C.has_roots());
    for (int i = 1; i <= 6; ++i) EXPECT_TRUE(C.F()(C.theta(i)).is_zero());
    EXPECT_EQ(C.F(), fixture_pm().F());
}

TEST(Curves, RootDataIdentities) {
    const auto& C = fixture_gf101();
    for (int j = 1; j <= 6; ++j) {
        EXPECT_EQ(C.P(j) * UniPoly<Fp>({-C.theta(j), C.one()}), C.F());
        EXPECT_EQ(C.omega(j), C.P(j)(C.theta(j)));
        // g_j is 1 away from theta_j and -1 at it
        for (int m = 1; m <= 6; ++m) EXPECT_EQ(C.g(j)(C.theta(m)), m == j ? -C.one() : C.one());
        EXPECT_EQ(mulmod(C.g(j), C.g(j), C.F()), UniPoly<Fp>::constant(C.one()));
    }
}

TEST(ModelChanges, TranslationMovesRoots) {
    const auto& C = fixture_qq();
    const Rational t(5, 2);
    const auto D = translate_curve(C, t);
    for (int i = 1; i <= 6; ++i) EXPECT_EQ(D.theta(i), C.theta(i) + t);
    Rng rng(14);
    for (int s = 0; s < 20; ++s) {
        const auto x = RationalField{}.random(rng, 9);
        EXPECT_EQ(D.F()(x + t), C.F()(x));
    }
    const auto S = generic_samples(C, 15, 20);
    for (const auto& s : S.samples) {
        const auto Dt = DivisorPair<Rational>::from_even(D, s.D.x + t, s.D.u + t, s.D.w);
        EXPECT_TRUE(D.quartic()(kummer_coords(Dt, D)).is_zero());
    }
}

TEST(ModelChanges, NormalizeRoots) {
    const auto n = normalize_roots(fixture_qq());
    EXPECT_EQ(n.kind, RootNormalization::Translated);
    EXPECT_EQ(n.curve.theta(3) * n.curve.theta(4), n.curve.theta(5) * n.curve.theta(6));
    const auto m = normalize_roots(qq({1, 2, 3, 4, 0, 7}));
    EXPECT_EQ(m.kind, RootNormalization::SumsEqual);
    EXPECT_TRUE(m.t.is_zero());
}

TEST(ModelChanges, MakeMonic) {
    const std::array<Rational, 6> r{1, 2, 3, 4, 5, 6};
    const auto C4 = Genus2Curve<Rational>::from_roots(RationalField{}, r, Rational(4));
    EXPECT_EQ(code_of([&] { require_monic(C4); }), Errc::NotMonic);
    const auto M = make_monic(C4);
    EXPECT_EQ(M.F(), fixture_qq().F());
    EXPECT_EQ(M.theta(6), Rational(6));
    const auto C2 = Genus2Curve<Rational>::from_roots(RationalField{}, r, Rational(2));
    EXPECT_EQ(code_of([&] { make_monic(C2); }), Errc::NotMonic);
    require_monic(fixture_qq());
}
