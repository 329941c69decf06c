#include "common.hpp"

using namespace kt;

namespace {

// cross ratio (a, b; c, d)
template <FieldElement K>
K cross(const K& a, const K& b, const K& c, const K& d) {
    return ((c - a) * (d - b)) / ((c - b) * (d - a));
}

// permutations sigma for which theta_sigma(j) -> theta_j is a Moebius map, counted from
// cross ratios alone
template <FieldElement K>
std::size_t gl0_order_by_cross_ratios(const Genus2Curve<K>& C) {
    std::array<int, 6> s{0, 1, 2, 3, 4, 5};
    std::size_t n = 0;
    auto th = [&](int i) { return C.theta(i + 1); };
    do {
        bool ok = true;
        for (int k = 3; k < 6 && ok; ++k)
            ok = cross(th(s[0]), th(s[1]), th(s[2]), th(s[static_cast<std::size_t>(k)])) == cross(th(0), th(1), th(2), th(k));
        n += ok;
    } while (std::next_permutation(s.begin(), s.end()));
    return n;
}

const std::vector<std::pair<std::vector<Rational>, std::size_t>>& configs() {
    static const std::vector<std::pair<std::vector<Rational>, std::size_t>> c{
        {{1, 2, 3, 4, 5, 6}, 2},
        {{1, 2, 3, 4, 5, 7}, 1},
        {{1, -1, 2, -2, 3, -3}, 2},
        {{1, 6, 2, 3, -1, -6}, 2},
        {{2, -2, 1, 4, 8, Rational(1, 2)}, 4},
        {{6, 11, 7, 8, 4, -1}, 2},
    };
    return c;
}

Genus2Curve<Rational> curve(const std::vector<Rational>& r) {
    std::array<Rational, 6> a;
    std::copy(r.begin(), r.end(), a.begin());
    return Genus2Curve<Rational>::from_roots(RationalField{}, a);
}

}  // namespace

TEST(Permutations, Composition) {
    const Perm6 a{1, 0, 2, 3, 4, 5}, b{0, 2, 1, 3, 4, 5};
    EXPECT_TRUE(is_identity(compose(a, a)));
    EXPECT_EQ(compose(a, b), (Perm6{1, 2, 0, 3, 4, 5}));
    EXPECT_EQ(perm_to_string(a), "[2 1 3 4 5 6]");
}

TEST(GL0, OrdersAgreeWithCrossRatios) {
    for (const auto& [r, order] : configs()) {
        const auto C = curve(r);
        const auto G = find_gl0(C);
        EXPECT_EQ(G.size(), order);
        EXPECT_EQ(gl0_order_by_cross_ratios(C), order);
        for (const auto& m : G) EXPECT_TRUE(mobius_valid(m, C));
    }
    const auto& F = fixture_gf101();
    EXPECT_EQ(find_gl0(F).size(), gl0_order_by_cross_ratios(F));
}

TEST(GL0, InvalidCandidate) {
    const auto& C = fixture_qq();
    MobiusCandidate<Rational> m{0, 1, 1, 1, {0, 1, 2, 3, 4, 5}};
    EXPECT_FALSE(mobius_valid(m, C));
    EXPECT_EQ(code_of([&] { gl0_to_matrix(m, C); }), Errc::InvalidCandidate);
}

TEST(GL, GroupStructure) {
    for (const auto& [r, order] : configs()) {
        const auto C = curve(r);
        const auto G = build_gl(C);
        EXPECT_TRUE(G.closed);
        EXPECT_EQ(G.elements.size(), 32 * order);
        std::set<std::string> keys;
        for (const auto& e : G.elements) keys.insert(matrix_key(e.pi));
        EXPECT_EQ(keys.size(), G.elements.size());
    }
}

TEST(GL, ElementsAreAutomorphismsOfS) {
    const auto& C = fixture_pm();
    const auto G = build_gl(C);
    const auto lines = all_lines(C);
    const auto S = generic_samples(C, 1, 20).samples;
    for (const auto& m : G.gl0) {
        const auto Mpi = gl0_to_matrix(m, C);
        EXPECT_TRUE(preserves_quadric_net(Mpi, C));
        const auto M = pi_to_coeff(Mpi, C);
        for (const auto& s : S) EXPECT_TRUE(s_membership(M * kappa_explicit(s.xi, C).coords(), C));
        for (int j = 1; j <= 6; ++j)
            EXPECT_TRUE(matrix_proj_eq(M * epsilon_matrix(j, C), epsilon_matrix(m.sigma[C.idx(j)] + 1, C) * M));
        for (const auto& l : lines) {
            const LineOnS<Rational> img{0u, M * l.a, M * l.b};
            EXPECT_TRUE(std::any_of(lines.begin(), lines.end(), [&](const auto& k) { return same_line(img, k); }));
        }
    }
}

TEST(GL, RandomMapIsNotAnAutomorphism) {
    const auto& C = fixture_qq();
    Rng rng(2);
    const auto M = rnd_matrix(RationalField{}, rng, 6);
    EXPECT_FALSE(preserves_quadric_net(M, C));
    EXPECT_TRUE(preserves_quadric_net(Matrix<Rational>::identity(6, 1), C));
}

TEST(Psi, KernelAndHomomorphism) {
    for (const auto* C : {&fixture_pm(), &fixture_qq()}) {
        const auto G = build_gl(*C);
        const auto inv = inv_group(*C);
        std::size_t kernel = 0;
        std::set<std::string> restr;
        std::vector<Perm6> sig;
        for (const auto& e : G.elements) {
            const auto p = psi(e.pi, *C);
            EXPECT_EQ(p.matches, 1u);
            sig.push_back(p.sigma);
            if (is_identity(p.sigma)) {
                ++kernel;
                EXPECT_TRUE(std::any_of(inv.begin(), inv.end(),
                                        [&](const auto& i) { return matrix_proj_eq(pi_to_coeff(e.pi, *C), i.coeff); }));
            }
            restr.insert(delta0_action_key(e.pi, *C));
        }
        EXPECT_EQ(kernel, 32u);
        EXPECT_EQ(restr.size(), G.elements.size());
        for (std::size_t x = 0; x < G.elements.size(); x += 7)
            for (std::size_t y = 0; y < G.elements.size(); y += 5)
                EXPECT_EQ(psi(G.elements[x].pi * G.elements[y].pi, *C).sigma, compose(sig[x], sig[y]));
    }
}

TEST(Involutions, CriterionAgreesWithSearch) {
    std::set<std::string> branches;
    for (const auto& [r, order] : configs()) {
        const auto C = curve(r);
        const auto rep = noncommuting_involution_report(C);
        const auto gl0 = find_gl0(C);
        EXPECT_EQ(rep.configs.size(), 45u);
        EXPECT_TRUE(rep.agree());
        EXPECT_EQ(rep.from_gl0, order > 1);
        for (const auto& c : rep.configs)
            if (c.certified) {
                branches.insert(c.branch);
                EXPECT_TRUE(std::any_of(gl0.begin(), gl0.end(), [&](const auto& m) { return m.sigma == c.map->sigma; }));
            }
    }
    EXPECT_TRUE(branches.count("sums"));
    EXPECT_GE(branches.size(), 2u);
}

TEST(IncidencePoints, NinetySixLabelledMeetings) {
    const auto& C = fixture_gf101();
    const auto P = incidence_points(C);
    ASSERT_EQ(P.size(), 96u);
    std::set<std::string> labels, keys;
    for (const auto& p : P) {
        labels.insert(p.label);
        keys.insert(proj_key(p.point));
        EXPECT_TRUE(s_membership(p.point, C));
        EXPECT_TRUE(on_line(p.point, line_delta(p.line_a, C)));
        EXPECT_TRUE(on_line(p.point, line_delta(p.line_b, C)));
    }
    EXPECT_EQ(labels.size(), 96u);
    EXPECT_EQ(keys.size(), 96u);
}
