#ifndef KUMMER_VERIFY_HPP
#define KUMMER_VERIFY_HPP

// Reports, verification suites and the bodies of the CLI commands. Every randomized check
// records its seed; every failure names the point where it failed.

#include <set>
#include <sstream>

#include "automorphisms.hpp"
#include "duality.hpp"
#include "sampling.hpp"
#include "twists.hpp"

namespace kummer {

enum class Status { Pass, Fail, Skip };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Skip: return "SKIP";
    }
    return "?";
}

struct Check {
    std::string name;
    Status status;
    std::string witness;
};

struct Report {
    std::string command, curve, field;
    std::optional<std::uint64_t> seed;
    std::vector<std::pair<std::string, std::string>> data;
    std::vector<Check> checks;

    void put(std::string key, std::string value) { data.emplace_back(std::move(key), std::move(value)); }
    void check(std::string name, bool ok, std::string witness = {}) {
        checks.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(witness)});
    }
    void skip(std::string name, std::string why) { checks.push_back({std::move(name), Status::Skip, std::move(why)}); }

    bool ok() const {
        return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
    }

    std::string text() const {
        std::ostringstream o;
        o << "command: " << command << "\ncurve: " << curve << "\nfield: " << field << "\n";
        if (seed) o << "seed: " << *seed << "\n";
        for (const auto& [k, v] : data) o << k << ": " << v << "\n";
        for (const auto& c : checks) {
            o << status_name(c.status) << " " << c.name;
            if (!c.witness.empty()) o << " | " << c.witness;
            o << "\n";
        }
        if (!checks.empty()) o << "result: " << (ok() ? "PASS" : "FAIL") << "\n";
        return o.str();
    }
};

template <FieldElement K>
Report make_report(const std::string& command, const Genus2Curve<K>& C) {
    Report r;
    r.command = command;
    r.curve = C.label().empty() ? C.F().to_string() : C.label();
    r.field = C.field().name();
    return r;
}

template <FieldElement K>
std::string divisor_string(const DivisorPair<K>& D) {
    return "x=" + D.x.to_string() + " u=" + D.u.to_string() + " yv=" + D.w.to_string();
}

template <FieldElement K>
K random_scalar(const Genus2Curve<K>& C, Rng& rng) {
    if constexpr (std::is_same_v<K, Fp>) {
        return C.field().random(rng);
    } else {
        return C.field().random(rng, 5);
    }
}

/// Comma separated scalars.
template <FieldElement K>
Vec<K> parse_vector(const std::string& s, const Genus2Curve<K>& C) {
    Vec<K> v;
    std::size_t i = 0;
    while (i <= s.size()) {
        auto j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        v.push_back(C.field().parse(s.substr(i, j - i)));
        i = j + 1;
    }
    return v;
}

namespace detail {

// Runs pred on every sample; the first failure becomes the witness.
template <FieldElement K, class Pred>
void sample_check(Report& r, const std::string& name, const std::vector<GenericSample<K>>& S, Pred pred) {
    std::size_t n = 0;
    std::string bad;
    for (const auto& s : S) {
        try {
            if (pred(s)) {
                ++n;
                continue;
            }
            bad = "fails at " + divisor_string(s.D) + " xi=" + s.xi.to_string();
        } catch (const Error& e) {
            bad = std::string(errc_name(e.code())) + " at " + divisor_string(s.D) + ": " + e.message();
        }
        break;
    }
    r.check(name, bad.empty(), bad.empty() ? std::to_string(n) + " points" : bad);
}

template <FieldElement K>
void put_sampling(Report& r, const SampleBatch<K>& b, std::size_t wanted, const std::string& prefix = "") {
    r.put(prefix + "samples", std::to_string(b.samples.size()) + " of " + std::to_string(wanted) + " requested");
    r.put(prefix + "skipped", "degenerate " + std::to_string(b.skipped_degenerate) + ", on a trope " +
                         std::to_string(b.skipped_on_trope) + ", explicit forms vanish " +
                         std::to_string(b.skipped_forms_vanish));
}

template <FieldElement K>
bool needs_roots(Report& r, const Genus2Curve<K>& C, const std::string& what) {
    if (C.has_roots()) return true;
    r.skip(what, "F does not split over " + C.field().name() + " (RootsUnavailable)");
    return false;
}

template <FieldElement K>
bool needs_monic(Report& r, const Genus2Curve<K>& C, const std::string& what) {
    if (C.f(6) == C.one()) return true;
    r.skip(what, "f6 != 1 (NotMonic); the W_i and line-complex formulas are for monic F");
    return false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suites

template <FieldElement K>
void suite_kappa(const Genus2Curve<K>& C, std::size_t samples, std::uint64_t seed, Report& r) {
    const auto b = generic_samples(C, seed, samples);
    detail::put_sampling(r, b, samples);
    r.check("sampling found points", !b.samples.empty(), std::to_string(b.samples.size()) + " generic divisors");
    const auto& S = b.samples;
    detail::sample_check(r, "K(xi) = 0", S, [&](const auto& s) { return C.quartic()(s.xi).is_zero(); });
    detail::sample_check(r, "kappa explicit = kappa constructive", S,
                         [&](const auto& s) { return proj_eq(kappa_explicit(s.xi, C), kappa_constructive(s.D, C)); });
    detail::sample_check(r, "constructive certificates GP = M and P^2 = H mod F", S, [&](const auto& s) {
        const auto k = kappa_constructive_full(s.D, C);
        return k.congruence && k.square;
    });
    detail::sample_check(r, "kappa symmetric in the two points", S, [&](const auto& s) {
        return proj_eq(kappa_constructive(s.D.swapped(), C), kappa_constructive(s.D, C));
    });
    detail::sample_check(r, "P^2 mod F has degree <= 2", S,
                         [&](const auto& s) { return s_membership(kappa_explicit(s.xi, C), C); });
    if (detail::needs_roots(r, C, "quadrics in pi coordinates")) {
        detail::sample_check(r, "S_0 = S_1 = S_2 = 0 in pi coordinates", S, [&](const auto& s) {
            const auto q = s_quadrics_pi(to_pi(kappa_explicit(s.xi, C).coords(), C), C);
            return q[0].is_zero() && q[1].is_zero() && q[2].is_zero();
        });
        detail::sample_check(r, "polar of S_0 point w.r.t. S_1 is tangent to S_2 (and back)", S, [&](const auto& s) {
            const auto p = kappa_explicit(s.xi, C).coords();
            return polar_duality_check(p, C, 0) && polar_duality_check(p, C, 2);
        });
    }
}

template <FieldElement K>
void suite_lines(const Genus2Curve<K>& C, Report& r) {
    if (!detail::needs_roots(r, C, "lines")) return;
    const auto inv = inv_group(C);
    r.check("|Inv(S)| = 32", inv.size() == 32, "order " + std::to_string(inv.size()));

    const auto T = line_incidence(C);
    bool distinct = true;
    for (std::size_t i = 0; i < T.lines.size(); ++i)
        for (std::size_t j = i + 1; j < T.lines.size(); ++j)
            if (same_line(T.lines[i], T.lines[j])) distinct = false;
    r.check("32 distinct lines", T.lines.size() == 32 && distinct, std::to_string(T.lines.size()) + " lines");
    bool on_s = true;
    for (const auto& l : T.lines) on_s = on_s && s_membership(l.a, C) && s_membership(l.b, C) && s_membership(l.a + l.b, C);
    r.check("lines lie on S", on_s);
    r.check("96 meeting points", T.meetings.size() == 96, std::to_string(T.meetings.size()) + " meetings");
    std::string degs;
    bool six = true;
    for (std::size_t i = 0; i < T.lines.size(); ++i)
        if (T.degree[i] != 6) six = false, degs += T.lines[i].label() + ":" + std::to_string(T.degree[i]) + " ";
    r.check("each line meets exactly 6 others", six, degs);

    const auto P = incidence_points(C);
    std::set<std::string> meet, named;
    for (const auto& m : T.meetings) meet.insert(proj_key(m.point));
    std::string badp;
    for (const auto& q : P) {
        named.insert(proj_key(q.point));
        const auto la = line_delta(q.line_a, C), lb = line_delta(q.line_b, C);
        const auto x = line_intersection(la, lb);
        if (!x || !proj_eq(*x, q.point)) badp += q.label + " ";
    }
    r.check("p_i, p_ij, p_ijk are the meetings of their two lines", badp.empty() && P.size() == 96, badp);
    r.check("named points = all meeting points", named == meet,
            std::to_string(named.size()) + " named, " + std::to_string(meet.size()) + " meetings");

    const auto d0 = line_delta(0u, C);
    std::string bad0;
    for (unsigned m = 1; m < 64; ++m) {
        if (canonical_line_mask(m) != m) continue;
        const auto x = line_intersection(d0, line_delta(m, C));
        const int n = __builtin_popcount(m);
        if (n == 1) {
            const int i = __builtin_ctz(m) + 1;
            if (!x || !proj_eq(*x, point_p(i, C))) bad0 += "Delta_" + std::to_string(i) + " ";
        } else if (x) {
            bad0 += line_delta(m, C).label() + " ";
        }
    }
    r.check("Delta_0 meets Delta_i in p_i and misses Delta_ij, Delta_ijk", bad0.empty(), bad0);

    std::string badd;
    for (int i = 1; i <= 6; ++i)
        for (long xv = -2; xv <= 2; ++xv) {
            const K x = C.scalar(xv);
            const auto p = delta_i_param(i, x, C);
            Vec<K> lin(6, K{} * C.one());
            lin[0] = -x;
            lin[1] = C.one();
            const auto img = epsilon(i, lin, C);
            if (!s_membership(p, C) || !on_line(p, line_delta(1u << (i - 1), C)) || !proj_eq(p, img))
                badd += std::to_string(i) + "@" + x.to_string() + " ";
        }
    r.check("Delta_i parametrization lies on S and equals eps_i(X - x)", badd.empty(), badd);

    std::string badb;
    std::size_t nb = 0;
    for (long xv = -3; xv <= 3; ++xv) {
        const K x = C.scalar(xv);
        if (C.F()(x).is_zero()) continue;
        Vec<K> e(6, K{} * C.one());
        e[0] = -x;
        e[1] = C.one();
        ++nb;
        if (!proj_eq(blowup_direction_node0(x, C), e)) badb += x.to_string() + " ";
    }
    r.check("blow-up of N_0 along {(x,y),(x+h,v)} tends to (-x:1:0:0:0:0)", badb.empty() && nb > 0,
            badb.empty() ? std::to_string(nb) + " abscissae" : badb);
}

template <FieldElement K>
void suite_diagrams(const Genus2Curve<K>& C, std::size_t samples, std::uint64_t seed, Report& r) {
    if (!detail::needs_roots(r, C, "diagrams") || !detail::needs_monic(r, C, "diagrams")) return;
    std::vector<int> idx;  // W_i needs theta_i != 0
    for (int i = 1; i <= 6; ++i)
        if (!C.theta(i).is_zero()) idx.push_back(i);
    bool anti = true;
    for (int i : idx) anti = anti && (w_matrix(i, C).transpose() == -C.one() * w_matrix(i, C));
    r.check("W_i antisymmetric", anti, std::to_string(idx.size()) + " indices");

    const auto nodes = all_nodes(C);
    const auto tropes = all_tropes(C);
    std::string badw;
    for (int i : idx) {
        const auto W = w_matrix(i, C);
        if (!proj_eq(ProjPoint<K>(W * node_0(C).coords()), trope_i(i, C))) badw += "N0->T" + std::to_string(i) + " ";
        std::set<std::size_t> hit;
        for (const auto& n : nodes) {
            const ProjPoint<K> img(W * n.coords());
            for (std::size_t t = 0; t < tropes.size(); ++t)
                if (proj_eq(img, tropes[t])) hit.insert(t);
        }
        if (hit.size() != 16) badw += "W" + std::to_string(i) + ":" + std::to_string(hit.size()) + "/16 ";
    }
    r.check("W_i(N_0) = T_i and W_i maps the 16 nodes onto the 16 tropes", badw.empty(), badw);

    std::string badt;
    const auto Tm = theta_matrix(C), Ti = Tm.inverse();
    for (int k = 1; k <= 6; ++k)
        if (!matrix_proj_eq(Tm * polarity_matrix_X(k, C) * Ti, epsilon_matrix(k, C))) badt += std::to_string(k) + " ";
    r.check("Theta I_k Theta^-1 = eps_k", badt.empty(), badt);

    std::string badn;
    for (const auto& n : nodes) {
        const auto rk = kappa1_gram_rank(n.coords(), C);
        if (rk > 1) badn += n.to_string() + " ";
    }
    r.check("kappa_1 Gram rank <= 1 at the 16 nodes", badn.empty(), badn);

    const int i1 = idx.empty() ? 1 : idx.front(), i2 = idx.size() > 1 ? idx[1] : i1;
    // kappa* is evaluated through W_i at a translate of xi, which may itself lie on the base
    // locus of the explicit forms; such samples are counted and set aside.
    auto b = generic_samples(C, seed, 2 * samples);
    std::vector<GenericSample<K>> S;
    std::vector<int> ks;
    std::size_t translate_skips = 0;
    for (const auto& s : b.samples) {
        if (S.size() == samples) break;
        const int k = idx[S.size() % idx.size()];
        const auto eta = tangent_plane(s.xi, C.quartic());
        if (!kappa_star_defined(eta, i1, C) || !kappa_star_defined(eta, i2, C) ||
            !kappa_star_defined(ProjPoint<K>(apply_w(k, s.xi.coords(), C)), i1, C)) {
            ++translate_skips;
            continue;
        }
        S.push_back(s);
        ks.push_back(k);
    }
    b.samples = S;
    detail::put_sampling(r, b, samples, "duality ");
    r.put("duality skipped for kappa*", std::to_string(translate_skips) + " (W_i translate on the base locus)");
    r.check("sampling found points", !S.empty(), std::to_string(S.size()) + " generic divisors");
    std::size_t turn = 0;
    detail::sample_check(r, "kappa*(tangent plane) = kappa via two indices", S, [&](const auto& s) {
        const auto k = kappa_explicit(s.xi, C);
        const auto eta = tangent_plane(s.xi, C.quartic());
        return proj_eq(kappa_star(eta, i1, C), k) && proj_eq(kappa_star(eta, i2, C), k);
    });
    detail::sample_check(r, "eps_k kappa(xi) = kappa*(W_k xi)", S, [&](const auto& s) {
        const int k = ks[turn++];
        const ProjPoint<K> lhs(epsilon(k, kappa_explicit(s.xi, C).coords(), C));
        return proj_eq(lhs, kappa_star(ProjPoint<K>(apply_w(k, s.xi.coords(), C)), i1, C));
    });
    detail::sample_check(r, "Theta(kappa_1(xi)) = kappa(xi)", S, [&](const auto& s) {
        return proj_eq(theta(kappa1(s.xi.coords(), C), C), kappa_explicit(s.xi, C).coords());
    });
    detail::sample_check(r, "kappa_1(xi) on G and H, zeta on the Sigma quadrics", S, [&](const auto& s) {
        const auto X = kappa1(s.xi.coords(), C);
        const auto q = sigma_quadrics(zeta_from_X(X, C), C);
        return grassmann(X).is_zero() && quad_form(h_gram(C), X).is_zero() && q[0].is_zero() && q[1].is_zero() &&
               q[2].is_zero();
    });
    detail::sample_check(r, "kappa_1 Gram rank = 2 at smooth points", S,
                         [&](const auto& s) { return kappa1_gram_rank(s.xi.coords(), C) == 2; });
    turn = 0;
    detail::sample_check(r, "kappa_1*(W_k xi) = I_k kappa_1(xi)", S, [&](const auto& s) {
        const int k = idx[turn++ % idx.size()];
        const auto z = zeta_from_X(kappa1(s.xi.coords(), C), C);
        const auto zs = zeta_from_X(kappa1_star(apply_w(k, s.xi.coords(), C), C), C);
        return proj_eq(zs, polarity_Ik(k, z));
    });
    turn = 0;
    detail::sample_check(r, "lines through xi in W_i(xi) have zeta'_i = 0", S, [&](const auto& s) {
        const int k = idx[turn++ % idx.size()];
        if (!polar_plane_check(s.xi.coords(), k, C)) return false;
        // control: some other zeta'_j is not identically zero on the pencil
        for (int j = 1; j <= 6; ++j) {
            if (j == k) continue;
            const auto res = polar_plane_lines(s.xi.coords(), k, j, C);
            for (const auto& z : res.zeta)
                if (!z.is_zero()) return true;
        }
        return false;
    });
}

template <FieldElement K>
void suite_twists(const Genus2Curve<K>& C, std::size_t samples, std::uint64_t seed, Report& r) {
    Rng rng(seed ^ 0x7457u);
    const auto S1 = twist_surface(UniPoly<K>::constant(C.one()), C);
    {
        bool same = true;
        for (int t = 0; t < 20; ++t) {
            Vec<K> v(6);
            for (auto& a : v) a = random_scalar(C, rng);
            const auto f = S1.forms(v);
            const auto s = s_residue(v, C);
            same = same && f[0] == s[2] && f[1] == s[1] && f[2] == s[0];
        }
        r.check("twist by 1 gives the forms of S", same, "20 random vectors");
    }
    const auto b = generic_samples(C, seed, std::min<std::size_t>(samples, 40));
    std::vector<Vec<K>> pts;
    for (const auto& s : b.samples) pts.push_back(kappa_explicit(s.xi, C).coords());
    r.check("sampling found points", !pts.empty(), std::to_string(pts.size()) + " points of S");

    std::vector<UniPoly<K>> betas;
    for (int tries = 0; betas.size() < 20 && tries < 200; ++tries) {
        std::vector<K> c(6);
        for (auto& a : c) a = random_scalar(C, rng);
        UniPoly<K> beta(c);
        if (beta.degree() < 1 || gcd(beta, C.F()).degree() > 0) continue;
        betas.push_back(beta);
    }
    std::string bad;
    for (const auto& beta : betas) {
        const auto xi = (beta * beta) % C.F();
        const auto T = twist_surface(xi, C);
        const auto binv = inverse_mod(beta, C.F());
        for (const auto& p : pts) {
            const auto q = to_vec6((binv * to_poly(p)) % C.F());
            if (!T.contains(q) || !twist_member_direct(xi, q, C) || !proj_eq(twist_iso(beta, xi, q, C), p)) {
                bad = "beta=" + beta.to_string() + " p=" + vec_to_string(p);
                break;
            }
        }
        if (!bad.empty()) break;
    }
    r.check("twist_iso maps S^(beta^2) into S", bad.empty() && !betas.empty(),
            bad.empty() ? std::to_string(betas.size()) + " betas x " + std::to_string(pts.size()) + " points" : bad);
    if (!betas.empty()) {
        bool raised = false;
        try {
            twist_iso(betas[0], (betas[0] * betas[0] + UniPoly<K>::constant(C.one())) % C.F(), pts.empty() ? Vec<K>(6, C.one()) : pts[0], C);
        } catch (const Error& e) {
            raised = e.code() == Errc::WitnessMismatch;
        }
        r.check("wrong witness is rejected", raised);
    }

    if (detail::needs_roots(r, C, "diagonal twist quadrics")) {
        std::string badd;
        std::size_t n = 0;
        for (const auto& beta : betas) {
            const auto xi = (beta * beta) % C.F();
            bool vanishes = false;
            for (int j = 1; j <= 6; ++j) vanishes = vanishes || xi(C.theta(j)).is_zero();
            if (vanishes) continue;
            ++n;
            if (!twist_diagonal(xi, C).matches()) badd = "xi=" + xi.to_string();
        }
        r.check("combinations of the twist forms are diag(xi_j w_j), diag(f6 theta_j xi_j w_j), diag(f6^2 theta_j^2 xi_j w_j)",
                badd.empty() && n > 0, badd.empty() ? std::to_string(n) + " twists" : badd);
    }

    if constexpr (std::is_same_v<K, Fp>) {
        if (C.field().p <= kMaxPrimeForSearch && !betas.empty()) {
            const auto bj = twist_bijection_check(betas[0], C);
            r.check("twist_iso is a bijection on rational points", bj.bijective(),
                    "|S^xi| = " + std::to_string(bj.twist_points) + ", |S| = " + std::to_string(bj.surface_points) +
                        ", distinct images " + std::to_string(bj.distinct_images));
        } else {
            r.skip("twist_iso is a bijection on rational points", "full enumeration needs p <= 50");
        }
    } else {
        const auto found = search_points(S1, C, 2);
        bool all_on = true;
        for (const auto& p : found) all_on = all_on && s_membership(p, C);
        r.check("point search on S (height <= 2) returns points of S", all_on, std::to_string(found.size()) + " points");
    }
}

template <FieldElement K>
void suite_autos(const Genus2Curve<K>& C, Report& r) {
    if (!detail::needs_roots(r, C, "automorphisms")) return;
    const auto G = build_gl(C);
    std::string list;
    for (const auto& m : G.gl0) list += m.to_string() + "; ";
    r.put("GL0", std::to_string(G.gl0.size()) + " element(s): " + list);
    r.put("GL", std::to_string(G.elements.size()));
    r.check("GL closed under composition", G.closed);
    r.check("|GL| = 32 |GL0|", G.elements.size() == 32 * G.gl0.size(),
            std::to_string(G.elements.size()) + " = 32 x " + std::to_string(G.gl0.size()));

    const auto lines = all_lines(C);
    std::string badq, badc, badl, badw;
    for (std::size_t a = 0; a < G.gl0.size(); ++a) {
        const auto& m = G.gl0[a];
        const auto Mpi = gl0_to_matrix(m, C);
        if (!preserves_quadric_net(Mpi, C)) badq += m.to_string() + " ";
        const auto M = pi_to_coeff(Mpi, C);
        for (int j = 1; j <= 6; ++j) {
            const int sj = m.sigma[C.idx(j)] + 1;
            if (!matrix_proj_eq(M * epsilon_matrix(j, C), epsilon_matrix(sj, C) * M)) badc += m.to_string() + " ";
            // a second word for the same element
            if (!matrix_proj_eq(epsilon_matrix(sj, C) * M * epsilon_matrix(j, C), M)) badw += m.to_string() + " ";
        }
        for (const auto& l : lines) {
            const LineOnS<K> img{0u, M * l.a, M * l.b};
            if (std::none_of(lines.begin(), lines.end(), [&](const auto& k) { return same_line(img, k); }))
                badl += m.to_string() + " moves " + l.label() + " ";
        }
    }
    r.check("GL0 elements preserve the net of quadrics", badq.empty(), badq);
    r.check("A eps_j = eps_sigma(j) A", badc.empty(), badc);
    r.check("GL0 elements permute the 32 lines", badl.empty(), badl);

    std::size_t kernel = 0;
    bool kernel_diag = true, unique = true;
    std::set<std::string> restr;
    bool faithful = true;
    std::vector<Perm6> sig;
    for (const auto& e : G.elements) {
        PsiResult<K> p{};
        try {
            p = psi(e.pi, C);
        } catch (const Error&) {
            unique = false;
            sig.push_back({});
            continue;
        }
        sig.push_back(p.sigma);
        if (is_identity(p.sigma)) {
            ++kernel;
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t j = 0; j < 6; ++j)
                    if (i != j && !e.pi(i, j).is_zero()) kernel_diag = false;
        }
        if (!restr.insert(delta0_action_key(e.pi, C)).second) faithful = false;
    }
    r.check("psi well defined (one involution returns Delta_0)", unique);
    r.check("ker psi = Inv(S)", kernel == 32 && kernel_diag, std::to_string(kernel) + " elements with sigma = id");
    r.check("elements agreeing on Delta_0 coincide", faithful, std::to_string(restr.size()) + " distinct restrictions");
    bool hom = unique;
    for (std::size_t x = 0; hom && x < G.elements.size(); ++x)
        for (std::size_t a = 0; hom && a < G.gl0.size(); ++a) {
            const auto y = gl0_to_matrix(G.gl0[a], C);
            const auto px = sig[x], py = psi(y, C).sigma;
            hom = compose(px, py) == psi(G.elements[x].pi * y, C).sigma;
        }
    r.check("psi is a homomorphism", hom);

    const auto rep = noncommuting_involution_report(C);
    std::size_t cert = 0;
    std::string branches;
    for (const auto& c : rep.configs)
        if (c.certified) {
            ++cert;
            branches += "{" + std::to_string(c.pair12[0]) + std::to_string(c.pair12[1]) + "|" +
                        std::to_string(c.pair34[0]) + std::to_string(c.pair34[1]) + "|" + std::to_string(c.pair56[0]) +
                        std::to_string(c.pair56[1]) + "} " + c.branch + "; ";
        }
    r.put("involution configurations", std::to_string(rep.configs.size()) + " scanned, " + std::to_string(cert) +
                                           " certified: " + branches);
    r.check("involution criterion agrees with GL0 search", rep.agree(),
            std::string("criterion ") + (rep.criterion ? "holds" : "fails") + ", GL0 " +
                (rep.from_gl0 ? "has" : "has no") + " involution");
}

template <FieldElement K>
Report cmd_verify(const Genus2Curve<K>& C, const std::string& suite, std::size_t samples, std::uint64_t seed) {
    auto r = make_report("verify --suite " + suite, C);
    r.seed = seed;
    static const std::set<std::string> known{"all", "kappa", "lines", "diagrams", "twists", "autos"};
    if (!known.count(suite)) fail(Errc::InvalidArgument, "unknown suite '" + suite + "'");
    const bool all = suite == "all";
    if (all || suite == "kappa") suite_kappa(C, samples, seed, r);
    if (all || suite == "lines") suite_lines(C, r);
    if (all || suite == "diagrams") suite_diagrams(C, samples, seed, r);
    if (all || suite == "twists") suite_twists(C, samples, seed, r);
    if (all || suite == "autos") suite_autos(C, r);
    return r;
}

// ---------------------------------------------------------------------------
// Other commands

template <FieldElement K>
Report cmd_kummer(const Genus2Curve<K>& C) {
    auto r = make_report("kummer", C);
    const auto& q = C.quartic();
    const std::array<const char*, 4> names{"xi1", "xi2", "xi3", "xi4"};
    r.put("F", C.F().to_string());
    r.put("K2", q.K2.to_string(names));
    r.put("K1", q.K1.to_string(names));
    r.put("K0", q.K0.to_string(names));
    {
        using Form = typename KummerQuartic<K>::Form;
        const auto x1 = Form::var(0, C.one()), x2 = Form::var(1, C.one()), x3 = Form::var(2, C.one());
        r.check("K2 = xi2^2 - 4 xi1 xi3", q.K2 == x2 * x2 - Form::constant(C.scalar(4)) * x1 * x3);
    }
    if (!detail::needs_roots(r, C, "nodes and tropes")) return r;
    const auto nodes = all_nodes(C);
    const auto tropes = all_tropes(C);
    for (std::size_t i = 0; i < nodes.size(); ++i) r.put("node " + std::to_string(i), nodes[i].to_string());
    for (std::size_t i = 0; i < tropes.size(); ++i) r.put("trope " + std::to_string(i), tropes[i].to_string());
    bool on_k = true;
    for (const auto& n : nodes) on_k = on_k && q(n).is_zero();
    r.check("16 nodes on K", nodes.size() == 16 && on_k);
    std::vector<int> per_trope(tropes.size()), per_node(nodes.size());
    for (std::size_t t = 0; t < tropes.size(); ++t)
        for (std::size_t n = 0; n < nodes.size(); ++n)
            if (dot(tropes[t].coords(), nodes[n].coords()).is_zero()) ++per_trope[t], ++per_node[n];
    r.check("each trope contains 6 nodes", std::all_of(per_trope.begin(), per_trope.end(), [](int c) { return c == 6; }));
    r.check("each node lies on 6 tropes", std::all_of(per_node.begin(), per_node.end(), [](int c) { return c == 6; }));
    return r;
}

struct MapRequest {
    std::string which = "kappa";
    std::optional<std::string> point, divisor;
    int index = 1;
};

template <FieldElement K>
Report cmd_map(const Genus2Curve<K>& C, const MapRequest& q) {
    auto r = make_report("map --which " + q.which, C);
    auto certify_s = [&](const Vec<K>& p) {
        r.put("image", vec_to_string(canonical(p)));
        const auto res = s_residue(p, C);
        r.check("P^2 mod F has degree <= 2", s_membership(p, C),
                "X^3..X^5 residues " + res[0].to_string() + ", " + res[1].to_string() + ", " + res[2].to_string());
        if (C.has_roots()) {
            const auto s = s_quadrics_pi(to_pi(p, C), C);
            r.check("S_0 = S_1 = S_2 = 0", s[0].is_zero() && s[1].is_zero() && s[2].is_zero());
        }
    };
    // the point of K, from --point or --divisor x,y,u,v
    auto kummer_point = [&]() -> std::pair<ProjPoint<K>, std::optional<DivisorPair<K>>> {
        if (q.divisor) {
            const auto v = parse_vector(*q.divisor, C);
            if (v.size() != 4) fail(Errc::InvalidArgument, "--divisor takes x,y,u,v");
            const auto D = DivisorPair<K>::from_points(C, v[0], v[1], v[2], v[3]);
            return {kummer_coords(D, C), D};
        }
        if (!q.point) fail(Errc::InvalidArgument, "give --point or --divisor");
        const auto v = parse_vector(*q.point, C);
        if (v.size() != 4) fail(Errc::InvalidArgument, "--point takes 4 coordinates for this map");
        return {ProjPoint<K>(v), std::nullopt};
    };

    if (q.which == "kappa") {
        const auto [xi, D] = kummer_point();
        r.put("xi", xi.to_string());
        const auto forms = kappa_forms<K>({xi[0], xi[1], xi[2], xi[3]}, C);
        if (D && !D->w.is_zero() && std::all_of(forms.begin(), forms.end(), [](const K& a) { return a.is_zero(); })) {
            // base locus of the explicit forms: only the constructive map is defined
            r.put("note", "explicit forms vanish at xi; image from the constructive map");
            certify_s(kappa_constructive(*D, C).coords());
            return r;
        }
        const auto k = kappa_explicit(xi, C);
        certify_s(k.coords());
        if (D && !D->w.is_zero()) r.check("kappa explicit = kappa constructive", proj_eq(k, kappa_constructive(*D, C)));
    } else if (q.which == "kappa1") {
        const auto [xi, D] = kummer_point();
        r.put("xi", xi.to_string());
        const auto X = kappa1(xi.coords(), C);
        r.put("X", vec_to_string(canonical(X)));
        r.put("zeta", vec_to_string(canonical(zeta_from_X(X, C))));
        r.check("G(X) = 0", grassmann(X).is_zero());
        r.check("H(X) = 0", quad_form(h_gram(C), X).is_zero());
        r.check("Theta(kappa_1) = kappa", proj_eq(theta(X, C), kappa_explicit(xi, C).coords()));
    } else if (q.which == "kappa_star") {
        // --divisor: the tangent plane at its Kummer point; --point: the plane itself
        ProjPoint<K> eta = [&] {
            if (q.divisor) {
                const auto xi = kummer_point().first;
                r.put("xi", xi.to_string());
                return tangent_plane(xi, C.quartic());
            }
            if (!q.point) fail(Errc::InvalidArgument, "give --point (a plane) or --divisor");
            return ProjPoint<K>(parse_vector(*q.point, C));
        }();
        r.put("eta", eta.to_string());
        const auto k = kappa_star(eta, q.index, C);
        certify_s(k.coords());
        const int other = q.index == 1 ? 2 : 1;
        r.check("kappa* via i=" + std::to_string(q.index) + " and i=" + std::to_string(other) + " agree",
                proj_eq(k, kappa_star(eta, other, C)));
    } else if (q.which == "theta") {
        if (!q.point) fail(Errc::InvalidArgument, "theta takes --point with 6 Grassmann coordinates");
        const auto X = parse_vector(*q.point, C);
        if (X.size() != 6) fail(Errc::InvalidArgument, "theta takes 6 Grassmann coordinates");
        r.check("G(X) = 0", grassmann(X).is_zero());
        r.check("H(X) = 0", quad_form(h_gram(C), X).is_zero());
        certify_s(theta(X, C));
    } else {
        fail(Errc::InvalidArgument, "--which must be kappa, kappa1, kappa_star or theta");
    }
    return r;
}

template <FieldElement K>
Report cmd_twist(const Genus2Curve<K>& C, const std::string& beta_s, long bound) {
    auto r = make_report("twist", C);
    const UniPoly<K> beta(parse_vector(beta_s, C));
    if (beta.is_zero()) fail(Errc::InvalidArgument, "beta must be nonzero");
    const auto xi = (beta * beta) % C.F();
    r.put("beta", beta.to_string());
    r.put("xi", xi.to_string());
    const auto T = twist_surface(xi, C);
    const char* nm[3] = {"C5", "C4", "C3"};
    for (int c = 0; c < 3; ++c) r.put(nm[c], T.gram[c].to_string());
    if (C.has_roots()) {
        try {
            const auto d = twist_diagonal(xi, C);
            for (int c = 0; c < 3; ++c) r.put("diagonal " + std::to_string(c), vec_to_string(d.expected[c], ", "));
            r.check("diagonal combinations", d.matches());
        } catch (const Error& e) {
            if (e.code() != Errc::VanishingAtRoot) throw;
            r.skip("diagonal combinations", e.message());
        }
    }
    if (gcd(beta, C.F()).degree() > 0) {
        r.skip("twist_iso", "beta shares a factor with F; not an isomorphism");
        return r;
    }
    if constexpr (std::is_same_v<K, Fp>) {
        if (C.field().p <= kMaxPrimeForSearch) {
            const auto bj = twist_bijection_check(beta, C);
            r.put("points on S^xi", std::to_string(bj.twist_points));
            r.put("points on S", std::to_string(bj.surface_points));
            r.check("twist_iso is a bijection on rational points", bj.bijective());
            return r;
        }
        r.skip("twist_iso bijection", "full enumeration needs p <= 50");
    } else {
        const auto pts = search_points(T, C, bound);
        r.put("points on S^xi with height <= " + std::to_string(bound), std::to_string(pts.size()));
        bool ok = true;
        for (const auto& p : pts) ok = ok && s_membership(twist_iso(beta, xi, p, C), C);
        r.check("twist_iso maps the found points into S", ok);
    }
    return r;
}

template <FieldElement K>
Report cmd_autos(const Genus2Curve<K>& C) {
    auto r = make_report("autos", C);
    suite_autos(C, r);
    return r;
}

}  // namespace kummer

#endif
