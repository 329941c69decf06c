#ifndef KUMMER_AUTOMORPHISMS_HPP
#define KUMMER_AUTOMORPHISMS_HPP

// Incidence points of the 32 lines, the group GL_0 of Moebius maps permuting the roots,
// GL = Inv(S) GL_0, the homomorphism psi : GL -> S_6, and the involution criterion for
// automorphisms not commuting with Inv(S).

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "surface.hpp"

namespace kummer {

using Perm6 = std::array<int, 6>;  // 0-based: sigma[j] is the image of j

inline bool is_identity(const Perm6& s) {
    for (int j = 0; j < 6; ++j)
        if (s[static_cast<std::size_t>(j)] != j) return false;
    return true;
}
inline Perm6 compose(const Perm6& a, const Perm6& b) {  // a after b
    Perm6 r{};
    for (std::size_t j = 0; j < 6; ++j) r[j] = a[static_cast<std::size_t>(b[j])];
    return r;
}
inline std::string perm_to_string(const Perm6& s) {
    std::string out = "[";
    for (std::size_t j = 0; j < 6; ++j) out += (j ? " " : "") + std::to_string(s[j] + 1);
    return out + "]";
}

// ---------------------------------------------------------------------------
// Incidence points

template <FieldElement K>
struct IncidencePoint {
    std::string label;
    Vec<K> point;
    unsigned line_a, line_b;  // canonical masks of the two lines through it
};

/// p_i = Delta_0 cap Delta_i, p_ij = eps_i(p_j), p_ijk = eps_i eps_j (p_k).
template <FieldElement K>
std::vector<IncidencePoint<K>> incidence_points(const Genus2Curve<K>& C) {
    std::vector<IncidencePoint<K>> out;
    auto bit = [](int i) { return 1u << (i - 1); };
    for (int i = 1; i <= 6; ++i) out.push_back({"p" + std::to_string(i), point_p(i, C), 0u, canonical_line_mask(bit(i))});
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            if (i != j)
                out.push_back({"p" + std::to_string(i) + std::to_string(j), epsilon(i, point_p(j, C), C),
                               canonical_line_mask(bit(i)), canonical_line_mask(bit(i) | bit(j))});
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            for (int k = 1; k <= 6; ++k)
                if (k != i && k != j)
                    out.push_back({"p" + std::to_string(i) + std::to_string(j) + std::to_string(k),
                                   epsilon(i, epsilon(j, point_p(k, C), C), C), canonical_line_mask(bit(i) | bit(j)),
                                   canonical_line_mask(bit(i) | bit(j) | bit(k))});
    return out;
}

// ---------------------------------------------------------------------------
// GL_0

template <FieldElement K>
struct MobiusCandidate {
    K a, b, c, d;  // T -> (cT + d) / (aT + b)
    Perm6 sigma;   // theta_sigma(j) = image of theta_j
    std::string to_string() const {
        return "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ", " + d.to_string() + ") sigma=" +
               perm_to_string(sigma);
    }
};

/// Validity: theta_j (a theta_sigma(j) + b) = c theta_sigma(j) + d for all j, ad - bc != 0, and
/// a theta_sigma(j) + b != 0.
template <FieldElement K>
bool mobius_valid(const MobiusCandidate<K>& m, const Genus2Curve<K>& C) {
    if ((m.a * m.d - m.b * m.c).is_zero()) return false;
    for (int j = 1; j <= 6; ++j) {
        const K ts = C.theta(m.sigma[C.idx(j)] + 1);
        const K den = m.a * ts + m.b;
        if (den.is_zero() || !(C.theta(j) * den == m.c * ts + m.d)) return false;
    }
    return true;
}

/// For every permutation, the Moebius maps realising it (there is at most one up to scale).
template <FieldElement K>
std::vector<MobiusCandidate<K>> find_gl0(const Genus2Curve<K>& C) {
    std::vector<MobiusCandidate<K>> out;
    Perm6 s{0, 1, 2, 3, 4, 5};
    do {
        std::vector<Vec<K>> rows;
        for (int j = 1; j <= 6; ++j) {
            const K t = C.theta(j), ts = C.theta(s[C.idx(j)] + 1);
            rows.push_back({t * ts, t, -ts, -C.one()});
        }
        const auto ker = Matrix<K>::from_rows(rows).kernel();
        if (ker.size() > 1) fail(Errc::InternalInconsistency, "Moebius map not determined by six roots");
        if (ker.empty()) continue;
        const auto v = canonical(ker[0]);
        MobiusCandidate<K> m{v[0], v[1], v[2], v[3], s};
        if (mobius_valid(m, C)) out.push_back(m);
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

/// Matrix in pi coordinates: pi'_sigma(j) = pi_j (omega_j / omega_sigma(j)) (a theta_sigma(j) + b).
template <FieldElement K>
Matrix<K> gl0_to_matrix(const MobiusCandidate<K>& m, const Genus2Curve<K>& C) {
    if (!mobius_valid(m, C)) fail(Errc::InvalidCandidate, "not a Moebius map permuting the roots: " + m.to_string());
    Matrix<K> M(6, 6);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) M(r, c) = K{} * C.one();
    for (int j = 1; j <= 6; ++j) {
        const int sj = m.sigma[C.idx(j)] + 1;
        M(C.idx(sj), C.idx(j)) = C.omega(j) / C.omega(sj) * (m.a * C.theta(sj) + m.b);
    }
    return M;
}

/// A linear map (pi coordinates) sends the net of quadrics S_0, S_1, S_2 onto itself.
template <FieldElement K>
bool preserves_quadric_net(const Matrix<K>& Mpi, const Genus2Curve<K>& C) {
    const auto G = s_quadric_grams_pi(C);
    auto flat = [](const Matrix<K>& A) {
        Vec<K> v;
        for (std::size_t i = 0; i < A.rows(); ++i)
            for (std::size_t j = 0; j < A.cols(); ++j) v.push_back(A(i, j));
        return v;
    };
    std::vector<Vec<K>> rows{flat(G[0]), flat(G[1]), flat(G[2])};
    for (const auto& g : G) {
        auto r = rows;
        r.push_back(flat(Mpi.transpose() * g * Mpi));
        if (Matrix<K>::from_rows(r).rank() != 3) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// GL and psi

template <FieldElement K>
struct GLElement {
    unsigned mask;        // Inv(S) part
    std::size_t mobius;   // index into the GL_0 list
    Matrix<K> pi;         // in pi coordinates
};

template <FieldElement K>
struct GLGroup {
    std::vector<MobiusCandidate<K>> gl0;
    std::vector<GLElement<K>> elements;
    bool closed = false;
};

/// All eps_mask o A, deduplicated projectively, with a closure check under composition.
template <FieldElement K>
GLGroup<K> build_gl(const Genus2Curve<K>& C) {
    GLGroup<K> G;
    G.gl0 = find_gl0(C);
    std::unordered_set<std::string> keys;
    for (std::size_t a = 0; a < G.gl0.size(); ++a) {
        const auto A = gl0_to_matrix(G.gl0[a], C);
        for (unsigned mask = 0; mask < 32; ++mask) {
            auto M = epsilon_mask_pi(mask, C) * A;
            if (keys.insert(matrix_key(M)).second) G.elements.push_back({mask, a, std::move(M)});
        }
    }
    G.closed = true;
    for (const auto& x : G.elements) {
        for (const auto& y : G.elements)
            if (!keys.count(matrix_key(x.pi * y.pi))) {
                G.closed = false;
                break;
            }
        if (!G.closed) break;
    }
    return G;
}

template <FieldElement K>
struct PsiResult {
    unsigned mask;        // the eps with eps o E (Delta_0) = Delta_0
    std::size_t matches;  // how many of the 32 do it; 1 when psi is well defined
    Perm6 sigma;          // eps o E (p_i) = p_sigma(i)
};

template <FieldElement K>
PsiResult<K> psi(const Matrix<K>& Epi, const Genus2Curve<K>& C) {
    Vec<K> one(6), x(6);
    one[0] = C.one();
    x[1] = C.one();
    const auto d0a = to_pi(one, C), d0b = to_pi(x, C);
    PsiResult<K> r{0, 0, {}};
    for (unsigned mask = 0; mask < 32; ++mask) {
        const auto M = epsilon_mask_pi(mask, C) * Epi;
        if (Matrix<K>::from_rows({d0a, d0b, M * d0a, M * d0b}).rank() == 2) {
            if (!r.matches) r.mask = mask;
            ++r.matches;
        }
    }
    if (r.matches != 1) fail(Errc::InternalInconsistency, "psi: " + std::to_string(r.matches) + " involutions fix Delta_0");
    const auto M = epsilon_mask_pi(r.mask, C) * Epi;
    std::vector<Vec<K>> p_pi;
    for (int i = 1; i <= 6; ++i) p_pi.push_back(to_pi(point_p(i, C), C));
    for (std::size_t i = 0; i < 6; ++i) {
        const auto img = M * p_pi[i];
        int hit = -1;
        for (std::size_t k = 0; k < 6; ++k)
            if (proj_eq(img, p_pi[k])) hit = static_cast<int>(k);
        if (hit < 0) fail(Errc::InternalInconsistency, "psi: image of p_" + std::to_string(i + 1) + " is not a p_j");
        r.sigma[i] = hit;
    }
    return r;
}

/// The 12-vector (E(1), E(X)) up to scale: two elements with equal action on Delta_0.
template <FieldElement K>
std::string delta0_action_key(const Matrix<K>& Epi, const Genus2Curve<K>& C) {
    Vec<K> one(6), x(6);
    one[0] = C.one();
    x[1] = C.one();
    auto v = Epi * to_pi(one, C);
    const auto w = Epi * to_pi(x, C);
    v.insert(v.end(), w.begin(), w.end());
    return proj_key(v);
}

// ---------------------------------------------------------------------------
// Automorphisms of order two not commuting with Inv(S)

template <FieldElement K>
struct InvolutionConfig {
    std::array<int, 2> pair12, pair34, pair56;  // 1-based root indices
    std::string branch;                         // "sums", "products-swap", "products-fixed" or ""
    std::optional<MobiusCandidate<K>> map;
    bool certified = false;  // the map is valid, squares to a scalar and leaves Inv(S)
};

template <FieldElement K>
struct InvolutionReport {
    std::vector<InvolutionConfig<K>> configs;
    bool criterion = false;    // some configuration satisfies the criterion
    bool from_gl0 = false;     // GL_0 has an element with sigma^2 = 1, sigma != 1
    bool agree() const { return criterion == from_gl0; }
};

namespace detail {

inline Perm6 pair_perm(const std::vector<std::array<int, 2>>& swaps) {
    Perm6 s{0, 1, 2, 3, 4, 5};
    for (const auto& p : swaps) {
        s[static_cast<std::size_t>(p[0] - 1)] = p[1] - 1;
        s[static_cast<std::size_t>(p[1] - 1)] = p[0] - 1;
    }
    return s;
}

/// A candidate passes if it is a valid element of GL_0 of order two acting non-diagonally.
template <FieldElement K>
bool certify_involution(const MobiusCandidate<K>& m, const Genus2Curve<K>& C) {
    if (!mobius_valid(m, C) || is_identity(m.sigma)) return false;
    const auto M = gl0_to_matrix(m, C);
    if (!preserves_quadric_net(M, C)) return false;
    if (!matrix_proj_eq(M * M, Matrix<K>::identity(6, C.one()))) return false;
    for (unsigned mask = 1; mask < 32; ++mask) {
        const auto E = epsilon_mask_pi(mask, C);
        if (!(M * E == E * M)) return true;
    }
    return false;
}

}  // namespace detail

template <FieldElement K>
InvolutionReport<K> noncommuting_involution_report(const Genus2Curve<K>& C) {
    InvolutionReport<K> rep;
    // a distinguished pair {1,2} and a matching of the other four roots: 15 x 3 = 45 configurations
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b) {
            std::vector<int> rest;
            for (int k = 1; k <= 6; ++k)
                if (k != a && k != b) rest.push_back(k);
            for (int partner = 1; partner <= 3; ++partner) {
                std::vector<int> other;
                for (int k = 1; k <= 3; ++k)
                    if (k != partner) other.push_back(rest[static_cast<std::size_t>(k)]);
                InvolutionConfig<K> cfg;
                cfg.pair12 = {a, b};
                cfg.pair34 = {rest[0], rest[static_cast<std::size_t>(partner)]};
                cfg.pair56 = {other[0], other[1]};
                auto th = [&](int i) { return C.theta(i); };
                const K t1 = th(a), t2 = th(b), t3 = th(cfg.pair34[0]), t4 = th(cfg.pair34[1]), t5 = th(cfg.pair56[0]),
                        t6 = th(cfg.pair56[1]);
                const K z = K{} * C.one();
                if (t1 + t2 == t3 + t4 && t3 + t4 == t5 + t6) {
                    cfg.branch = "sums";
                    cfg.map = MobiusCandidate<K>{z, C.one(), -C.one(), t1 + t2,
                                                 detail::pair_perm({cfg.pair12, cfg.pair34, cfg.pair56})};
                } else if (!(t3 + t4 == t5 + t6)) {
                    const K t = (t5 * t6 - t3 * t4) / ((t3 + t4) - (t5 + t6));
                    const K c = (t3 + t) * (t4 + t);
                    const K s1 = t1 + t, s2 = t2 + t;
                    if (s1 * s2 == c) {
                        cfg.branch = "products-swap";
                        cfg.map = MobiusCandidate<K>{C.one(), t, -t, c - t * t,
                                                     detail::pair_perm({cfg.pair12, cfg.pair34, cfg.pair56})};
                    } else if ((s1 + s2).is_zero() && s1 * s1 == c) {
                        cfg.branch = "products-fixed";
                        cfg.map = MobiusCandidate<K>{C.one(), t, -t, c - t * t,
                                                     detail::pair_perm({cfg.pair34, cfg.pair56})};
                    }
                }
                if (cfg.map) cfg.certified = detail::certify_involution(*cfg.map, C);
                rep.criterion = rep.criterion || cfg.certified;
                rep.configs.push_back(std::move(cfg));
            }
        }
    for (const auto& m : find_gl0(C))
        if (!is_identity(m.sigma) && is_identity(compose(m.sigma, m.sigma))) rep.from_gl0 = true;
    return rep;
}

}  // namespace kummer

#endif
