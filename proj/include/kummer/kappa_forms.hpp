#ifndef KUMMER_KAPPA_FORMS_HPP
#define KUMMER_KAPPA_FORMS_HPP

// The six quartic forms p_0..p_5 in xi_1..xi_4 defining kappa : K -> S, as term tables.
// Each term is num/den * f_0^a0 ... f_6^a6 * xi_1^b1 ... xi_4^b4.

#include <array>
#include <span>

namespace kummer {

struct KappaTerm {
    long num, den;
    std::array<int, 7> f;
    std::array<int, 4> xi;
};

inline constexpr KappaTerm kKappaP0[] = {
    {-1, 2, {0,0,0,0,0,0,0}, {1,1,0,2}},
    {-2, 1, {0,0,0,0,0,0,1}, {0,1,2,1}},
    {-1, 2, {0,0,0,0,0,1,0}, {0,2,1,1}},
    {-1, 2, {0,0,0,0,0,1,0}, {1,0,2,1}},
    {1, 2, {0,0,0,0,0,2,0}, {0,1,3,0}},
    {-1, 1, {0,0,0,0,1,0,0}, {1,1,1,1}},
    {-2, 1, {0,0,0,0,1,0,1}, {0,1,3,0}},
    {-1, 2, {0,0,0,1,0,0,0}, {2,0,1,1}},
    {-1, 1, {0,0,0,1,0,0,1}, {0,2,2,0}},
    {-1, 1, {0,0,0,1,0,0,1}, {1,0,3,0}},
    {-1, 2, {0,0,0,1,0,1,0}, {1,1,2,0}},
    {-2, 1, {0,0,1,0,0,0,1}, {1,1,2,0}},
    {-1, 1, {0,0,1,0,0,1,0}, {2,0,2,0}},
    {3, 2, {0,1,0,0,0,0,0}, {3,0,0,1}},
    {1, 1, {0,1,0,0,0,0,1}, {0,4,0,0}},
    {-3, 1, {0,1,0,0,0,0,1}, {1,2,1,0}},
    {2, 1, {0,1,0,0,0,0,1}, {2,0,2,0}},
    {1, 1, {0,1,0,0,0,1,0}, {1,3,0,0}},
    {-3, 2, {0,1,0,0,0,1,0}, {2,1,1,0}},
    {1, 1, {0,1,0,0,1,0,0}, {2,2,0,0}},
    {1, 1, {0,1,0,1,0,0,0}, {3,1,0,0}},
    {1, 1, {0,1,1,0,0,0,0}, {4,0,0,0}},
};

inline constexpr KappaTerm kKappaP1[] = {
    {1, 1, {0,0,0,0,0,0,0}, {2,0,0,2}},
    {1, 1, {0,0,0,0,0,0,1}, {0,2,1,1}},
    {1, 1, {0,0,0,0,0,0,1}, {1,0,2,1}},
    {1, 2, {0,0,0,0,0,1,0}, {0,3,0,1}},
    {-1, 2, {0,0,0,0,0,2,0}, {0,2,2,0}},
    {1, 1, {0,0,0,0,1,0,0}, {1,2,0,1}},
    {2, 1, {0,0,0,0,1,0,1}, {0,2,2,0}},
    {3, 2, {0,0,0,1,0,0,0}, {2,1,0,1}},
    {2, 1, {0,0,0,1,0,0,1}, {0,3,1,0}},
    {3, 2, {0,0,0,1,0,1,0}, {1,2,1,0}},
    {-1, 2, {0,0,0,1,0,1,0}, {2,0,2,0}},
    {1, 1, {0,0,0,1,1,0,0}, {2,1,1,0}},
    {1, 2, {0,0,0,2,0,0,0}, {3,0,1,0}},
    {3, 1, {0,0,1,0,0,0,0}, {3,0,0,1}},
    {2, 1, {0,0,1,0,0,0,1}, {0,4,0,0}},
    {-2, 1, {0,0,1,0,0,0,1}, {1,2,1,0}},
    {2, 1, {0,0,1,0,0,0,1}, {2,0,2,0}},
    {2, 1, {0,0,1,0,0,1,0}, {1,3,0,0}},
    {-1, 1, {0,0,1,0,0,1,0}, {2,1,1,0}},
    {2, 1, {0,0,1,0,1,0,0}, {2,2,0,0}},
    {2, 1, {0,0,1,1,0,0,0}, {3,1,0,0}},
    {2, 1, {0,0,2,0,0,0,0}, {4,0,0,0}},
    {1, 1, {0,1,0,0,0,0,1}, {1,3,0,0}},
    {-1, 1, {0,1,0,0,0,0,1}, {2,1,1,0}},
    {1, 2, {0,1,0,0,0,1,0}, {2,2,0,0}},
    {-1, 2, {0,1,0,1,0,0,0}, {4,0,0,0}},
};

inline constexpr KappaTerm kKappaP2[] = {
    {1, 1, {0,0,0,0,0,0,1}, {0,3,0,1}},
    {-3, 1, {0,0,0,0,0,0,1}, {1,1,1,1}},
    {1, 1, {0,0,0,0,0,1,0}, {1,2,0,1}},
    {-2, 1, {0,0,0,0,0,1,0}, {2,0,1,1}},
    {1, 1, {0,0,0,0,0,1,1}, {0,2,2,0}},
    {-1, 1, {0,0,0,0,0,1,1}, {1,0,3,0}},
    {1, 1, {0,0,0,0,0,2,0}, {1,1,2,0}},
    {1, 1, {0,0,0,0,1,0,0}, {2,1,0,1}},
    {2, 1, {0,0,0,0,1,0,1}, {0,3,1,0}},
    {-4, 1, {0,0,0,0,1,0,1}, {1,1,2,0}},
    {2, 1, {0,0,0,0,1,1,0}, {1,2,1,0}},
    {-1, 1, {0,0,0,0,1,1,0}, {2,0,2,0}},
    {2, 1, {0,0,0,0,2,0,0}, {2,1,1,0}},
    {2, 1, {0,0,0,1,0,0,0}, {3,0,0,1}},
    {2, 1, {0,0,0,1,0,0,1}, {0,4,0,0}},
    {-5, 1, {0,0,0,1,0,0,1}, {1,2,1,0}},
    {1, 1, {0,0,0,1,0,0,1}, {2,0,2,0}},
    {2, 1, {0,0,0,1,0,1,0}, {1,3,0,0}},
    {-3, 1, {0,0,0,1,0,1,0}, {2,1,1,0}},
    {2, 1, {0,0,0,1,1,0,0}, {2,2,0,0}},
    {1, 1, {0,0,0,1,1,0,0}, {3,0,1,0}},
    {2, 1, {0,0,0,2,0,0,0}, {3,1,0,0}},
    {-2, 1, {0,0,1,0,0,0,1}, {2,1,1,0}},
    {-2, 1, {0,0,1,0,0,1,0}, {3,0,1,0}},
    {2, 1, {0,0,1,1,0,0,0}, {4,0,0,0}},
    {-1, 1, {0,1,0,0,0,0,1}, {2,2,0,0}},
    {1, 1, {0,1,0,0,0,0,1}, {3,0,1,0}},
    {-1, 1, {0,1,0,0,0,1,0}, {3,1,0,0}},
    {-1, 1, {0,1,0,0,1,0,0}, {4,0,0,0}},
};

inline constexpr KappaTerm kKappaP3[] = {
    {1, 1, {0,0,0,0,0,0,1}, {1,2,0,1}},
    {-2, 1, {0,0,0,0,0,0,1}, {2,0,1,1}},
    {2, 1, {0,0,0,0,0,0,2}, {0,2,2,0}},
    {-2, 1, {0,0,0,0,0,0,2}, {1,0,3,0}},
    {1, 1, {0,0,0,0,0,1,0}, {2,1,0,1}},
    {2, 1, {0,0,0,0,0,1,1}, {0,3,1,0}},
    {-1, 1, {0,0,0,0,0,1,1}, {1,1,2,0}},
    {2, 1, {0,0,0,0,0,2,0}, {1,2,1,0}},
    {-1, 1, {0,0,0,0,0,2,0}, {2,0,2,0}},
    {2, 1, {0,0,0,0,1,0,0}, {3,0,0,1}},
    {2, 1, {0,0,0,0,1,0,1}, {0,4,0,0}},
    {-4, 1, {0,0,0,0,1,0,1}, {1,2,1,0}},
    {2, 1, {0,0,0,0,1,0,1}, {2,0,2,0}},
    {2, 1, {0,0,0,0,1,1,0}, {1,3,0,0}},
    {2, 1, {0,0,0,0,2,0,0}, {2,2,0,0}},
    {-1, 1, {0,0,0,1,0,0,1}, {2,1,1,0}},
    {1, 1, {0,0,0,1,0,1,0}, {3,0,1,0}},
    {2, 1, {0,0,0,1,1,0,0}, {3,1,0,0}},
    {-2, 1, {0,0,1,0,0,0,1}, {3,0,1,0}},
    {2, 1, {0,0,1,0,1,0,0}, {4,0,0,0}},
    {-1, 1, {0,1,0,0,0,0,1}, {3,1,0,0}},
    {-1, 1, {0,1,0,0,0,1,0}, {4,0,0,0}},
};

inline constexpr KappaTerm kKappaP4[] = {
    {1, 1, {0,0,0,0,0,0,1}, {2,1,0,1}},
    {2, 1, {0,0,0,0,0,0,2}, {0,3,1,0}},
    {-2, 1, {0,0,0,0,0,0,2}, {1,1,2,0}},
    {2, 1, {0,0,0,0,0,1,0}, {3,0,0,1}},
    {2, 1, {0,0,0,0,0,1,1}, {0,4,0,0}},
    {-2, 1, {0,0,0,0,0,1,1}, {1,2,1,0}},
    {1, 1, {0,0,0,0,0,1,1}, {2,0,2,0}},
    {2, 1, {0,0,0,0,0,2,0}, {1,3,0,0}},
    {-2, 1, {0,0,0,0,0,2,0}, {2,1,1,0}},
    {2, 1, {0,0,0,0,1,0,1}, {2,1,1,0}},
    {2, 1, {0,0,0,0,1,1,0}, {2,2,0,0}},
    {1, 1, {0,0,0,1,0,0,1}, {3,0,1,0}},
    {2, 1, {0,0,0,1,0,1,0}, {3,1,0,0}},
    {2, 1, {0,0,1,0,0,1,0}, {4,0,0,0}},
    {-1, 1, {0,1,0,0,0,0,1}, {4,0,0,0}},
};

inline constexpr KappaTerm kKappaP5[] = {
    {2, 1, {0,0,0,0,0,0,1}, {3,0,0,1}},
    {2, 1, {0,0,0,0,0,0,2}, {0,4,0,0}},
    {-4, 1, {0,0,0,0,0,0,2}, {1,2,1,0}},
    {2, 1, {0,0,0,0,0,0,2}, {2,0,2,0}},
    {2, 1, {0,0,0,0,0,1,1}, {1,3,0,0}},
    {-2, 1, {0,0,0,0,0,1,1}, {2,1,1,0}},
    {2, 1, {0,0,0,0,1,0,1}, {2,2,0,0}},
    {2, 1, {0,0,0,1,0,0,1}, {3,1,0,0}},
    {2, 1, {0,0,1,0,0,0,1}, {4,0,0,0}},
};

inline constexpr std::array<std::span<const KappaTerm>, 6> kKappaForms{
    std::span<const KappaTerm>(kKappaP0), std::span<const KappaTerm>(kKappaP1),
    std::span<const KappaTerm>(kKappaP2), std::span<const KappaTerm>(kKappaP3),
    std::span<const KappaTerm>(kKappaP4), std::span<const KappaTerm>(kKappaP5)};

}  // namespace kummer

#endif
