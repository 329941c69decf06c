#ifndef KUMMER_KUMMER_HPP
#define KUMMER_KUMMER_HPP

#include "kummer/automorphisms.hpp"
#include "kummer/curve_io.hpp"
#include "kummer/duality.hpp"
#include "kummer/linecomplex.hpp"
#include "kummer/sampling.hpp"
#include "kummer/twists.hpp"
#include "kummer/verify.hpp"

#endif
