#ifndef PFAFFIANS_PFAFFIANS_HPP
#define PFAFFIANS_PFAFFIANS_HPP

#include "pfaffians/complex.hpp"
#include "pfaffians/enumerate.hpp"
#include "pfaffians/groebner.hpp"
#include "pfaffians/ideal.hpp"
#include "pfaffians/krs.hpp"
#include "pfaffians/monomial.hpp"
#include "pfaffians/multiplicity.hpp"
#include "pfaffians/pfaffian.hpp"
#include "pfaffians/polynomial.hpp"
#include "pfaffians/tableau.hpp"
#include "pfaffians/types.hpp"

#endif
