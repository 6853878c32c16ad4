#ifndef CONECERT_CONECERT_HPP
#define CONECERT_CONECERT_HPP

// Exact-arithmetic construction and certification of hyperbolic-surface
// deformation families f1 f2 + t f_inf in P^3, plus the resultant projection
// of skew cone pairs in P^4.

#include "conecert/binary.hpp"
#include "conecert/certify.hpp"
#include "conecert/forge.hpp"
#include "conecert/gamma.hpp"
#include "conecert/homform.hpp"
#include "conecert/io.hpp"
#include "conecert/macaulay.hpp"
#include "conecert/rational.hpp"
#include "conecert/remark.hpp"
#include "conecert/rng.hpp"
#include "conecert/roots.hpp"
#include "conecert/subresultant.hpp"
#include "conecert/sylvester.hpp"
#include "conecert/unipoly.hpp"

#endif
