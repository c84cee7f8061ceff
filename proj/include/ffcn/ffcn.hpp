#ifndef FFCN_FFCN_HPP
#define FFCN_FFCN_HPP

// Umbrella header: class numbers, Hurwitz class numbers, local embedding
// numbers and theta Fourier tables for quadratic orders over F_q[t],
// together with the brute-force oracles and the verification suite.

#include "ffcn/eichler_local.hpp"
#include "ffcn/errors.hpp"
#include "ffcn/factor.hpp"
#include "ffcn/fq.hpp"
#include "ffcn/hurwitz.hpp"
#include "ffcn/oracle.hpp"
#include "ffcn/poly.hpp"
#include "ffcn/quad_class.hpp"
#include "ffcn/rational.hpp"
#include "ffcn/serialize.hpp"
#include "ffcn/symbols.hpp"
#include "ffcn/theta.hpp"
#include "ffcn/verify.hpp"

#endif  // FFCN_FFCN_HPP
