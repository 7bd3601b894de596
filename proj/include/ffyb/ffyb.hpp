#ifndef FFYB_FFYB_HPP
#define FFYB_FFYB_HPP

#include "ffyb/error.hpp"
#include "ffyb/gf.hpp"
#include "ffyb/unipoly.hpp"
#include "ffyb/matfq.hpp"
#include "ffyb/polyfq.hpp"
#include "ffyb/instance.hpp"
#include "ffyb/orbits.hpp"
#include "ffyb/solutions.hpp"
#include "ffyb/oracles.hpp"
#include "ffyb/invariants.hpp"
#include "ffyb/ideal.hpp"
#include "ffyb/verify.hpp"

#endif  // FFYB_FFYB_HPP
