#ifndef MCCAC_MCCAC_HPP
#define MCCAC_MCCAC_HPP

// Umbrella header for the multichannel conflict-avoiding code toolkit.

#include "mccac/bounds.hpp"
#include "mccac/cac.hpp"
#include "mccac/catalog.hpp"
#include "mccac/code.hpp"
#include "mccac/compose.hpp"
#include "mccac/conflict_graph.hpp"
#include "mccac/difference_matrix.hpp"
#include "mccac/enumerate.hpp"
#include "mccac/errors.hpp"
#include "mccac/gbrd.hpp"
#include "mccac/numtheory.hpp"
#include "mccac/pattern.hpp"
#include "mccac/rng.hpp"
#include "mccac/search_status.hpp"
#include "mccac/serialize.hpp"
#include "mccac/simulator.hpp"
#include "mccac/solver.hpp"
#include "mccac/zl_set.hpp"

#endif  // MCCAC_MCCAC_HPP
