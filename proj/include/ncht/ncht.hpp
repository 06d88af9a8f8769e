#pragma once

#include "ncht/error.hpp"
#include "ncht/permutation.hpp"
#include "ncht/hypergraph.hpp"
#include "ncht/dissection.hpp"
#include "ncht/enumerate.hpp"
#include "ncht/orderings.hpp"
#include "ncht/lattice.hpp"
#include "ncht/complex.hpp"
#include "ncht/io.hpp"
#include "ncht/verify.hpp"
