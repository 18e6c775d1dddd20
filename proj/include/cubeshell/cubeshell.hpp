#pragma once

// Umbrella header for the library (the command-line layer is cli.hpp).

#include "cubeshell/envelope.hpp"
#include "cubeshell/geometry.hpp"
#include "cubeshell/io.hpp"
#include "cubeshell/kdtree.hpp"
#include "cubeshell/linf_voronoi.hpp"
#include "cubeshell/oracle.hpp"
#include "cubeshell/planar.hpp"
#include "cubeshell/scalar.hpp"
#include "cubeshell/shell.hpp"
#include "cubeshell/solver.hpp"
#include "cubeshell/square_union.hpp"
#include "cubeshell/svg.hpp"
