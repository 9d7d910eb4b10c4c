#pragma once

#include "exproj/bounds.hpp"
#include "exproj/brascamp_lieb.hpp"
#include "exproj/cell_tree.hpp"
#include "exproj/grid_example.hpp"
#include "exproj/lower_bounds.hpp"
#include "exproj/metrics.hpp"
#include "exproj/point_set.hpp"
#include "exproj/rational.hpp"
#include "exproj/schubert.hpp"
#include "exproj/subspace.hpp"
#include "exproj/sweep.hpp"
#include "exproj/synthetic.hpp"
#include "exproj/tally.hpp"
