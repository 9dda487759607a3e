#pragma once

#include "boolhd/error.hpp"
#include "boolhd/relations.hpp"
#include "boolhd/language.hpp"
#include "boolhd/postlattice.hpp"
#include "boolhd/fragment.hpp"
#include "boolhd/outcome.hpp"
#include "boolhd/formula.hpp"
#include "boolhd/gf2.hpp"
#include "boolhd/lp.hpp"
#include "boolhd/maxflow.hpp"
#include "boolhd/clausal.hpp"
#include "boolhd/decision.hpp"
#include "boolhd/nsol.hpp"
#include "boolhd/xsol.hpp"
#include "boolhd/msd.hpp"
