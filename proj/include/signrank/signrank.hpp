#pragma once

#include "signrank/rational.hpp"
#include "signrank/matrix.hpp"
#include "signrank/feasibility.hpp"
#include "signrank/budget.hpp"
#include "signrank/sign.hpp"
#include "signrank/subspace_signs.hpp"
#include "signrank/random.hpp"
#include "signrank/rank2.hpp"
#include "signrank/realize.hpp"
#include "signrank/minrank.hpp"
#include "signrank/extremal.hpp"
#include "signrank/io.hpp"
#include "signrank/parallel.hpp"
#include "signrank/serialize.hpp"
#include "signrank/acceptance.hpp"
