#pragma once

#include "hyperpic/abelian.hpp"
#include "hyperpic/chern.hpp"
#include "hyperpic/expr.hpp"
#include "hyperpic/groebner.hpp"
#include "hyperpic/picard.hpp"
#include "hyperpic/polynomial.hpp"
#include "hyperpic/presentation.hpp"
#include "hyperpic/rational.hpp"
#include "hyperpic/splitting.hpp"
#include "hyperpic/suites.hpp"
#include "hyperpic/tower.hpp"
