#pragma once

/// \file qi.hpp
/// \brief Umbrella header.

#include "qi/errors.hpp"
#include "qi/rational.hpp"
#include "qi/multipoly.hpp"
#include "qi/tpoly.hpp"
#include "qi/series.hpp"
#include "qi/perm.hpp"
#include "qi/group_algebra.hpp"
#include "qi/tableau.hpp"
#include "qi/linalg.hpp"
#include "qi/quasi.hpp"
#include "qi/hook_basis.hpp"
#include "qi/calogero.hpp"
#include "qi/structure.hpp"
#include "qi/json_io.hpp"
#include "qi/suites.hpp"
