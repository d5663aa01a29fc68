#pragma once

#include "orbipot/error.hpp"
#include "orbipot/rational.hpp"
#include "orbipot/words.hpp"
#include "orbipot/area.hpp"
#include "orbipot/cutglue.hpp"
#include "orbipot/grouporacle.hpp"
#include "orbipot/potential.hpp"
#include "orbipot/qseries.hpp"
#include "orbipot/closedforms.hpp"
#include "orbipot/elliptic_oracle.hpp"
#include "orbipot/mirrormap.hpp"
#include "orbipot/serialize.hpp"
#include "orbipot/verify.hpp"
