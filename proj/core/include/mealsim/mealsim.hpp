#pragma once

#include "mealsim/catalog.hpp"
#include "mealsim/config.hpp"
#include "mealsim/csv.hpp"
#include "mealsim/delay.hpp"
#include "mealsim/engine.hpp"
#include "mealsim/expm.hpp"
#include "mealsim/fv.hpp"
#include "mealsim/kinetics.hpp"
#include "mealsim/linearity.hpp"
#include "mealsim/models/alskar.hpp"
#include "mealsim/models/cstr_pfr.hpp"
#include "mealsim/models/dalla_man.hpp"
#include "mealsim/models/hovorka.hpp"
#include "mealsim/models/simo.hpp"
#include "mealsim/quadrature.hpp"
#include "mealsim/scenario.hpp"
#include "mealsim/series.hpp"
#include "mealsim/spectral.hpp"
#include "mealsim/types.hpp"
