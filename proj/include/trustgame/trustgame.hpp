#pragma once
// Umbrella header for the whole toolkit.

#include "trustgame/analysis.hpp"
#include "trustgame/cli.hpp"
#include "trustgame/config.hpp"
#include "trustgame/game.hpp"
#include "trustgame/market.hpp"
#include "trustgame/trust.hpp"
#include "trustgame/utility.hpp"
