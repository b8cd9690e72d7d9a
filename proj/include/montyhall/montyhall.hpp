#pragma once

#include "montyhall/bayes.hpp"
#include "montyhall/core.hpp"
#include "montyhall/dominance.hpp"
#include "montyhall/error.hpp"
#include "montyhall/minimax.hpp"
#include "montyhall/montecarlo.hpp"
#include "montyhall/payoff.hpp"
