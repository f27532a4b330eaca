#pragma once

#include "exotic/brieskorn.hpp"
#include "exotic/errors.hpp"
#include "exotic/hodge.hpp"
#include "exotic/lattice.hpp"
#include "exotic/milnor.hpp"
#include "exotic/moduli.hpp"
#include "exotic/tduality.hpp"
