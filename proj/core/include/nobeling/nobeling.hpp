#pragma once

#include "nobeling/codim.hpp"
#include "nobeling/errors.hpp"
#include "nobeling/fixtures.hpp"
#include "nobeling/game.hpp"
#include "nobeling/geometry.hpp"
#include "nobeling/lines.hpp"
#include "nobeling/moves.hpp"
#include "nobeling/scalar.hpp"
#include "nobeling/serialize.hpp"
