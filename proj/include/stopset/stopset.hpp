#ifndef STOPSET_STOPSET_HPP
#define STOPSET_STOPSET_HPP

#include "stopset/bits.hpp"
#include "stopset/code.hpp"
#include "stopset/cog.hpp"
#include "stopset/decode.hpp"
#include "stopset/matrix.hpp"
#include "stopset/pattern.hpp"
#include "stopset/perm.hpp"
#include "stopset/sad.hpp"
#include "stopset/sim.hpp"
#include "stopset/stopping.hpp"

#endif
