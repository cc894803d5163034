#pragma once

#include "noneven/cycles.hpp"
#include "noneven/digraph.hpp"
#include "noneven/enumerate.hpp"
#include "noneven/parity.hpp"
#include "noneven/pattern_ops.hpp"
#include "noneven/sign.hpp"
#include "noneven/structures.hpp"
#include "noneven/symplectic.hpp"
