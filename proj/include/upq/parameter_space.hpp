#pragma once

#include "upq/decompositions.hpp"
#include "upq/range.hpp"
#include "upq/walls.hpp"
