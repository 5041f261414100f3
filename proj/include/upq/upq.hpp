#pragma once

#include "upq/error.hpp"
#include "upq/interval.hpp"
#include "upq/invariants.hpp"
#include "upq/oracle.hpp"
#include "upq/parameter_space.hpp"
#include "upq/rational.hpp"
#include "upq/render.hpp"
#include "upq/report.hpp"
#include "upq/report_json.hpp"
#include "upq/self_check.hpp"
#include "upq/theorem_engine.hpp"
#include "upq/types.hpp"
