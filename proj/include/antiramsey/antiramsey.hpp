#pragma once

#include "certificate.hpp"
#include "coloring.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "forest_spec.hpp"
#include "formulas.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "oracle.hpp"
#include "rainbow.hpp"
#include "report.hpp"
#include "json_io.hpp"
