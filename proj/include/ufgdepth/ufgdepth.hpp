#pragma once

#include "ufgdepth/analysis.hpp"
#include "ufgdepth/closure.hpp"
#include "ufgdepth/csv.hpp"
#include "ufgdepth/depth.hpp"
#include "ufgdepth/dominance.hpp"
#include "ufgdepth/dot.hpp"
#include "ufgdepth/errors.hpp"
#include "ufgdepth/oracle.hpp"
#include "ufgdepth/rational.hpp"
#include "ufgdepth/relation.hpp"
#include "ufgdepth/report_json.hpp"
#include "ufgdepth/sample.hpp"
#include "ufgdepth/ufg_family.hpp"
#include "ufgdepth/universe.hpp"
#include "ufgdepth/version.hpp"
