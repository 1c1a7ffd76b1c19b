#pragma once

#include "braceforge/analysis.hpp"
#include "braceforge/brace.hpp"
#include "braceforge/catalog.hpp"
#include "braceforge/core.hpp"
#include "braceforge/enumerate.hpp"
#include "braceforge/extended.hpp"
#include "braceforge/io.hpp"
#include "braceforge/perm.hpp"
#include "braceforge/series.hpp"
#include "braceforge/ybe.hpp"
