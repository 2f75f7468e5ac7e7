#pragma once

#include "audit.hpp"
#include "bitgraph.hpp"
#include "bounds.hpp"
#include "canonical.hpp"
#include "constructions.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "json_io.hpp"
#include "patterns.hpp"
#include "planarity.hpp"
#include "rational.hpp"
#include "search.hpp"
