#pragma once

#include "turan/bitrow.hpp"
#include "turan/coloring.hpp"
#include "turan/constructions.hpp"
#include "turan/crosscut.hpp"
#include "turan/embedding.hpp"
#include "turan/error.hpp"
#include "turan/finite_field.hpp"
#include "turan/full_subgraph.hpp"
#include "turan/graph.hpp"
#include "turan/graph_algorithms.hpp"
#include "turan/norm_tower.hpp"
#include "turan/oracle.hpp"
#include "turan/rng.hpp"
#include "turan/triple_system.hpp"
