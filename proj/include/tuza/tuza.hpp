#pragma once

#include "tuza/acyclic_solver.hpp"
#include "tuza/cover.hpp"
#include "tuza/cycle_breaking.hpp"
#include "tuza/errors.hpp"
#include "tuza/experiment.hpp"
#include "tuza/graph.hpp"
#include "tuza/hypergraph.hpp"
#include "tuza/io.hpp"
#include "tuza/oracles.hpp"
#include "tuza/rng.hpp"
#include "tuza/serialize.hpp"
