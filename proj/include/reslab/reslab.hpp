#pragma once

#include "reslab/core.hpp"
#include "reslab/cube.hpp"
#include "reslab/generators.hpp"
#include "reslab/graph.hpp"
#include "reslab/io.hpp"
#include "reslab/iso.hpp"
#include "reslab/matching.hpp"
#include "reslab/mis.hpp"
#include "reslab/plane_graph.hpp"
#include "reslab/resonance.hpp"
#include "reslab/resonant_sets.hpp"
