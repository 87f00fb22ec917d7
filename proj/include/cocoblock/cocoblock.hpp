#pragma once

#include "cocoblock/graph.hpp"
#include "cocoblock/layers.hpp"
#include "cocoblock/mincut.hpp"
#include "cocoblock/ordering.hpp"
#include "cocoblock/reduction.hpp"
#include "cocoblock/solver.hpp"
