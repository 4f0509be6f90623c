#pragma once

#include "bottleneck.hpp"
#include "cliqueness.hpp"
#include "complex.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "persistence.hpp"
#include "pipelines.hpp"
#include "rational.hpp"
#include "summary.hpp"
