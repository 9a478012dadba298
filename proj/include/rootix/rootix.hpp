#pragma once

#include "rootix/canonical.hpp"
#include "rootix/enumerate.hpp"
#include "rootix/error.hpp"
#include "rootix/graph.hpp"
#include "rootix/graph6.hpp"
#include "rootix/metrics.hpp"
#include "rootix/parallel.hpp"
#include "rootix/polynomial.hpp"
#include "rootix/roots.hpp"
#include "rootix/selftest.hpp"
#include "rootix/spectrum.hpp"
