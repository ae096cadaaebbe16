#pragma once

#include "chromatic/analysis.hpp"
#include "chromatic/chromatic.hpp"
#include "chromatic/errors.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/graph_spec.hpp"
#include "chromatic/identities.hpp"
#include "chromatic/numeric.hpp"
#include "chromatic/partition_oracle.hpp"
#include "chromatic/polynomial.hpp"
#include "chromatic/serialization.hpp"
#include "chromatic/stirling.hpp"
