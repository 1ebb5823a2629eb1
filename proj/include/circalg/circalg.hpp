#pragma once

#include "circalg/algebra.hpp"
#include "circalg/corpus.hpp"
#include "circalg/edge_subset.hpp"
#include "circalg/enumeration.hpp"
#include "circalg/error.hpp"
#include "circalg/graph.hpp"
#include "circalg/io.hpp"
#include "circalg/matrix.hpp"
#include "circalg/matroid.hpp"
#include "circalg/rational.hpp"
#include "circalg/square_free.hpp"
#include "circalg/verify.hpp"
