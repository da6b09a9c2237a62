#pragma once

// Umbrella header.

#include "wofc/betti_forest.hpp"
#include "wofc/betti_table.hpp"
#include "wofc/complex.hpp"
#include "wofc/covers.hpp"
#include "wofc/exact.hpp"
#include "wofc/graphs.hpp"
#include "wofc/homology.hpp"
#include "wofc/instances.hpp"
#include "wofc/io.hpp"
#include "wofc/lyubeznik.hpp"
