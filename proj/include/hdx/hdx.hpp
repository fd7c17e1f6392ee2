#pragma once

#include "error.hpp"
#include "rng.hpp"
#include "combinatorics.hpp"
#include "face.hpp"
#include "complex.hpp"
#include "complex_io.hpp"
#include "spectral.hpp"
#include "walks.hpp"
#include "cochain.hpp"
#include "cover.hpp"
#include "cocycle_search.hpp"
#include "faces_flags.hpp"
#include "well_connected.hpp"
#include "agreement.hpp"
#include "pipeline.hpp"
#include "counterexamples.hpp"
#include "buildings.hpp"
#include "report.hpp"
