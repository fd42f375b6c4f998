#pragma once

// Umbrella header for the whole library. Individual headers are fine to
// include on their own; this one is for quick starts and the demos.

#include "abwt/dcsort.hpp"
#include "abwt/fmindex.hpp"
#include "abwt/galois.hpp"
#include "abwt/lfmap.hpp"
#include "abwt/orders.hpp"
#include "abwt/rankindex.hpp"
#include "abwt/rankinv.hpp"
#include "abwt/reference.hpp"
#include "abwt/sais.hpp"
#include "abwt/stats.hpp"
