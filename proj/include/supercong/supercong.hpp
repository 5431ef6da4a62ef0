#pragma once

// Umbrella header for the whole library.

#include "supercong/bipoly.hpp"
#include "supercong/checks.hpp"
#include "supercong/combinat.hpp"
#include "supercong/dsl.hpp"
#include "supercong/errors.hpp"
#include "supercong/padic.hpp"
#include "supercong/pi_reference.hpp"
#include "supercong/primes.hpp"
#include "supercong/rational.hpp"
#include "supercong/report.hpp"
#include "supercong/report_io.hpp"
#include "supercong/series.hpp"
#include "supercong/series_file.hpp"
#include "supercong/wz.hpp"
