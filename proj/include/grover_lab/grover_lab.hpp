#pragma once

#include "grover_lab/bench.hpp"
#include "grover_lab/bounded_search.hpp"
#include "grover_lab/errors.hpp"
#include "grover_lab/grover_modified.hpp"
#include "grover_lab/grover_standard.hpp"
#include "grover_lab/instance.hpp"
#include "grover_lab/io.hpp"
#include "grover_lab/report.hpp"
#include "grover_lab/rng.hpp"
#include "grover_lab/statevector.hpp"
