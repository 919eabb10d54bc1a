#pragma once

// Umbrella header: the whole library.

#include "wittlab/acceptance.hpp"
#include "wittlab/arf.hpp"
#include "wittlab/complement.hpp"
#include "wittlab/connectivity.hpp"
#include "wittlab/enumerate.hpp"
#include "wittlab/form_parameter.hpp"
#include "wittlab/homology.hpp"
#include "wittlab/hvector.hpp"
#include "wittlab/integer.hpp"
#include "wittlab/json_io.hpp"
#include "wittlab/ka.hpp"
#include "wittlab/kernel_restriction.hpp"
#include "wittlab/matrix.hpp"
#include "wittlab/quadratic_module.hpp"
#include "wittlab/random_instances.hpp"
#include "wittlab/reduce.hpp"
#include "wittlab/semisimplicial.hpp"
#include "wittlab/simplicial_complex.hpp"
#include "wittlab/snf.hpp"
