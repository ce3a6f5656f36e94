#pragma once

#include "errors.hpp"
#include "count.hpp"
#include "point_set.hpp"
#include "poset.hpp"
#include "poset_io.hpp"
#include "parallel.hpp"
#include "downset_engine.hpp"
#include "boolean_lattice.hpp"
#include "canonical.hpp"
#include "qsplit.hpp"
#include "sigma.hpp"
#include "iso_classes.hpp"
#include "dedekind_methods.hpp"
#include "known_values.hpp"
#include "random_poset.hpp"
