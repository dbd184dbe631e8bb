#pragma once

#include "flagcodes/channel.hpp"
#include "flagcodes/errors.hpp"
#include "flagcodes/field.hpp"
#include "flagcodes/flag.hpp"
#include "flagcodes/flag_orbits.hpp"
#include "flagcodes/galois.hpp"
#include "flagcodes/group.hpp"
#include "flagcodes/io.hpp"
#include "flagcodes/linear_groups.hpp"
#include "flagcodes/matrix.hpp"
#include "flagcodes/number_theory.hpp"
#include "flagcodes/random.hpp"
#include "flagcodes/report.hpp"
#include "flagcodes/spread.hpp"
#include "flagcodes/subspace.hpp"
#include "flagcodes/verify.hpp"
