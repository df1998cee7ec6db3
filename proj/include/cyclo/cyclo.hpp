#pragma once

#include "cyclo/arith.hpp"
#include "cyclo/binary.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/families.hpp"
#include "cyclo/kaplan.hpp"
#include "cyclo/parallel.hpp"
#include "cyclo/poly.hpp"
#include "cyclo/properties.hpp"
#include "cyclo/semigroup.hpp"
