#pragma once

#include "qshuffle/errors.hpp"
#include "qshuffle/integer.hpp"
#include "qshuffle/laurent.hpp"
#include "qshuffle/permutation.hpp"
#include "qshuffle/hecke.hpp"
#include "qshuffle/shuffles.hpp"
#include "qshuffle/tableaux.hpp"
#include "qshuffle/spectrum.hpp"
#include "qshuffle/matrix.hpp"
#include "qshuffle/specht.hpp"
#include "qshuffle/verify.hpp"
#include "qshuffle/tables.hpp"
#include "qshuffle/serialize.hpp"
#include "qshuffle/expression.hpp"
