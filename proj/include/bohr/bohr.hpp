#pragma once

#include "bohr/series.hpp"
#include "bohr/extremals.hpp"
#include "bohr/functionals.hpp"
#include "bohr/solver.hpp"
#include "bohr/samples.hpp"
#include "bohr/internals.hpp"
#include "bohr/verify.hpp"
#include "bohr/conjecture.hpp"
#include "bohr/io.hpp"
