#pragma once

#include "posray/errors.hpp"
#include "posray/injection.hpp"
#include "posray/labelset.hpp"
#include "posray/lediagram.hpp"
#include "posray/legraph.hpp"
#include "posray/pathsearch.hpp"
#include "posray/polynomial.hpp"
#include "posray/positroid.hpp"
#include "posray/rational.hpp"
#include "posray/rayleigh.hpp"
#include "posray/rng.hpp"
