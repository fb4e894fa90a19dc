#pragma once

#include "analysis.hpp"
#include "checks.hpp"
#include "errors.hpp"
#include "evolution.hpp"
#include "expr.hpp"
#include "families.hpp"
#include "gamma.hpp"
#include "grassmann.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "suites.hpp"
#include "supermatrix.hpp"
