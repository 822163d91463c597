#pragma once

#include "skewgal/config.hpp"
#include "skewgal/errors.hpp"
#include "skewgal/expr.hpp"
#include "skewgal/galois_ext.hpp"
#include "skewgal/irreducible.hpp"
#include "skewgal/linalg.hpp"
#include "skewgal/mpoly.hpp"
#include "skewgal/normform.hpp"
#include "skewgal/polynomial.hpp"
#include "skewgal/ratfunc.hpp"
#include "skewgal/rational.hpp"
#include "skewgal/report.hpp"
#include "skewgal/scalar_ext.hpp"
#include "skewgal/series.hpp"
#include "skewgal/skewfrac.hpp"
#include "skewgal/structalg.hpp"
#include "skewgal/version.hpp"
