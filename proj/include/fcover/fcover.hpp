#pragma once

#include "fcover/errors.hpp"
#include "fcover/rational.hpp"
#include "fcover/monomial.hpp"
#include "fcover/polynomial.hpp"
#include "fcover/parser.hpp"
#include "fcover/groebner.hpp"
#include "fcover/poisson.hpp"
#include "fcover/linalg.hpp"
#include "fcover/f_structure.hpp"
#include "fcover/upoly.hpp"
#include "fcover/point_algebra.hpp"
#include "fcover/euler.hpp"
#include "fcover/super_frobenius.hpp"
