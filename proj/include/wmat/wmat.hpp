#ifndef WMAT_WMAT_HPP
#define WMAT_WMAT_HPP

#include <wmat/algebra.hpp>
#include <wmat/coalgebra.hpp>
#include <wmat/enumeration.hpp>
#include <wmat/error.hpp>
#include <wmat/formal_sum.hpp>
#include <wmat/primitives.hpp>
#include <wmat/rational_matrix.hpp>
#include <wmat/series.hpp>
#include <wmat/word.hpp>

#endif
