#ifndef PADICFUN_PADICFUN_HPP
#define PADICFUN_PADICFUN_HPP

#include <padicfun/error.hpp>
#include <padicfun/laurent.hpp>
#include <padicfun/monomial.hpp>
#include <padicfun/permutation.hpp>
#include <padicfun/points.hpp>
#include <padicfun/rational.hpp>
#include <padicfun/refinements.hpp>
#include <padicfun/tori.hpp>
#include <padicfun/transfer.hpp>

#endif
