#ifndef SYMFA_SYMFA_HPP
#define SYMFA_SYMFA_HPP

#include "predicate.hpp"
#include "interval.hpp"
#include "propositional.hpp"
#include "algebra.hpp"
#include "sfa.hpp"
#include "transforms.hpp"
#include "operations.hpp"
#include "canonical.hpp"
#include "oracle.hpp"
#include "io.hpp"
#include "dot.hpp"

#endif
