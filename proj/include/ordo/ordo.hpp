#ifndef ordo_ordo_hpp
#define ordo_ordo_hpp

#include "ordo/alternatives.hpp"
#include "ordo/ballots.hpp"
#include "ordo/criteria.hpp"
#include "ordo/errors.hpp"
#include "ordo/methods.hpp"
#include "ordo/ordersets.hpp"
#include "ordo/rational.hpp"
#include "ordo/relation.hpp"
#include "ordo/supermajority.hpp"

#endif
