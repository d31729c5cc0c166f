#ifndef COCKTAIL_COCKTAIL_HPP
#define COCKTAIL_COCKTAIL_HPP

#include "cocktail/cover.hpp"
#include "cocktail/extremal.hpp"
#include "cocktail/format.hpp"
#include "cocktail/generate.hpp"
#include "cocktail/graph.hpp"
#include "cocktail/lab.hpp"
#include "cocktail/reachability.hpp"
#include "cocktail/symmetry.hpp"

#endif  // COCKTAIL_COCKTAIL_HPP
