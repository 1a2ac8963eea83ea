#pragma once

#include "galorb/error.hpp"
#include "galorb/rational.hpp"
#include "galorb/matrix.hpp"
#include "galorb/polynomial.hpp"
#include "galorb/inner_product.hpp"
#include "galorb/galilean.hpp"
#include "galorb/random.hpp"
#include "galorb/summand.hpp"
#include "galorb/cotype.hpp"
#include "galorb/catalog.hpp"
#include "galorb/verify.hpp"
#include "galorb/serialize.hpp"
