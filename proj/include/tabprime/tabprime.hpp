#pragma once

// Umbrella header.

#include "tabprime/canonical_basis.hpp"
#include "tabprime/correspondence.hpp"
#include "tabprime/enumeration.hpp"
#include "tabprime/errors.hpp"
#include "tabprime/factorization.hpp"
#include "tabprime/fixtures.hpp"
#include "tabprime/primality.hpp"
#include "tabprime/promotion.hpp"
#include "tabprime/separation.hpp"
#include "tabprime/tableau.hpp"
