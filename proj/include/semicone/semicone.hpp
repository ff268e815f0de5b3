#pragma once

#include "apery.hpp"
#include "betti.hpp"
#include "binomial.hpp"
#include "errors.hpp"
#include "extensions.hpp"
#include "homology.hpp"
#include "ideal.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "mora.hpp"
#include "numeric.hpp"
#include "report.hpp"
#include "semigroup.hpp"
#include "toric.hpp"
