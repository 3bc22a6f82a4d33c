#pragma once

#include "monideal/decomp.hpp"
#include "monideal/errors.hpp"
#include "monideal/ideal.hpp"
#include "monideal/monomial.hpp"
#include "monideal/newton.hpp"
#include "monideal/oracle.hpp"
#include "monideal/powers.hpp"
#include "monideal/text.hpp"
