#pragma once

// Umbrella header.
#include "jetalg/algebra_a.hpp"
#include "jetalg/checks.hpp"
#include "jetalg/gl2.hpp"
#include "jetalg/jet_lie.hpp"
#include "jetalg/jet_modules.hpp"
#include "jetalg/linear_combination.hpp"
#include "jetalg/parser.hpp"
#include "jetalg/phi_rho.hpp"
#include "jetalg/smash.hpp"
#include "jetalg/sweep.hpp"
#include "jetalg/vector_fields.hpp"
#include "jetalg/weyl.hpp"
