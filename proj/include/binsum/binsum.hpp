#pragma once

// Exact-arithmetic library for residue-class binomial sums, their linear
// recurrences and characteristic polynomials, and the associated
// Bernoulli/Euler prime congruences.

#include "binsum/rational.hpp"
#include "binsum/numtheory.hpp"
#include "binsum/check_report.hpp"
#include "binsum/identities.hpp"
#include "binsum/residue_sums.hpp"
#include "binsum/residue_checks.hpp"
#include "binsum/coefficients.hpp"
#include "binsum/int_poly.hpp"
#include "binsum/charpoly.hpp"
#include "binsum/rat_poly.hpp"
#include "binsum/bernoulli_euler.hpp"
#include "binsum/uv_sequences.hpp"
#include "binsum/sweeps.hpp"
