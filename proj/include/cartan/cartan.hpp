#pragma once

// Factorization of orthogonal transformations of R^{p,q} into hyperplane
// reflections, with exact rational arithmetic and Clifford-algebra checks.

#include "cartan/analysis.hpp"
#include "cartan/bilinear.hpp"
#include "cartan/clifford.hpp"
#include "cartan/errors.hpp"
#include "cartan/factorization.hpp"
#include "cartan/generate.hpp"
#include "cartan/linalg.hpp"
#include "cartan/problem_io.hpp"
#include "cartan/scalar.hpp"
