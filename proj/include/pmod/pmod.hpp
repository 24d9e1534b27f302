#pragma once

#include "cloud.hpp"
#include "errors.hpp"
#include "fp_matrix.hpp"
#include "interval.hpp"
#include "io.hpp"
#include "matching.hpp"
#include "poset.hpp"
#include "rational.hpp"
#include "refinement.hpp"
#include "rep.hpp"
