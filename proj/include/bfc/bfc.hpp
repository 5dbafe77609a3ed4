#pragma once

#include "bfc/errors.hpp"
#include "bfc/rational.hpp"
#include "bfc/linear.hpp"
#include "bfc/partition.hpp"
#include "bfc/permutation.hpp"
#include "bfc/maya.hpp"
#include "bfc/ribbon.hpp"
#include "bfc/poly.hpp"
#include "bfc/fock.hpp"
#include "bfc/backstable.hpp"
#include "bfc/io.hpp"
#include "bfc/verify.hpp"
