#pragma once

#include "nekrasov/algebra/errors.hpp"
#include "nekrasov/algebra/factored_rational.hpp"
#include "nekrasov/algebra/linear_form.hpp"
#include "nekrasov/algebra/polynomial.hpp"
#include "nekrasov/algebra/qseries.hpp"
#include "nekrasov/algebra/rational.hpp"
#include "nekrasov/algebra/sampling.hpp"
#include "nekrasov/algebra/variables.hpp"
#include "nekrasov/blowup/euler.hpp"
#include "nekrasov/blowup/recursion.hpp"
#include "nekrasov/blowup/sampled.hpp"
#include "nekrasov/blowup/series.hpp"
#include "nekrasov/blowup/zhat.hpp"
#include "nekrasov/partitions/blowup_points.hpp"
#include "nekrasov/partitions/coroot.hpp"
#include "nekrasov/partitions/partition.hpp"
#include "nekrasov/partitions/tuple.hpp"
#include "nekrasov/plane/hilbert.hpp"
#include "nekrasov/plane/laurent.hpp"
#include "nekrasov/plane/partition_function.hpp"
#include "nekrasov/plane/weights.hpp"
#include "nekrasov/report/report.hpp"
#include "nekrasov/sw/blowup_limit.hpp"
#include "nekrasov/sw/extrapolation.hpp"
#include "nekrasov/sw/perturbative.hpp"
#include "nekrasov/sw/prepotential.hpp"
#include "nekrasov/util/parallel.hpp"
