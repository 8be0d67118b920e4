#pragma once

#include "rooksum/dalg.hpp"
#include "rooksum/errors.hpp"
#include "rooksum/field.hpp"
#include "rooksum/golden.hpp"
#include "rooksum/group_algebra.hpp"
#include "rooksum/ideals.hpp"
#include "rooksum/matrix.hpp"
#include "rooksum/perm.hpp"
#include "rooksum/polynomial.hpp"
#include "rooksum/rational.hpp"
#include "rooksum/reference_tables.hpp"
#include "rooksum/report.hpp"
#include "rooksum/reps.hpp"
#include "rooksum/rook.hpp"
#include "rooksum/rook_checks.hpp"
#include "rooksum/row_sums.hpp"
#include "rooksum/serialize.hpp"
#include "rooksum/set_decomposition.hpp"
#include "rooksum/span.hpp"
#include "rooksum/subset.hpp"
