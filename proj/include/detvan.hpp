#pragma once

#include "detvan/errors.hpp"
#include "detvan/rational.hpp"
#include "detvan/monomial.hpp"
#include "detvan/polynomial.hpp"
#include "detvan/univariate.hpp"
#include "detvan/exprparse.hpp"
#include "detvan/ideal.hpp"
#include "detvan/singularity.hpp"
#include "detvan/abelian.hpp"
#include "detvan/detmodel.hpp"
#include "detvan/pipeline.hpp"
#include "detvan/model_file.hpp"
#include "detvan/report_json.hpp"
