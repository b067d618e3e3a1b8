#pragma once

#include "qsym/compare.hpp"
#include "qsym/context.hpp"
#include "qsym/lassalle.hpp"
#include "qsym/ledger.hpp"
#include "qsym/oracle.hpp"
#include "qsym/partition.hpp"
#include "qsym/raising.hpp"
#include "qsym/report.hpp"
#include "qsym/scalar.hpp"
#include "qsym/series.hpp"
#include "qsym/symfunc.hpp"
#include "qsym/theta.hpp"
