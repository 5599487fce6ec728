#pragma once

#include "resl/builders.hpp"
#include "resl/catalog.hpp"
#include "resl/census.hpp"
#include "resl/classify.hpp"
#include "resl/completion.hpp"
#include "resl/convergence.hpp"
#include "resl/derived.hpp"
#include "resl/enumerate.hpp"
#include "resl/filter.hpp"
#include "resl/identities.hpp"
#include "resl/io.hpp"
#include "resl/lattice.hpp"
#include "resl/morphism.hpp"
#include "resl/quotient.hpp"
#include "resl/quotient_suites.hpp"
#include "resl/report.hpp"
#include "resl/riecan.hpp"
#include "resl/scan.hpp"
#include "resl/state.hpp"
#include "resl/state_suites.hpp"
#include "resl/tnorm.hpp"
