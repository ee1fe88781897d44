#pragma once

#include "utd/bench.hpp"
#include "utd/dawg.hpp"
#include "utd/dawg_matcher.hpp"
#include "utd/dp_matcher.hpp"
#include "utd/fasta.hpp"
#include "utd/oracle.hpp"
#include "utd/position_set.hpp"
#include "utd/seqcore.hpp"
