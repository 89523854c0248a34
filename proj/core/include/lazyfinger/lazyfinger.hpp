#pragma once

#include "lazyfinger/cost.hpp"
#include "lazyfinger/decimal.hpp"
#include "lazyfinger/entropy.hpp"
#include "lazyfinger/error.hpp"
#include "lazyfinger/io.hpp"
#include "lazyfinger/multitree.hpp"
#include "lazyfinger/optimize.hpp"
#include "lazyfinger/prefix_table.hpp"
#include "lazyfinger/seqgen.hpp"
#include "lazyfinger/sequence.hpp"
#include "lazyfinger/tree.hpp"
#include "lazyfinger/types.hpp"
#include "lazyfinger/weights.hpp"
