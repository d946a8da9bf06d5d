#pragma once

#include "symeq/arith.hpp"
#include "symeq/constructions.hpp"
#include "symeq/io.hpp"
#include "symeq/sequences.hpp"
#include "symeq/solver.hpp"
#include "symeq/symfunc.hpp"
#include "symeq/verify.hpp"
