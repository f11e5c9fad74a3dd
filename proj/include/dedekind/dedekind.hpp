#pragma once

#include "dedekind/constants.hpp"
#include "dedekind/dedekind_core.hpp"
#include "dedekind/diophantine.hpp"
#include "dedekind/error.hpp"
#include "dedekind/exact_arith.hpp"
#include "dedekind/moments.hpp"
#include "dedekind/parallel.hpp"
#include "dedekind/walum.hpp"
