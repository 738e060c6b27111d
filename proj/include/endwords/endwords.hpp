#pragma once

// Everything except cli.hpp, which additionally needs CLI11 on the
// include path.

#include "endwords/classify.hpp"
#include "endwords/concrete.hpp"
#include "endwords/ends.hpp"
#include "endwords/errors.hpp"
#include "endwords/graph.hpp"
#include "endwords/letters.hpp"
#include "endwords/parse.hpp"
#include "endwords/reduce.hpp"
#include "endwords/reduction.hpp"
#include "endwords/schedule.hpp"
#include "endwords/spanning.hpp"
#include "endwords/star.hpp"
#include "endwords/trace.hpp"
#include "endwords/verdict.hpp"
#include "endwords/word_family.hpp"
