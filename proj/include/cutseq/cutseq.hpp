#pragma once

// Umbrella header: factor and gap analysis of the cutting sequences with
// slope [0; d, d, d, ...], d >= 2.

#include "cutseq/classify.hpp"
#include "cutseq/error.hpp"
#include "cutseq/gaps.hpp"
#include "cutseq/kernel.hpp"
#include "cutseq/oracle.hpp"
#include "cutseq/positions.hpp"
#include "cutseq/signed_word.hpp"
#include "cutseq/substitution.hpp"
#include "cutseq/word.hpp"
