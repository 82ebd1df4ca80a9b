#pragma once

#include "bigint.hpp"
#include "bijections.hpp"
#include "closed_forms.hpp"
#include "composition.hpp"
#include "generating_functions.hpp"
#include "named_sequences.hpp"
#include "partition.hpp"
#include "partition_theorems.hpp"
#include "sequence.hpp"
#include "series.hpp"
#include "verify.hpp"
