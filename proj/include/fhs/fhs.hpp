#pragma once

#include "fhs/bounds.hpp"
#include "fhs/catalog.hpp"
#include "fhs/correlation.hpp"
#include "fhs/error.hpp"
#include "fhs/extension.hpp"
#include "fhs/galois.hpp"
#include "fhs/io.hpp"
#include "fhs/labeling.hpp"
#include "fhs/numtheory.hpp"
#include "fhs/one_coincidence.hpp"
#include "fhs/plan.hpp"
#include "fhs/sequence_set.hpp"
