#pragma once

#include "ptol/amicability.hpp"
#include "ptol/element_set.hpp"
#include "ptol/enumeration.hpp"
#include "ptol/poset.hpp"
#include "ptol/relation.hpp"
#include "ptol/report.hpp"
#include "ptol/text_format.hpp"
#include "ptol/tolerance.hpp"
#include "ptol/verdict.hpp"
