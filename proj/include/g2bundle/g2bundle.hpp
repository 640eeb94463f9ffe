#pragma once

#include "g2bundle/census.hpp"
#include "g2bundle/coset_enumeration.hpp"
#include "g2bundle/errors.hpp"
#include "g2bundle/group_word.hpp"
#include "g2bundle/homology.hpp"
#include "g2bundle/mcg_action.hpp"
#include "g2bundle/presentation.hpp"
#include "g2bundle/rank.hpp"
#include "g2bundle/symmetric_quotient.hpp"
#include "g2bundle/table1.hpp"
#include "g2bundle/tietze.hpp"
#include "g2bundle/twist_word.hpp"
