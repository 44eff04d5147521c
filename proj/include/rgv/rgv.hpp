#pragma once

#include "rgv/blocks.hpp"
#include "rgv/center.hpp"
#include "rgv/character_table.hpp"
#include "rgv/classify.hpp"
#include "rgv/cocycles.hpp"
#include "rgv/config.hpp"
#include "rgv/error.hpp"
#include "rgv/fusion.hpp"
#include "rgv/graded_character.hpp"
#include "rgv/groups.hpp"
#include "rgv/gvduality.hpp"
#include "rgv/matrix.hpp"
#include "rgv/pointed.hpp"
#include "rgv/report.hpp"
#include "rgv/scalars.hpp"
