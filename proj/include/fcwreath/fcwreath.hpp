#pragma once

#include "fcwreath/dihedral.hpp"
#include "fcwreath/group.hpp"
#include "fcwreath/lamplighter.hpp"
#include "fcwreath/layers.hpp"
#include "fcwreath/params.hpp"
#include "fcwreath/parse.hpp"
#include "fcwreath/verify.hpp"
#include "fcwreath/walk.hpp"
#include "fcwreath/word.hpp"
