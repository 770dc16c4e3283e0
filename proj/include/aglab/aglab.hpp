#pragma once

#include "aglab/congruences.hpp"
#include "aglab/enumerate.hpp"
#include "aglab/extended.hpp"
#include "aglab/fixtures.hpp"
#include "aglab/identities.hpp"
#include "aglab/ideals.hpp"
#include "aglab/io.hpp"
#include "aglab/isomorphism.hpp"
#include "aglab/serialize.hpp"
#include "aglab/table.hpp"
#include "aglab/theorems.hpp"
#include "aglab/verify.hpp"
