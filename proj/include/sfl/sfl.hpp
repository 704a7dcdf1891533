#pragma once

// Umbrella header: exact invariants of small Seifert fibered spaces.

#include "sfl/rational.hpp"
#include "sfl/exactmath.hpp"
#include "sfl/matrix.hpp"
#include "sfl/farey.hpp"
#include "sfl/plumbing.hpp"
#include "sfl/contact.hpp"
#include "sfl/qhb.hpp"
#include "sfl/obstruct.hpp"
#include "sfl/serialize.hpp"
