#pragma once

// Umbrella header.

#include "affine_weyl.hpp"
#include "exact_poly.hpp"
#include "genfun.hpp"
#include "json_io.hpp"
#include "localization.hpp"
#include "poset.hpp"
#include "qpoly.hpp"
#include "richardson.hpp"
#include "root_system.hpp"
#include "weyl_group.hpp"
