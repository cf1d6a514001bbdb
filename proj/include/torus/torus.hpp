#pragma once

#include "torus/ring.hpp"
#include "torus/algebra.hpp"
#include "torus/grading.hpp"
#include "torus/tiling.hpp"
#include "torus/ainfty.hpp"
#include "torus/linalg.hpp"
#include "torus/hochschild.hpp"
#include "torus/cochain.hpp"
#include "torus/cobar.hpp"
