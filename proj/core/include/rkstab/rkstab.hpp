#pragma once

#include "rkstab/classify.hpp"
#include "rkstab/energy.hpp"
#include "rkstab/matrix.hpp"
#include "rkstab/polynomial.hpp"
#include "rkstab/presets.hpp"
#include "rkstab/rational.hpp"
#include "rkstab/tableau_io.hpp"
#include "rkstab/verify.hpp"
