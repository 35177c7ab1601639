#pragma once

#include "mvcolor/color.hpp"
#include "mvcolor/errors.hpp"
#include "mvcolor/image.hpp"
#include "mvcolor/netpbm.hpp"
#include "mvcolor/partition.hpp"
#include "mvcolor/report.hpp"
#include "mvcolor/tnorm.hpp"
