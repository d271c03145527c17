#pragma once

#include "ruledforms/error.hpp"
#include "ruledforms/curve_top.hpp"
#include "ruledforms/pic_symbolic.hpp"
#include "ruledforms/presentation.hpp"
#include "ruledforms/topology.hpp"
#include "ruledforms/classify.hpp"
