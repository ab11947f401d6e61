#pragma once

#include "imbal/checks.hpp"
#include "imbal/core.hpp"
#include "imbal/error.hpp"
#include "imbal/graph_io.hpp"
#include "imbal/imbalance_set.hpp"
#include "imbal/oracle.hpp"
#include "imbal/realization.hpp"
#include "imbal/transforms.hpp"
