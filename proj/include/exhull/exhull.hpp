#pragma once

#include "exhull/csv.hpp"
#include "exhull/generate.hpp"
#include "exhull/hull.hpp"
#include "exhull/log.hpp"
#include "exhull/oracle.hpp"
#include "exhull/point_set.hpp"
#include "exhull/projection.hpp"
#include "exhull/report.hpp"
#include "exhull/seeding.hpp"
#include "exhull/svg.hpp"
