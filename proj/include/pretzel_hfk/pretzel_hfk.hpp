// Umbrella header.
#pragma once

#include "pretzel_hfk/alexander.hpp"
#include "pretzel_hfk/bigraded_table.hpp"
#include "pretzel_hfk/hfk.hpp"
#include "pretzel_hfk/kauffman.hpp"
#include "pretzel_hfk/laurent_poly.hpp"
#include "pretzel_hfk/pretzel.hpp"
#include "pretzel_hfk/report.hpp"
#include "pretzel_hfk/smith.hpp"
#include "pretzel_hfk/wirtinger.hpp"
