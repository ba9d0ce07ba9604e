#pragma once

#include "osbf/bench.hpp"
#include "osbf/core.hpp"
#include "osbf/filters2d.hpp"
#include "osbf/filters3d.hpp"
#include "osbf/integral.hpp"
#include "osbf/io.hpp"
#include "osbf/metrics.hpp"
#include "osbf/parallel.hpp"
#include "osbf/synth.hpp"
