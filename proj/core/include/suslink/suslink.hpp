#pragma once

#include "suslink/continued_fraction.hpp"
#include "suslink/error.hpp"
#include "suslink/integer.hpp"
#include "suslink/invariants.hpp"
#include "suslink/io.hpp"
#include "suslink/matrix.hpp"
#include "suslink/mero.hpp"
#include "suslink/nielsen.hpp"
#include "suslink/pipeline.hpp"
#include "suslink/plumbing_tree.hpp"
#include "suslink/power.hpp"
#include "suslink/rational.hpp"
#include "suslink/resolution.hpp"
#include "suslink/synth.hpp"
