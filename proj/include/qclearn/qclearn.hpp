#pragma once

#include "qclearn/amplify.hpp"
#include "qclearn/analysis.hpp"
#include "qclearn/concepts.hpp"
#include "qclearn/csv.hpp"
#include "qclearn/errors.hpp"
#include "qclearn/group_algebra.hpp"
#include "qclearn/measurement.hpp"
#include "qclearn/numkit.hpp"
#include "qclearn/rng.hpp"
