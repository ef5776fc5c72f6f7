#pragma once

#include "cablefloer/alexander_model.hpp"
#include "cablefloer/box_pairing.hpp"
#include "cablefloer/errors.hpp"
#include "cablefloer/f2_homology.hpp"
#include "cablefloer/grading_group.hpp"
#include "cablefloer/invariants.hpp"
#include "cablefloer/json_io.hpp"
#include "cablefloer/laurent_polynomial.hpp"
#include "cablefloer/pipeline.hpp"
#include "cablefloer/report.hpp"
#include "cablefloer/selfcheck.hpp"
#include "cablefloer/typea_pattern.hpp"
#include "cablefloer/typed_complement.hpp"
