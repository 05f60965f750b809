#pragma once

// Umbrella header: the whole library.

#include "metablock/element.hpp"
#include "metablock/errors.hpp"
#include "metablock/fusion.hpp"
#include "metablock/invariants.hpp"
#include "metablock/modarith.hpp"
#include "metablock/oracle.hpp"
#include "metablock/params.hpp"
#include "metablock/proofs.hpp"
#include "metablock/report.hpp"
#include "metablock/structure.hpp"
#include "metablock/subgroup.hpp"
#include "metablock/verify.hpp"
#include "metablock/wide.hpp"
