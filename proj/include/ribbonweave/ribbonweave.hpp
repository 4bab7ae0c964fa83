#pragma once

// Umbrella header.

#include "partition.hpp"
#include "ribbon_ops.hpp"
#include "local_rules.hpp"
#include "tableaux.hpp"
#include "growth.hpp"
#include "characters.hpp"
#include "operators.hpp"
#include "extensions.hpp"
