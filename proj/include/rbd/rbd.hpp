#pragma once

#include "rbd/canonical.hpp"
#include "rbd/diagram.hpp"
#include "rbd/laws.hpp"
#include "rbd/parser.hpp"
#include "rbd/reliability.hpp"
