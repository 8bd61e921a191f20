#pragma once

#include "ybe/brace.hpp"
#include "ybe/catalog.hpp"
#include "ybe/certificate.hpp"
#include "ybe/congruence.hpp"
#include "ybe/families.hpp"
#include "ybe/io.hpp"
#include "ybe/perm.hpp"
#include "ybe/perm_group.hpp"
#include "ybe/solution.hpp"
#include "ybe/structure_brace.hpp"
