#pragma once

#include "mzeta/admissible.hpp"
#include "mzeta/bipoly.hpp"
#include "mzeta/bipoly_json.hpp"
#include "mzeta/error.hpp"
#include "mzeta/perm_core.hpp"
#include "mzeta/polyzeta.hpp"
#include "mzeta/signed.hpp"
#include "mzeta/types.hpp"
#include "mzeta/verify.hpp"
