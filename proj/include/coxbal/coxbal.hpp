#pragma once

#include "coxbal/bitset.hpp"
#include "coxbal/bruhat.hpp"
#include "coxbal/cache.hpp"
#include "coxbal/criteria.hpp"
#include "coxbal/error.hpp"
#include "coxbal/ideals.hpp"
#include "coxbal/parabolic.hpp"
#include "coxbal/report_io.hpp"
#include "coxbal/rootdata.hpp"
#include "coxbal/signed_permutation.hpp"
#include "coxbal/tables.hpp"
#include "coxbal/weyl.hpp"
