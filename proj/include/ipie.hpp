#pragma once

#include "ipie/algebraic.hpp"
#include "ipie/certify.hpp"
#include "ipie/error.hpp"
#include "ipie/factor.hpp"
#include "ipie/game.hpp"
#include "ipie/groebner.hpp"
#include "ipie/interval.hpp"
#include "ipie/io.hpp"
#include "ipie/kll.hpp"
#include "ipie/lattice.hpp"
#include "ipie/linalg.hpp"
#include "ipie/multipoly.hpp"
#include "ipie/newton.hpp"
#include "ipie/oracle.hpp"
#include "ipie/rational.hpp"
#include "ipie/realsolve.hpp"
#include "ipie/solver.hpp"
#include "ipie/unipoly.hpp"
