#ifndef SLEECC_SLEECC_HPP
#define SLEECC_SLEECC_HPP

#include "sleecc/atom.hpp"
#include "sleecc/cnf.hpp"
#include "sleecc/compiler.hpp"
#include "sleecc/dimacs.hpp"
#include "sleecc/errors.hpp"
#include "sleecc/formula.hpp"
#include "sleecc/horn.hpp"
#include "sleecc/logic_program.hpp"
#include "sleecc/parser.hpp"
#include "sleecc/query.hpp"
#include "sleecc/reduction.hpp"
#include "sleecc/ruleset.hpp"
#include "sleecc/solver.hpp"

#endif // SLEECC_SLEECC_HPP
