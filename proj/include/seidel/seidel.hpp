#ifndef SEIDEL_SEIDEL_HPP
#define SEIDEL_SEIDEL_HPP

#include "seidel/graph.hpp"
#include "seidel/switching.hpp"
#include "seidel/iso.hpp"
#include "seidel/invariants.hpp"
#include "seidel/iss.hpp"
#include "seidel/enumerate.hpp"
#include "seidel/classes.hpp"
#include "seidel/generators.hpp"
#include "seidel/verify.hpp"

#endif // SEIDEL_SEIDEL_HPP
