#ifndef ROBIN_ROBIN_HPP
#define ROBIN_ROBIN_HPP

#include "robin/arith.hpp"
#include "robin/asymptotics.hpp"
#include "robin/bounded_real.hpp"
#include "robin/cascade.hpp"
#include "robin/constants.hpp"
#include "robin/criteria.hpp"
#include "robin/enumerate.hpp"
#include "robin/errors.hpp"
#include "robin/factorization.hpp"
#include "robin/prime_table.hpp"
#include "robin/scan.hpp"

#endif  // ROBIN_ROBIN_HPP
