// Umbrella header for the bandsmp library.

#ifndef BANDSMP_HPP_
#define BANDSMP_HPP_

#include "bandsmp/band.hpp"
#include "bandsmp/catalog.hpp"
#include "bandsmp/embedding.hpp"
#include "bandsmp/error.hpp"
#include "bandsmp/forbidden.hpp"
#include "bandsmp/io.hpp"
#include "bandsmp/power.hpp"
#include "bandsmp/quasi.hpp"
#include "bandsmp/reduction.hpp"
#include "bandsmp/smp.hpp"
#include "bandsmp/words.hpp"

#endif  // BANDSMP_HPP_
