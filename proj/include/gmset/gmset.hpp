#ifndef GMSET_GMSET_HPP
#define GMSET_GMSET_HPP

// Umbrella header.

#include "fields.hpp"
#include "indices.hpp"
#include "io.hpp"
#include "msetops.hpp"
#include "signal.hpp"
#include "signs.hpp"
#include "sliding.hpp"
#include "stats.hpp"

#endif // GMSET_GMSET_HPP
