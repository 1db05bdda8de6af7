#include <doctest.h>

#include "support.hpp"
