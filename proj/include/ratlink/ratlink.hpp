#pragma once

#include "ratlink/diagram.hpp"
#include "ratlink/homfly.hpp"
#include "ratlink/laurent.hpp"
#include "ratlink/rational.hpp"
