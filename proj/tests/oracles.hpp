#pragma once
#include "ftft/reference.hpp"

namespace oracle = ftft::reference;
