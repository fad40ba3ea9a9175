#include "ninefields/field.hpp"
