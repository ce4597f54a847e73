#pragma once

#include "swt/crystallizer.hpp"
#include "swt/gt_pattern.hpp"
#include "swt/pattern_calculus.hpp"
#include "swt/radical.hpp"
#include "swt/serialize.hpp"
#include "swt/tableaux.hpp"
#include "swt/text_format.hpp"
#include "swt/transform.hpp"
