#pragma once

#include "cayley/abelian.hpp"
#include "cayley/antichain.hpp"
#include "cayley/dot.hpp"
#include "cayley/encoding.hpp"
#include "cayley/errors.hpp"
#include "cayley/group.hpp"
#include "cayley/houghton.hpp"
#include "cayley/houghton_words.hpp"
#include "cayley/metric.hpp"
#include "cayley/registry.hpp"
#include "cayley/report.hpp"
#include "cayley/sym_support.hpp"
#include "cayley/word.hpp"
