#ifndef LEXSEM_LEXSEM_HPP
#define LEXSEM_LEXSEM_HPP

#include "lexsem/compound.hpp"
#include "lexsem/corpus.hpp"
#include "lexsem/coverage.hpp"
#include "lexsem/disambig.hpp"
#include "lexsem/lexnet.hpp"
#include "lexsem/normalize.hpp"
#include "lexsem/relations.hpp"
#include "lexsem/report.hpp"
#include "lexsem/sections.hpp"
#include "lexsem/semtag.hpp"

#endif
