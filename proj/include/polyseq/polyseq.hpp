#pragma once

#include <polyseq/rational.hpp>
#include <polyseq/series.hpp>
#include <polyseq/biseries.hpp>
#include <polyseq/sequences.hpp>
#include <polyseq/families.hpp>
#include <polyseq/symmetrized.hpp>
#include <polyseq/congruence.hpp>
#include <polyseq/identities.hpp>
#include <polyseq/oracle.hpp>
#include <polyseq/table.hpp>
