#pragma once

#include "deckrecon/error.hpp"
#include "deckrecon/graph.hpp"
#include "deckrecon/named_graphs.hpp"
#include "deckrecon/graph6.hpp"
#include "deckrecon/cliques.hpp"
#include "deckrecon/canonical.hpp"
#include "deckrecon/deck.hpp"
#include "deckrecon/degree_recon.hpp"
#include "deckrecon/clique_recon.hpp"
#include "deckrecon/oracle.hpp"
#include "deckrecon/verify.hpp"
