#pragma once

#include "unitdim/error.hpp"
#include "unitdim/graph.hpp"
#include "unitdim/canonical.hpp"
#include "unitdim/families.hpp"
#include "unitdim/minors.hpp"
#include "unitdim/geometry.hpp"
#include "unitdim/radius_profile.hpp"
#include "unitdim/embedder.hpp"
#include "unitdim/engine.hpp"
#include "unitdim/minimality.hpp"
#include "unitdim/tables.hpp"
#include "unitdim/io.hpp"
