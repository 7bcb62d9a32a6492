#pragma once

#include "qsym/context.hpp"
#include "qsym/residual.hpp"
#include "qsym/sampler.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qsym {

using ParamList = std::vector<std::pair<std::string, std::string>>;

struct TrialOutcome {
  Residual residual;
  ParamList params;  // drawn parameters, as full-precision decimal strings
};

// Draws its parameters from the sampler (q is already fixed in the context)
// and returns the worst residual over every entry the identity compares.
using Evaluator = std::function<TrialOutcome(const QContext&, Sampler&)>;

struct IdentityDescriptor {
  std::string id;
  std::string reference;
  int default_trials = 10;
  Evaluator evaluate;
};

// Every registered identity, in listing order. Ids are unique.
const std::vector<IdentityDescriptor>& registry();

const IdentityDescriptor* find_identity(const std::string& id);

}  // namespace qsym
