#include "bkm/errors.hpp"

namespace bkm {

IllConditioned::IllConditioned(const std::string& what, double condition_estimate)
    : std::runtime_error(what), condition_estimate_(condition_estimate) {}

}  // namespace bkm
