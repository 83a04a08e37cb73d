#include "chainwarn/sweeps.hpp"

namespace chainwarn::sweeps {
// implementations follow
}
