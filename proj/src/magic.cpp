#include "dihedral/magic.hpp"

namespace dihedral {

int mm_dimension(int n) {
  require_group_order(n);
  return n % 2 == 1 ? 2 * n - 1 : 2 * n - 2;
}

}  // namespace dihedral
