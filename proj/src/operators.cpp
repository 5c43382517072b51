#include "jackideal/operators.hpp"

namespace jackideal {

void OperatorTag::validate(int n) const {
  auto bad = [&](const std::string& why) { throw std::invalid_argument(to_string() + ": " + why); };
  switch (kind) {
    case Kind::Exchange:
      if (i < 0 || j < 0 || i >= n || j >= n || i == j) bad("requires distinct indices in [0, n)");
      break;
    case Kind::Dunkl:
    case Kind::Cherednik:
      if (i < 0 || i >= n) bad("index out of range");
      break;
    case Kind::L:
      if (m < -1) bad("requires m >= -1");
      break;
    case Kind::W:
      if (t < 2) bad("requires t >= 2");
      if (m < -t + 1) bad("requires m >= -t+1");
      break;
    case Kind::MulPowerSum:
      if (m < 1) bad("requires m >= 1");
      break;
    case Kind::Sekiguchi:
    case Kind::Hamiltonian:
      break;
  }
}

int OperatorTag::degree_shift() const {
  switch (kind) {
    case Kind::Exchange:
    case Kind::Cherednik:
    case Kind::Sekiguchi:
    case Kind::Hamiltonian: return 0;
    case Kind::Dunkl: return -1;
    case Kind::L:
    case Kind::W:
    case Kind::MulPowerSum: return m;
  }
  return 0;
}

std::string OperatorTag::to_string() const {
  switch (kind) {
    case Kind::Exchange: return "K(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::Dunkl: return "Dunkl(" + std::to_string(i) + ")";
    case Kind::Cherednik: return "Cherednik(" + std::to_string(i) + ")";
    case Kind::Sekiguchi: return "Sekiguchi";
    case Kind::Hamiltonian: return "H";
    case Kind::L: return "l_" + std::to_string(m);
    case Kind::W: return "w^(" + std::to_string(t) + ")_" + std::to_string(m);
    case Kind::MulPowerSum: return "p_" + std::to_string(m);
  }
  return "?";
}

}  // namespace jackideal
