#include "skewlab/catalog.hpp"

#include <memory>

namespace skewlab {

std::vector<Instance> shipped_instances() {
  std::vector<Instance> out;
  for (const double alpha : {0.5, 1.0, 3.0}) {
    auto m = make_azzalini(alpha);
    out.push_back({m->describe(), m});
  }
  for (const auto& [p1, p2] : {std::pair{2.0, 2.0}, {1.5, 3.0}, {5.0, 1.2}}) {
    auto m = std::make_shared<OrderStatistics>(p1, p2);
    out.push_back({m->describe(), m});
  }
  for (const double gamma : {0.25, 0.5, 2.0, 4.0}) {
    auto m = std::make_shared<MarshallOlkin>(gamma);
    out.push_back({m->describe(), m});
  }
  for (const double gamma : {-0.5, 0.3}) {
    auto m = TwoPiece::epsilon_skew(gamma);
    out.push_back({m->describe(), m});
  }
  return out;
}

}  // namespace skewlab
