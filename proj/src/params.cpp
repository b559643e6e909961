#include "leroy/params.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace leroy {

namespace {
void validate(const std::vector<ParamTriple>& triples) {
  if (triples.empty()) {
    throw std::invalid_argument("LeRoyParams: at least one (alpha,beta,gamma) triple required");
  }
  for (const ParamTriple& t : triples) {
    const bool ok = std::isfinite(t.alpha) && std::isfinite(t.beta) &&
                    std::isfinite(t.gamma) && t.alpha > 0.0 && t.beta > 0.0 &&
                    t.gamma > 0.0;
    if (!ok) {
      throw std::invalid_argument(
          "LeRoyParams: alpha, beta, gamma must all be finite and > 0");
    }
  }
}
}  // namespace

LeRoyParams::LeRoyParams(std::vector<ParamTriple> triples)
    : triples_(std::move(triples)) {
  validate(triples_);
}

LeRoyParams::LeRoyParams(double alpha, double beta, double gamma)
    : triples_{{alpha, beta, gamma}} {
  validate(triples_);
}

LeRoyParams::LeRoyParams(std::initializer_list<ParamTriple> triples)
    : triples_(triples) {
  validate(triples_);
}

bool LeRoyParams::operator==(const LeRoyParams& other) const {
  if (triples_.size() != other.triples_.size()) return false;
  for (std::size_t i = 0; i < triples_.size(); ++i) {
    if (triples_[i].alpha != other.triples_[i].alpha ||
        triples_[i].beta != other.triples_[i].beta ||
        triples_[i].gamma != other.triples_[i].gamma) {
      return false;
    }
  }
  return true;
}

}  // namespace leroy
