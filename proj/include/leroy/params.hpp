#ifndef LEROY_PARAMS_HPP
#define LEROY_PARAMS_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace leroy {

/// One (alpha, beta, gamma) index of a Le Roy type function.
struct ParamTriple {
  double alpha;
  double beta;
  double gamma;
};

/// Parameter set of the 3n-parameter Le Roy type function. A single triple
/// is the 3-parameter function. Immutable after construction; every field
/// must be strictly positive (the entirety assumptions), enforced here so
/// downstream code never re-validates.
class LeRoyParams {
 public:
  explicit LeRoyParams(std::vector<ParamTriple> triples);
  LeRoyParams(double alpha, double beta, double gamma);
  LeRoyParams(std::initializer_list<ParamTriple> triples);

  const std::vector<ParamTriple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  const ParamTriple& front() const { return triples_.front(); }

  bool operator==(const LeRoyParams& other) const;

 private:
  std::vector<ParamTriple> triples_;
};

}  // namespace leroy

#endif  // LEROY_PARAMS_HPP
