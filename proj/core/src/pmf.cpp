#include "graphonlab/pmf.hpp"

#include <algorithm>
#include <cmath>

#include "graphonlab/error.hpp"

namespace graphonlab {

EdgeCountPMF::EdgeCountPMF(std::vector<Scalar> mass) : mass_(std::move(mass)) {
  if (mass_.empty()) throw Error(Errc::LengthMismatch, "pmf needs at least one entry");
  Scalar total(0);
  for (const auto& p : mass_) {
    if (p < Scalar(0)) throw Error(Errc::ValueOutOfRange, "negative probability " + p.str());
    total += p;
  }
  const bool ok = total.is_exact() ? total == Scalar(1)
                                   : std::abs(total.to_double() - 1.0) <= kPmfSumTolerance;
  if (!ok) throw Error(Errc::MeasuresDontSumToOne, "pmf sums to " + total.str());
}

bool EdgeCountPMF::is_exact() const {
  return std::all_of(mass_.begin(), mass_.end(), [](const Scalar& s) { return s.is_exact(); });
}

}  // namespace graphonlab
