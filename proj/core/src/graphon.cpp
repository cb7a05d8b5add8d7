#include "graphonlab/graphon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphonlab/error.hpp"

namespace graphonlab {

namespace {

bool in_unit_interval(const Scalar& x) { return Scalar(0) <= x && x <= Scalar(1); }

}  // namespace

std::vector<std::vector<Scalar>> StepGraphon::value_matrix() const {
  const std::size_t q = parts_.size();
  std::vector<std::vector<Scalar>> rows(q);
  for (std::size_t i = 0; i < q; ++i) {
    rows[i].assign(values_.begin() + static_cast<std::ptrdiff_t>(i * q),
                   values_.begin() + static_cast<std::ptrdiff_t>((i + 1) * q));
  }
  return rows;
}

bool operator==(const StepGraphon& a, const StepGraphon& b) {
  return a.exact_ == b.exact_ && a.parts_ == b.parts_ && a.values_ == b.values_;
}

StepGraphon validate_graphon(std::vector<Scalar> parts, std::vector<std::vector<Scalar>> values) {
  const std::size_t q = parts.size();
  if (q == 0) throw Error(Errc::MalformedGraphon, "graphon needs at least one part");
  if (values.size() != q) throw Error(Errc::MalformedGraphon, "values must have one row per part");
  for (const auto& row : values) {
    if (row.size() != q) throw Error(Errc::MalformedGraphon, "values must be a square q x q matrix");
  }

  bool exact = std::all_of(parts.begin(), parts.end(), [](const Scalar& s) { return s.is_exact(); });
  for (const auto& row : values) {
    exact = exact && std::all_of(row.begin(), row.end(), [](const Scalar& s) { return s.is_exact(); });
  }

  StepGraphon W;
  W.exact_ = exact;
  W.parts_.reserve(q);
  W.values_.reserve(q * q);

  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const Scalar& v = values[i][j];
      if (!in_unit_interval(v)) {
        throw Error(Errc::ValueOutOfRange, "value[" + std::to_string(i) + "][" + std::to_string(j) +
                                               "] = " + v.str() + " is outside [0,1]");
      }
      if (!(v == values[j][i])) {
        throw Error(Errc::AsymmetricValues, "value[" + std::to_string(i) + "][" + std::to_string(j) +
                                                "] != value[" + std::to_string(j) + "][" +
                                                std::to_string(i) + "]");
      }
      W.values_.push_back(exact ? v : to_floating(v));
    }
  }

  Scalar total = exact ? Scalar(0) : Scalar(0.0);
  for (std::size_t i = 0; i < q; ++i) {
    if (parts[i] <= Scalar(0)) {
      throw Error(Errc::NonpositiveMeasure, "part " + std::to_string(i) + " has measure " + parts[i].str());
    }
    total += parts[i];
  }
  if (exact) {
    if (!(total == Scalar(1))) throw Error(Errc::MeasuresDontSumToOne, "measures sum to " + total.str());
    W.parts_ = std::move(parts);
  } else {
    const double sum = total.to_double();
    if (std::abs(sum - 1.0) > kMeasureSumTolerance) {
      throw Error(Errc::MeasuresDontSumToOne, "measures sum to " + total.str());
    }
    for (const auto& p : parts) W.parts_.emplace_back(p.to_double() / sum);
  }
  return W;
}

StepGraphon constant_graphon(const Scalar& p) {
  const Scalar one = p.is_exact() ? Scalar(1) : Scalar(1.0);
  return validate_graphon({one}, {{p}});
}

StepGraphon refine_part(const StepGraphon& W, std::size_t i, const Scalar& fraction) {
  if (!(Scalar(0) < fraction && fraction < Scalar(1))) {
    throw Error(Errc::BadFraction, "fraction must lie strictly between 0 and 1, got " + fraction.str());
  }
  const std::size_t q = W.part_count();
  if (i >= q) throw Error(Errc::BadIndex, "part index " + std::to_string(i) + " out of range");

  // New part i+1 is the second half of the split; indices above shift by one.
  auto source = [i](std::size_t k) { return k <= i ? k : k - 1; };
  std::vector<Scalar> parts;
  for (std::size_t k = 0; k <= q; ++k) {
    if (k == i) {
      parts.push_back(W.part(i) * fraction);
    } else if (k == i + 1) {
      parts.push_back(W.part(i) * (Scalar(1) - fraction));
    } else {
      parts.push_back(W.part(source(k)));
    }
  }
  std::vector<std::vector<Scalar>> values(q + 1, std::vector<Scalar>(q + 1));
  for (std::size_t a = 0; a <= q; ++a) {
    for (std::size_t b = 0; b <= q; ++b) values[a][b] = W.value(source(a), source(b));
  }
  return validate_graphon(std::move(parts), std::move(values));
}

StepGraphon permute_parts(const StepGraphon& W, std::span<const std::size_t> perm) {
  const std::size_t q = W.part_count();
  if (perm.size() != q) throw Error(Errc::NotAPermutation, "permutation has the wrong length");
  std::vector<bool> seen(q, false);
  for (std::size_t target : perm) {
    if (target >= q || seen[target]) throw Error(Errc::NotAPermutation, "not a bijection on parts");
    seen[target] = true;
  }
  std::vector<Scalar> parts(q);
  std::vector<std::vector<Scalar>> values(q, std::vector<Scalar>(q));
  for (std::size_t a = 0; a < q; ++a) {
    parts[perm[a]] = W.part(a);
    for (std::size_t b = 0; b < q; ++b) values[perm[a]][perm[b]] = W.value(a, b);
  }
  return validate_graphon(std::move(parts), std::move(values));
}

bool is_constant(const StepGraphon& W, const Scalar& p, double tol) {
  const std::size_t q = W.part_count();
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const Scalar& v = W.value(i, j);
      if (v.is_exact() && p.is_exact()) {
        if (!(v == p)) return false;
      } else if (std::abs(v.to_double() - p.to_double()) > tol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace graphonlab
