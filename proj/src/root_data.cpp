#include "glab/root_data.hpp"

namespace glab {

RootDatum root_datum_a(long rank) {
  if (rank < 1) throw std::invalid_argument("root_datum_a: rank must be >= 1");
  RootDatum d;
  d.type_label = "A" + std::to_string(rank);
  d.rank_ = rank;
  // positive roots alpha_{i..j} = alpha_i + ... + alpha_j, 0 <= i <= j < rank;
  // simple root alpha_k in fundamental coordinates is the Cartan column
  // 2 e_k - e_{k-1} - e_{k+1}.
  for (long i = 0; i < rank; ++i)
    for (long j = i; j < rank; ++j) {
      std::vector<long> coords(rank, 0);
      for (long k = i; k <= j; ++k) {
        coords[k] += 2;
        if (k > 0) coords[k - 1] -= 1;
        if (k + 1 < rank) coords[k + 1] -= 1;
      }
      d.positive_roots.push_back(Weight(std::move(coords)));
      // <gamma, alpha_{i..j}^vee> = gamma_i + ... + gamma_j
      std::vector<long> functional(rank, 0);
      for (long k = i; k <= j; ++k) functional[k] = 1;
      d.positive_coroot_functionals.push_back(std::move(functional));
    }
  return d;
}

long grosshans_height(const RootDatum& d, const Weight& w) {
  if (w.rank() != d.rank()) throw std::invalid_argument("grosshans_height: rank mismatch");
  long h = 0;
  for (const auto& f : d.positive_coroot_functionals)
    for (long k = 0; k < d.rank(); ++k) h += f[k] * w.coords[k];
  return h;
}

Weight steinberg_weight(const RootDatum& d, long r, const Int& p) {
  if (r < 1) throw std::invalid_argument("steinberg_weight: r must be positive");
  if (p == 0) return d.rho() * r;
  if (p < 0 || !is_prime(p))
    throw std::invalid_argument("steinberg_weight: characteristic must be 0 or prime");
  Int scale = pow_int(p, static_cast<unsigned long>(r)) - 1;
  if (!scale.fits_slong_p())
    throw std::invalid_argument("steinberg_weight: p^r - 1 out of range");
  return d.rho() * scale.get_si();
}

}  // namespace glab
