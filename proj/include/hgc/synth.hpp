#pragma once

#include <cstddef>
#include <cstdint>

#include "hgc/dataset.hpp"

namespace hgc {

/// `classes` Gaussian classes in `features` dimensions with unit variance.
/// Class k (0-based) has mean k * separation on every feature, so
/// separation 0 makes the classes indistinguishable.
RawDataset gaussian_mixture(std::size_t classes, std::size_t features, std::size_t n_per_class,
                            double separation, std::uint64_t seed);

/// Two classes whose only signal is the sign agreement of two features.
///
/// Each signal feature has magnitude 1 + |N(0, 0.25)| and a sign that
/// alternates across units, so its marginal is the same for both classes.
/// "concordant" units share the sign on both signal features, "discordant"
/// units have opposite signs. `noise_features` standard-normal columns follow.
RawDataset interaction_only(std::size_t n_per_class, std::size_t noise_features,
                            std::uint64_t seed);

}  // namespace hgc
