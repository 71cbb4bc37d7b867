#pragma once

#include <vector>

#include "sheafkit/morphism.hpp"

namespace sheafkit {

/// Impulse-response taps h(0..N-1) acting on values of dimension value_dim.
/// The tap sequence length defines N; trailing zeros are kept.
struct FilterSpec {
    std::vector<Rational> taps;
    std::size_t value_dim = 1;

    std::size_t length() const { return taps.size(); }

    friend bool operator==(const FilterSpec& a, const FilterSpec& b) {
        return a.taps == b.taps && a.value_dim == b.value_dim;
    }
};

/// The filter realized as a span of morphisms: input <- register -> output.
/// s1 and s3 are single-slot track sheaves over the window, s2 the N-slot
/// register sheaf. p reads the newest register slot; lambda applies the
/// tap-weighted sum.
struct FilterEncoding {
    FilterSpec spec;
    Window window;
    Sheaf s1, s2, s3;
    Morphism p;       // register -> input track
    Morphism lambda;  // register -> output track

    /// The register section carrying x[i..i+N-1] (oldest first) over the
    /// i-th window vertex and the N-1 overlapping values over each edge.
    /// The input must supply window length + N - 1 values: the window's own
    /// samples plus N - 1 of leading history (valid-window semantics, no
    /// padding).
    Section lift_input(const std::vector<RatVec>& x) const;
    Section lift_input(const std::vector<Rational>& x) const;

    /// Output over the window: the tap map applied facewise to
    /// lift_input(x). Equals the defining convolution sum restricted to
    /// fully covered windows.
    std::vector<RatVec> apply(const std::vector<RatVec>& x) const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const;
};

/// Builds the encoding over the given window; the result passes sheaf and
/// morphism validation by construction.
FilterEncoding encode(const FilterSpec& spec, const Window& window);

/// Direct evaluation of the defining convolution sum on valid windows; the
/// independent reference for FilterEncoding::apply. Produces
/// x.size() - taps.size() + 1 outputs (none when the input is shorter than
/// the taps).
std::vector<RatVec> convolve_oracle(const std::vector<Rational>& taps, const std::vector<RatVec>& x);
std::vector<Rational> convolve_oracle(const std::vector<Rational>& taps, const std::vector<Rational>& x);

}  // namespace sheafkit
