#include "sheafkit/fir.hpp"

#include <string>
#include <utility>

#include "sheafkit/errors.hpp"

namespace sheafkit {

namespace {

std::vector<RatVec> wrap_scalars(const std::vector<Rational>& x) {
    std::vector<RatVec> out;
    out.reserve(x.size());
    for (const Rational& v : x) out.push_back(RatVec{v});
    return out;
}

std::vector<Rational> unwrap_scalars(const std::vector<RatVec>& x) {
    std::vector<Rational> out;
    out.reserve(x.size());
    for (const RatVec& v : x) out.push_back(v.front());
    return out;
}

}  // namespace

FilterEncoding encode(const FilterSpec& spec, const Window& window) {
    std::size_t n = spec.length();
    std::size_t d = spec.value_dim;
    if (n < 1) throw DimensionError("filter needs at least one tap");
    if (d < 1) throw DimensionError("filter needs a value dimension of at least 1");

    FilterEncoding enc;
    enc.spec = spec;
    enc.window = window;
    enc.s1 = grouping_sheaf(1, d, window);
    enc.s2 = grouping_sheaf(n, d, window);
    enc.s3 = enc.s1;

    // Newest-slot projection and the tap-weighted sum; slot k (oldest first)
    // carries weight taps[n-1-k].
    RationalMatrix newest(d, n * d);
    RationalMatrix weighted(d, n * d);
    for (std::size_t j = 0; j < d; ++j) {
        newest.at(j, (n - 1) * d + j) = 1;
        for (std::size_t k = 0; k < n; ++k) weighted.at(j, k * d + j) = spec.taps[n - 1 - k];
    }

    std::map<Face, RationalMatrix> p_comps, lambda_comps;
    for (std::int64_t v = window.first; v <= window.last; ++v) {
        p_comps[Face::vertex(v)] = newest;
        lambda_comps[Face::vertex(v)] = weighted;
    }
    enc.p = make_morphism(enc.s2, enc.s1, std::move(p_comps));
    enc.lambda = make_morphism(enc.s2, enc.s3, std::move(lambda_comps));
    return enc;
}

Section FilterEncoding::lift_input(const std::vector<RatVec>& x) const {
    std::size_t n = spec.length();
    std::size_t d = spec.value_dim;
    std::size_t t = window.vertex_count();
    if (x.size() != t + n - 1) {
        throw DimensionError("input must carry " + std::to_string(t + n - 1) + " values for a " +
                             std::to_string(t) + "-vertex window with " + std::to_string(n) + " taps, got " +
                             std::to_string(x.size()));
    }
    for (const RatVec& v : x) {
        if (v.size() != d) throw DimensionError("input value has the wrong dimension");
    }

    auto slots = [&](std::size_t from, std::size_t count) {
        RatVec value(count * d);
        for (std::size_t k = 0; k < count; ++k) {
            for (std::size_t j = 0; j < d; ++j) value[k * d + j] = x[from + k][j];
        }
        return value;
    };

    Section s;
    for (std::size_t i = 0; i < t; ++i) {
        std::int64_t v = window.first + static_cast<std::int64_t>(i);
        s.values[Face::vertex(v)] = slots(i, n);
        if (i + 1 < t) s.values[Face::edge(v, v + 1)] = slots(i + 1, n - 1);
    }
    return s;
}

Section FilterEncoding::lift_input(const std::vector<Rational>& x) const {
    if (spec.value_dim != 1) throw DimensionError("scalar input into a vector-valued filter");
    return lift_input(wrap_scalars(x));
}

std::vector<RatVec> FilterEncoding::apply(const std::vector<RatVec>& x) const {
    Section registers = lift_input(x);

    std::vector<RatVec> out;
    out.reserve(window.vertex_count());
    for (std::int64_t v = window.first; v <= window.last; ++v) {
        Face vf = Face::vertex(v);
        out.push_back(lambda.component.at(vf) * registers.at(vf));
    }
    return out;
}

std::vector<Rational> FilterEncoding::apply(const std::vector<Rational>& x) const {
    if (spec.value_dim != 1) throw DimensionError("scalar input into a vector-valued filter");
    return unwrap_scalars(apply(wrap_scalars(x)));
}

std::vector<RatVec> convolve_oracle(const std::vector<Rational>& taps, const std::vector<RatVec>& x) {
    std::size_t n = taps.size();
    if (n < 1) throw DimensionError("filter needs at least one tap");
    std::vector<RatVec> out;
    if (x.size() < n) return out;
    for (std::size_t pos = n - 1; pos < x.size(); ++pos) {
        RatVec y(x[pos].size());
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < y.size(); ++j) y[j] += taps[k] * x[pos - k][j];
        }
        out.push_back(std::move(y));
    }
    return out;
}

std::vector<Rational> convolve_oracle(const std::vector<Rational>& taps, const std::vector<Rational>& x) {
    return unwrap_scalars(convolve_oracle(taps, wrap_scalars(x)));
}

}  // namespace sheafkit
