#include "edgesums/value_set.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace edgesums {

ValueSet::BuildResult ValueSet::build(std::vector<BigRat> raw) {
    if (raw.empty()) throw std::invalid_argument("ValueSet: empty input");

    // Sort input positions by value, then walk runs of equal values.
    std::vector<std::uint32_t> order(raw.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&raw](std::uint32_t a, std::uint32_t b) { return raw[a] < raw[b]; });

    BuildResult result;
    result.index_of_input.assign(raw.size(), 0u);
    std::vector<BigRat>& values = result.set.values_;
    values.reserve(raw.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const BigRat& v = raw[order[i]];
        if (values.empty() || values.back() != v) {
            values.push_back(v);
        } else {
            ++result.collisions;
        }
        result.index_of_input[order[i]] = static_cast<std::uint32_t>(values.size() - 1);
    }
    result.set.rebuild_index();
    return result;
}

void ValueSet::rebuild_index() {
    index_.clear();
    index_.reserve(values_.size() * 2);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        index_.emplace(values_[i], static_cast<std::uint32_t>(i));
    }
}

std::optional<std::uint32_t> ValueSet::index_of(const BigRat& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool ValueSet::contains_zero() const {
    return contains(BigRat(0));
}

mpz_class ValueSet::lcm_of_denominators() const {
    mpz_class acc = 1;
    for (const BigRat& v : values_) {
        mpz_class l;
        mpz_class d = v.den();
        mpz_lcm(l.get_mpz_t(), acc.get_mpz_t(), d.get_mpz_t());
        acc = l;
    }
    return acc;
}

ValueSet ValueSet::scaled(const BigRat& factor) const {
    if (factor.is_zero()) throw std::invalid_argument("ValueSet::scaled: zero factor");
    std::vector<BigRat> scaled_values;
    scaled_values.reserve(values_.size());
    for (const BigRat& v : values_) scaled_values.push_back(v * factor);
    BuildResult r = build(std::move(scaled_values));
    // Multiplication by a nonzero rational is injective.
    if (r.collisions != 0) throw std::logic_error("ValueSet::scaled: cardinality changed");
    return std::move(r.set);
}

void ValueSet::write(std::ostream& out) const {
    for (const BigRat& v : values_) {
        out << v.fraction_str() << '\n';
    }
}

ValueSet ValueSet::read(std::istream& in) {
    std::vector<BigRat> raw;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        raw.push_back(BigRat::from_string(line));
    }
    if (raw.empty()) throw std::runtime_error("ValueSet::read: no values");
    return std::move(build(std::move(raw)).set);
}

}  // namespace edgesums
