#include "edgesums/oracle.hpp"

#include <stdexcept>

namespace edgesums::oracle {

namespace {

// Trial-division least prime factor; 0 marks u = 1 ("no prime factor").
std::uint64_t lpf_trial(std::uint64_t u) {
    for (std::uint64_t d = 2; d <= u; ++d) {
        if (u % d == 0) return d;
    }
    return 0;
}

std::uint64_t gcd_loop(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        const std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

void append_pair_values(std::vector<BigRat>& out, const BigRat& a, const BigRat& b, Mode mode) {
    switch (mode) {
        case Mode::kSum:
            out.push_back(a + b);
            break;
        case Mode::kProduct:
            out.push_back(a * b);
            break;
        case Mode::kRatio:
            out.push_back(a / b);
            out.push_back(b / a);
            break;
        case Mode::kDifference:
            out.push_back(a - b);
            out.push_back(b - a);
            break;
    }
}

}  // namespace

std::set<BigRat> distinct_edge_values(const ValueSet& set, const EdgeGraph& graph, Mode mode) {
    std::set<BigRat> out;
    std::vector<BigRat> scratch;
    for (const auto& [i, j] : graph.edges) {
        scratch.clear();
        append_pair_values(scratch, set[i], set[j], mode);
        out.insert(scratch.begin(), scratch.end());
    }
    return out;
}

std::map<BigRat, std::uint64_t> edge_value_multiplicities(const ValueSet& set,
                                                          const EdgeGraph& graph, Mode mode) {
    std::map<BigRat, std::uint64_t> out;
    std::vector<BigRat> scratch;
    for (const auto& [i, j] : graph.edges) {
        scratch.clear();
        append_pair_values(scratch, set[i], set[j], mode);
        for (const BigRat& v : scratch) ++out[v];
    }
    return out;
}

std::map<BigRat, std::uint64_t> spectrum(const ValueSet& set, SpectrumMode mode) {
    std::map<BigRat, std::uint64_t> out;
    for (const BigRat& a : set.values()) {
        for (const BigRat& b : set.values()) {
            const BigRat t = mode == SpectrumMode::kAdditive ? a - b : a / b;
            ++out[t];
        }
    }
    return out;
}

mpz_class energy_by_quadruples(const ValueSet& set, SpectrumMode mode) {
    mpz_class count = 0;
    const auto& v = set.values();
    for (const BigRat& a : v) {
        for (const BigRat& b : v) {
            const BigRat left = mode == SpectrumMode::kAdditive ? a - b : a / b;
            for (const BigRat& c : v) {
                for (const BigRat& d : v) {
                    const BigRat right = mode == SpectrumMode::kAdditive ? c - d : c / d;
                    if (left == right) ++count;
                }
            }
        }
    }
    return count;
}

std::uint64_t incidence_count(const GridLineScene& scene) {
    std::uint64_t hits = 0;
    for (const auto& [x, y] : scene.points) {
        for (const auto& [a, b] : scene.lines) {
            const BigRat rhs = scene.ratio_lines ? (x - a) / b : (x - a) * b;
            if (y == rhs) ++hits;
        }
    }
    return hits;
}

std::vector<std::uint64_t> lpf_table(std::uint64_t limit) {
    std::vector<std::uint64_t> out(limit + 1, 0);
    for (std::uint64_t u = 2; u <= limit; ++u) out[u] = lpf_trial(u);
    return out;
}

UvwBrute uvw_brute(std::uint64_t bound_vw, std::uint64_t bound_u, bool include_one) {
    if (bound_vw < 1 || bound_u < 1) throw std::invalid_argument("uvw_brute: empty ranges");
    UvwBrute out;

    std::vector<std::uint64_t> us;
    for (std::uint64_t u = 1; u <= bound_u; ++u) {
        if (u == 1 && !include_one) continue;
        const std::uint64_t l = lpf_trial(u);
        if (u == 1 || l > bound_vw) us.push_back(u);
    }

    for (std::uint64_t v = 1; v <= bound_vw; ++v) {
        for (std::uint64_t w = 1; w <= bound_vw; ++w) {
            if (gcd_loop(v, w) != 1) continue;
            for (std::uint64_t u : us) {
                out.values.insert(BigRat(static_cast<long>(u * w), static_cast<long>(v)));
            }
        }
    }

    // An edge joins u*w/v and z*v/w whenever both (v, w) and (w, v) are
    // admissible coprime pairs; self-pairs of a value are not edges.
    for (std::uint64_t v = 1; v <= bound_vw; ++v) {
        for (std::uint64_t w = 1; w <= bound_vw; ++w) {
            if (gcd_loop(v, w) != 1) continue;
            for (std::uint64_t u : us) {
                const BigRat left(static_cast<long>(u * w), static_cast<long>(v));
                for (std::uint64_t z : us) {
                    const BigRat right(static_cast<long>(z * v), static_cast<long>(w));
                    if (left == right) continue;
                    out.edges.insert(left < right ? std::make_pair(left, right)
                                                  : std::make_pair(right, left));
                }
            }
        }
    }
    return out;
}

BigRat ruzsa_tail_by_enumeration(std::uint32_t k, const BigRat& delta) {
    if (k < 1 || k > 8) throw std::invalid_argument("ruzsa_tail_by_enumeration: k out of range");
    std::size_t words = 1;
    for (std::uint32_t i = 0; i < k; ++i) words *= 3;

    // Digit words as base-3 odometers; only match counts matter here.
    auto digit_at = [&](std::size_t word, std::uint32_t pos) {
        for (std::uint32_t skip = 0; skip < pos; ++skip) word /= 3;
        return word % 3;
    };

    const BigRat bound = (BigRat(1, 3) + delta) * BigRat(static_cast<long>(k));
    mpz_class hits = 0;
    for (std::size_t a = 0; a < words; ++a) {
        for (std::size_t b = 0; b < words; ++b) {
            std::uint32_t matches = 0;
            for (std::uint32_t pos = 0; pos < k; ++pos) {
                if (digit_at(a, pos) == digit_at(b, pos)) ++matches;
            }
            if (BigRat(static_cast<long>(matches)) > bound) ++hits;
        }
    }
    mpz_class total = 1;
    for (std::uint32_t i = 0; i < 2 * k; ++i) total *= 3;
    return BigRat(hits, total);
}

std::map<mpz_class, std::uint64_t> ruzsa_difference_multiplicities(std::uint32_t k) {
    if (k < 1 || k > 8) {
        throw std::invalid_argument("ruzsa_difference_multiplicities: k out of range");
    }
    static constexpr long kDigits[3] = {0, 1, 3};
    std::size_t words = 1;
    for (std::uint32_t i = 0; i < k; ++i) words *= 3;

    std::vector<mpz_class> numbers;
    numbers.reserve(words);
    for (std::size_t word = 0; word < words; ++word) {
        mpz_class value = 0;
        std::size_t rest = word;
        mpz_class place = 1;
        for (std::uint32_t pos = 0; pos < k; ++pos) {
            value += kDigits[rest % 3] * place;
            rest /= 3;
            place *= 10;
        }
        numbers.push_back(value);
    }

    std::map<mpz_class, std::uint64_t> out;
    for (const mpz_class& a : numbers) {
        for (const mpz_class& b : numbers) {
            ++out[mpz_class(a - b)];
        }
    }
    return out;
}

std::uint64_t pencil_points_on_four_lines(const PencilScene& scene) {
    auto matches_in = [](const std::vector<BigRat>& family, const BigRat& value) {
        std::uint64_t n = 0;
        for (const BigRat& f : family) {
            if (f == value) ++n;
        }
        return n;
    };

    std::uint64_t good = 0;
    for (const auto& [x, y] : scene.points) {
        if (x.is_zero()) continue;
        const bool ok = matches_in(scene.vertical_x, x) == 1 &&
                        matches_in(scene.horizontal_y, y) == 1 &&
                        matches_in(scene.diagonal_c, x + y) == 1 &&
                        matches_in(scene.origin_slope, y / x) == 1;
        if (ok) ++good;
    }
    return good;
}

}  // namespace edgesums::oracle
