#include "edgesums/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "edgesums/edge_stats.hpp"
#include "edgesums/energy.hpp"
#include "edgesums/numutil.hpp"
#include "edgesums/primes.hpp"

namespace edgesums {

namespace {

void add_param(ConstructionOutput& out, const std::string& key, const std::string& value) {
    out.params.emplace_back(key, value);
}

void add_note(ConstructionOutput& out, const std::string& key, const std::string& value) {
    out.notes.emplace_back(key, value);
}

void add_note_u64(ConstructionOutput& out, const std::string& key, std::uint64_t value) {
    add_note(out, key, std::to_string(value));
}

void add_note_double(ConstructionOutput& out, const std::string& key, double value) {
    std::ostringstream os;
    os.precision(12);
    os << value;
    add_note(out, key, os.str());
}

std::string u64_str(std::uint64_t v) {
    return std::to_string(v);
}

// Splits a non-negative rational exponent into (p, q) machine words.
std::pair<unsigned long, unsigned long> exponent_words(const BigRat& e) {
    mpz_class num = e.num();
    mpz_class den = e.den();
    if (num < 0 || !num.fits_ulong_p() || !den.fits_ulong_p()) {
        throw std::invalid_argument("exponent out of supported range");
    }
    return {num.get_ui(), den.get_ui()};
}

}  // namespace

const std::string* ConstructionOutput::note(const std::string& key) const {
    for (const auto& [k, v] : notes) {
        if (k == key) return &v;
    }
    return nullptr;
}

// ---------------------------------------------------------------------------
// The u*w/v family behind build_sumprod and build_case1. Vertices come from
// triples (u, v, w) with coprime v, w below one bound, u below another and
// free of prime factors up to the first bound; the edge rule pairs the
// triple (u, v, w) with every (z, w, v), i.e. the same coprime pair
// reversed. Distinctness of the values follows from unique factorization
// (the rough part of the numerator recovers u), and the code verifies it.
// ---------------------------------------------------------------------------

namespace {

ConstructionOutput build_uvw_family(const std::string& name, std::uint64_t bound_vw,
                                    std::uint64_t bound_u, const UvwOptions& opts) {
    if (bound_vw < 2) throw std::invalid_argument(name + ": v,w bound below 2");
    if (bound_u < 1) throw std::invalid_argument(name + ": empty u range");

    PrimeTable table(std::max<std::uint64_t>(bound_u, 2));

    std::vector<std::uint64_t> us;
    for (std::uint64_t u = opts.include_one ? 1 : 2; u <= bound_u; ++u) {
        if (table.least_prime_factor(u) > bound_vw) us.push_back(u);
    }
    if (us.empty()) throw std::invalid_argument(name + ": no admissible u values");

    // Ordered coprime pairs (v, w), lexicographic; rev[] maps a pair to its
    // reversed partner.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::vector<std::vector<std::uint32_t>> pair_at(
        bound_vw + 1, std::vector<std::uint32_t>(bound_vw + 1, UINT32_MAX));
    for (std::uint32_t v = 1; v <= bound_vw; ++v) {
        for (std::uint32_t w = 1; w <= bound_vw; ++w) {
            if (coprime(v, w)) {
                pair_at[v][w] = static_cast<std::uint32_t>(pairs.size());
                pairs.emplace_back(v, w);
            }
        }
    }

    const std::size_t num_u = us.size();
    const std::size_t num_pairs = pairs.size();
    const std::size_t total = num_u * num_pairs;

    std::vector<BigRat> raw;
    raw.reserve(total);
    std::vector<std::array<std::int64_t, 3>> wit_gen;
    wit_gen.reserve(total);
    for (const auto& [v, w] : pairs) {
        for (std::uint64_t u : us) {
            raw.emplace_back(mpz_class(static_cast<unsigned long>(u)) * w,
                             mpz_class(static_cast<unsigned long>(v)));
            wit_gen.push_back({static_cast<std::int64_t>(u), static_cast<std::int64_t>(v),
                               static_cast<std::int64_t>(w)});
        }
    }

    auto built = ValueSet::build(std::move(raw));
    if (built.collisions != 0) {
        throw std::logic_error(name + ": value collision contradicts unique factorization");
    }

    ConstructionOutput out;
    out.name = name;
    out.set = std::move(built.set);
    out.input_collisions = 0;
    out.witness_schema = "u v w";
    out.witnesses.resize(out.set.size());
    for (std::size_t g = 0; g < total; ++g) {
        out.witnesses[built.index_of_input[g]] = wit_gen[g];
    }

    // One edge per ((v,w) with v < w, u, z), plus the u < z pairs of the
    // self-reversed pair (1,1): (P * U^2 - U) / 2 altogether.
    const std::uint64_t u64_u = num_u;
    const std::uint64_t formula_edges = (num_pairs * u64_u * u64_u - u64_u) / 2;

    auto vertex_at = [&](std::uint32_t pair_idx, std::size_t u_idx) {
        return built.index_of_input[static_cast<std::size_t>(pair_idx) * num_u + u_idx];
    };

    if (opts.materialize_graph) {
        std::vector<IndexPair> raw_edges;
        raw_edges.reserve(formula_edges);
        for (std::uint32_t pi = 0; pi < num_pairs; ++pi) {
            const auto [v, w] = pairs[pi];
            if (v < w) {
                const std::uint32_t pj = pair_at[w][v];
                for (std::size_t a = 0; a < num_u; ++a) {
                    const std::uint32_t ia = vertex_at(pi, a);
                    for (std::size_t b = 0; b < num_u; ++b) {
                        raw_edges.emplace_back(ia, vertex_at(pj, b));
                    }
                }
            } else if (v == w) {  // only (1, 1) is coprime on the diagonal
                for (std::size_t a = 0; a < num_u; ++a) {
                    const std::uint32_t ia = vertex_at(pi, a);
                    for (std::size_t b = a + 1; b < num_u; ++b) {
                        raw_edges.emplace_back(ia, vertex_at(pi, b));
                    }
                }
            }
        }
        out.graph =
            EdgeGraph::from_pairs(static_cast<std::uint32_t>(out.set.size()), std::move(raw_edges));
        if (out.graph.edges.size() != formula_edges) {
            throw std::logic_error(name + ": edge count disagrees with the closed form");
        }
        out.edge_count = formula_edges;
    } else {
        out.graph.vertex_count = static_cast<std::uint32_t>(out.set.size());
        out.graph_materialized = false;
        out.edge_count = formula_edges;
    }

    add_note_u64(out, "bound_vw", bound_vw);
    add_note_u64(out, "bound_u", bound_u);
    add_note_u64(out, "u_count", num_u);
    add_note_u64(out, "coprime_pair_count", num_pairs);
    return out;
}

}  // namespace

ConstructionOutput build_sumprod(std::uint64_t n, const UvwOptions& opts) {
    if (n < 64) throw std::invalid_argument("build_sumprod: n must be >= 64");
    const std::uint64_t bound_vw = floor_pow_u64(n, 1, 6);
    const std::uint64_t bound_u = floor_pow_u64(n, 2, 3);
    ConstructionOutput out = build_uvw_family("sumprod", bound_vw, bound_u, opts);
    out.params.insert(out.params.begin(), {"n", u64_str(n)});
    return out;
}

ConstructionOutput build_case1(std::uint64_t n, const BigRat& c, const UvwOptions& opts) {
    if (!(c > BigRat(2, 3) && c < BigRat(1))) {
        throw std::invalid_argument("build_case1: c must lie in (2/3, 1)");
    }
    const auto [a, b] = exponent_words(c);  // c = a/b reduced
    // (1 - c)/2 = (b - a)/(2b)
    const std::uint64_t bound_vw = floor_pow_u64(n, static_cast<unsigned long>(b - a), 2 * b);
    const std::uint64_t bound_u = floor_pow_u64(n, a, b);
    if (bound_vw < 2) throw std::invalid_argument("build_case1: floor(n^((1-c)/2)) < 2");
    ConstructionOutput out = build_uvw_family("case1", bound_vw, bound_u, opts);
    out.params.insert(out.params.begin(), {"c", c.str()});
    out.params.insert(out.params.begin(), {"n", u64_str(n)});
    return out;
}

ConstructionOutput build_case2(std::uint64_t n, const BigRat& c) {
    if (!(c > BigRat(0) && c <= BigRat(2, 3))) {
        throw std::invalid_argument("build_case2: c must lie in (0, 2/3]");
    }
    ConstructionOutput out = build_sumprod(n);
    out.name = "case2";
    out.params = {{"n", u64_str(n)}, {"c", c.str()}};

    const std::uint64_t m = out.set.size();
    const auto [a, b] = exponent_words(c);  // c = a/b, a/b <= 2/3 so 6b - 9a >= 0

    // T = ceil(n^(c/2 - 1/3) * m^(4/3)): smallest t with
    // t^(18b) * n^(6b - 9a) >= m^(24b), decided in exact integers. A double
    // estimate seeds the search; the predicate settles it.
    const mpz_class n_z(static_cast<unsigned long>(n));
    const mpz_class m_z(static_cast<unsigned long>(m));
    const mpz_class rhs = pow_u(m_z, 24 * b);
    const mpz_class n_pow = pow_u(n_z, 6 * b - 9 * a);
    auto reaches = [&](std::uint64_t t) {
        return pow_u(mpz_class(static_cast<unsigned long>(t)), 18 * b) * n_pow >= rhs;
    };
    const double est = std::pow(static_cast<double>(m), 4.0 / 3.0) *
                       std::pow(static_cast<double>(n),
                                static_cast<double>(3.0 * a - 2.0 * b) / (6.0 * b));
    std::uint64_t t = est > 2.0 ? static_cast<std::uint64_t>(est) - 2 : 1;
    while (!reaches(t)) ++t;
    while (t > 1 && reaches(t - 1)) --t;
    const std::uint64_t threshold = t;
    if (threshold == 0) throw std::invalid_argument("build_case2: empty popularity threshold");

    const std::uint64_t edges_before = out.graph.edges.size();
    const std::uint64_t distinct_products_before =
        edge_stats(out.set, out.graph, Mode::kProduct).distinct_count;
    EdgeGraph after_products = prune_by_popularity(out.set, out.graph, Mode::kProduct, threshold);
    const std::uint64_t edges_mid = after_products.edges.size();
    const std::uint64_t distinct_sums_mid =
        edges_mid == 0 ? 0 : edge_stats(out.set, after_products, Mode::kSum).distinct_count;
    EdgeGraph after_sums = prune_by_popularity(out.set, after_products, Mode::kSum, threshold);

    out.graph = std::move(after_sums);
    out.edge_count = out.graph.edges.size();

    add_note_u64(out, "popularity_threshold", threshold);
    add_note_u64(out, "edges_before", edges_before);
    add_note_u64(out, "distinct_products_before", distinct_products_before);
    add_note_u64(out, "edges_after_product_prune", edges_mid);
    add_note_u64(out, "distinct_sums_after_product_prune", distinct_sums_mid);
    add_note_u64(out, "edges_after_sum_prune", out.edge_count);
    // Trend reference p^2 * m^(5/3), constants suppressed.
    const double p_est = std::pow(static_cast<double>(n),
                                  (3.0 * a - 2.0 * b) / (6.0 * b));
    add_note_double(out, "trend_p2_m53",
                    p_est * p_est * std::pow(static_cast<double>(m), 5.0 / 3.0));
    return out;
}

ConstructionOutput build_projection(std::uint64_t n) {
    const std::uint64_t s64 = isqrt_u64(n);
    if (s64 < 2) throw std::invalid_argument("build_projection: floor(sqrt(n)) must be >= 2");
    const std::uint32_t s = static_cast<std::uint32_t>(s64);

    // Positive values 2^i - 2^j for 1 <= j < i <= s, then their negatives.
    std::vector<BigRat> raw;
    std::vector<std::array<std::int64_t, 3>> wit_gen;
    const std::size_t vertex_total = static_cast<std::size_t>(s) * (s - 1);
    raw.reserve(vertex_total);
    wit_gen.reserve(vertex_total);
    for (int sign : {+1, -1}) {
        for (std::uint32_t i = 2; i <= s; ++i) {
            for (std::uint32_t j = 1; j < i; ++j) {
                mpz_class value = pow_u(mpz_class(2), i) - pow_u(mpz_class(2), j);
                if (sign < 0) value = -value;
                raw.emplace_back(value);
                wit_gen.push_back({sign, i, j});
            }
        }
    }

    auto built = ValueSet::build(std::move(raw));
    if (built.collisions != 0) {
        throw std::logic_error("build_projection: exponent pairs produced equal values");
    }

    ConstructionOutput out;
    out.name = "projection";
    add_param(out, "n", u64_str(n));
    out.set = std::move(built.set);
    out.witness_schema = "sign i j";
    out.witnesses.resize(out.set.size());
    for (std::size_t g = 0; g < wit_gen.size(); ++g) {
        out.witnesses[built.index_of_input[g]] = wit_gen[g];
    }

    // Generation order: positives first in (i, j) loop order, negatives
    // after, so the g-index of a witness is recoverable.
    const std::size_t half = wit_gen.size() / 2;
    auto gen_index = [&](int sign, std::uint32_t i, std::uint32_t j) -> std::size_t {
        // (i, j) with 2 <= i, 1 <= j < i sits at position
        // (i-2)(i-1)/2 + (j-1) within its sign block.
        const std::size_t pos =
            static_cast<std::size_t>(i - 2) * (i - 1) / 2 + (j - 1);
        return sign > 0 ? pos : half + pos;
    };

    std::vector<IndexPair> raw_edges;
    std::uint64_t formula = 0;
    for (std::uint32_t j = 1; j < s; ++j) {
        formula += static_cast<std::uint64_t>(s - j) * (s - j);
    }
    raw_edges.reserve(formula);
    for (std::uint32_t j = 1; j < s; ++j) {
        for (std::uint32_t i = j + 1; i <= s; ++i) {
            const std::uint32_t pos_idx = built.index_of_input[gen_index(+1, i, j)];
            for (std::uint32_t k = j + 1; k <= s; ++k) {
                raw_edges.emplace_back(pos_idx, built.index_of_input[gen_index(-1, k, j)]);
            }
        }
    }
    out.graph = EdgeGraph::from_pairs(static_cast<std::uint32_t>(out.set.size()),
                                      std::move(raw_edges));
    if (out.graph.edges.size() != formula) {
        throw std::logic_error("build_projection: edge count disagrees with the closed form");
    }
    out.edge_count = formula;
    add_note_u64(out, "s", s);
    return out;
}

ConstructionOutput build_matching(std::uint64_t k) {
    if (k < 1) throw std::invalid_argument("build_matching: k must be >= 1");
    const std::vector<std::uint64_t> primes = first_primes(2 * static_cast<std::size_t>(k));

    std::vector<BigRat> raw;
    std::vector<std::array<std::int64_t, 3>> wit_gen;
    raw.reserve(2 * k * k);
    wit_gen.reserve(2 * k * k);
    for (std::uint64_t i = 0; i < k; ++i) {
        const unsigned long p = primes[i];
        for (std::uint64_t j = 0; j < k; ++j) {
            const unsigned long q = primes[k + j];
            raw.emplace_back(mpz_class(p), mpz_class(q));
            wit_gen.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), 0});
            raw.emplace_back(mpz_class(q - 1) * p, mpz_class(q));
            wit_gen.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), 1});
        }
    }

    auto built = ValueSet::build(std::move(raw));
    if (built.collisions != 0) {
        // Cannot happen for distinct primes, but the claim is cheap to check.
        throw std::runtime_error("build_matching: vertex values not pairwise distinct");
    }

    ConstructionOutput out;
    out.name = "matching";
    add_param(out, "k", u64_str(k));
    out.set = std::move(built.set);
    out.witness_schema = "p_index q_index is_large";
    out.witnesses.resize(out.set.size());
    for (std::size_t g = 0; g < wit_gen.size(); ++g) {
        out.witnesses[built.index_of_input[g]] = wit_gen[g];
    }

    std::vector<IndexPair> raw_edges;
    raw_edges.reserve(k * k);
    for (std::uint64_t pair = 0; pair < k * k; ++pair) {
        raw_edges.emplace_back(built.index_of_input[2 * pair],
                               built.index_of_input[2 * pair + 1]);
    }
    out.graph = EdgeGraph::from_pairs(static_cast<std::uint32_t>(out.set.size()),
                                      std::move(raw_edges));
    if (out.graph.edges.size() != k * k) {
        throw std::logic_error("build_matching: expected a perfect matching");
    }
    out.edge_count = k * k;
    return out;
}

ConstructionOutput build_ruzsa_digits(std::uint32_t k, const RuzsaOptions& opts) {
    if (k < 1) throw std::invalid_argument("build_ruzsa_digits: k must be >= 1");
    if (k > 9 && !opts.override_guard) {
        throw std::invalid_argument(
            "build_ruzsa_digits: k > 9 grows 3^k vertices and 9^k/2 edges; "
            "set the override to proceed");
    }
    if (k > 19) throw std::invalid_argument("build_ruzsa_digits: k > 19 unsupported");

    static constexpr int kDigits[3] = {0, 1, 3};
    std::size_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= 3;

    std::vector<BigRat> raw;
    raw.reserve(count);
    std::vector<std::array<std::int64_t, 3>> wit_gen;
    wit_gen.reserve(count);
    std::vector<std::uint32_t> digits(k, 0);  // odometer over digit choices
    for (std::size_t v = 0; v < count; ++v) {
        std::int64_t value = 0;
        std::int64_t place = 1;
        for (std::uint32_t pos = 0; pos < k; ++pos) {
            value += kDigits[digits[pos]] * place;
            if (pos + 1 < k) place *= 10;  // 10^19 would overflow at k = 19
        }
        raw.emplace_back(static_cast<long>(value));
        wit_gen.push_back({value, 0, 0});
        for (std::uint32_t pos = 0; pos < k; ++pos) {
            if (++digits[pos] < 3) break;
            digits[pos] = 0;
        }
    }

    auto built = ValueSet::build(std::move(raw));
    if (built.collisions != 0) {
        throw std::logic_error("build_ruzsa_digits: digit words produced equal values");
    }

    ConstructionOutput out;
    out.name = "ruzsa";
    add_param(out, "k", u64_str(k));
    out.set = std::move(built.set);
    out.witness_schema = "value_base10";  // digits readable off the decimal expansion
    out.witnesses.resize(out.set.size());
    for (std::size_t g = 0; g < wit_gen.size(); ++g) {
        out.witnesses[built.index_of_input[g]] = wit_gen[g];
    }

    // Each value's decimal digits must be exactly its digit word; decoding
    // guards the no-carry assumption everything downstream relies on.
    for (const BigRat& v : out.set.values()) {
        mpz_class z = v.num();
        for (std::uint32_t pos = 0; pos < k; ++pos) {
            const unsigned long d = mpz_fdiv_ui(z.get_mpz_t(), 10);
            if (d != 0 && d != 1 && d != 3) {
                throw std::logic_error("build_ruzsa_digits: non-digit-set digit");
            }
            z = (z - static_cast<long>(d)) / 10;
        }
        if (z != 0) throw std::logic_error("build_ruzsa_digits: value too wide");
    }

    out.graph = complete_graph(static_cast<std::uint32_t>(out.set.size()));
    out.edge_count = out.graph.edges.size();
    return out;
}

BigRat ruzsa_tail(std::uint32_t k, const BigRat& delta) {
    if (k < 1) throw std::invalid_argument("ruzsa_tail: k must be >= 1");
    if (delta.sign() <= 0) throw std::invalid_argument("ruzsa_tail: delta must be > 0");

    // Smallest integer r with r > (1/3 + delta) * k, i.e. floor(threshold)+1.
    const BigRat threshold = (BigRat(1, 3) + delta) * BigRat(static_cast<long>(k));
    mpz_class r_min;
    mpz_fdiv_q(r_min.get_mpz_t(), threshold.num().get_mpz_t(), threshold.den().get_mpz_t());
    r_min += 1;
    if (r_min > static_cast<long>(k)) return BigRat(0);

    mpz_class sum = 0;
    for (unsigned long r = static_cast<unsigned long>(r_min.get_ui()); r <= k; ++r) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), k, r);
        sum += binom * pow_u(mpz_class(3), r) * pow_u(mpz_class(6), k - r);
    }
    return BigRat(sum, pow_u(mpz_class(9), k));
}

std::vector<int> ruzsa_decode_difference(const mpz_class& t, std::uint32_t k) {
    std::vector<int> digits;
    digits.reserve(k);
    mpz_class rest = t;
    for (std::uint32_t pos = 0; pos < k; ++pos) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), rest.get_mpz_t(), 10);  // in [0, 9]
        const unsigned long rr = r.get_ui();
        int d;
        if (rr <= 3) {
            d = static_cast<int>(rr);
        } else if (rr >= 7) {
            d = static_cast<int>(rr) - 10;
        } else {
            throw std::invalid_argument("ruzsa_decode_difference: digit out of [-3, 3]");
        }
        rest = (rest - d) / 10;
        digits.push_back(d);
    }
    if (rest != 0) throw std::invalid_argument("ruzsa_decode_difference: extra digits");
    return digits;
}

// ---------------------------------------------------------------------------
// Blow-up constructions.
// ---------------------------------------------------------------------------

namespace {

struct BlowupCore {
    BigRat zeta;
    int attempts = 0;
    std::vector<BigRat> d_values;  // A*A sorted
    ValueSet::BuildResult built;   // B with index_of_input over (a, d, sign)
};

// Vertex generation order: for each a, for each d, the + value then the -
// value. The witness schema below mirrors this.
BlowupCore make_blowup_core(const ValueSet& base, const BlowupOptions& opts) {
    if (base.size() < 2) throw std::invalid_argument("blowup: |A| must be >= 2");
    if (base.contains_zero()) throw std::invalid_argument("blowup: 0 in A");

    BlowupCore core;
    core.d_values = pair_value_counter(base, Mode::kProduct, /*include_diagonal=*/true)
                        .sorted_values();

    std::mt19937_64 rng(opts.seed);
    const unsigned long kDenPrime = 2147483647ul;  // 2^31 - 1
    std::string failure;
    for (int attempt = 1; attempt <= opts.max_attempts; ++attempt) {
        // Numerator drawn from [2^40, 2^41); wide enough that collisions,
        // which each exclude only finitely many zeta, are unlikely.
        const std::uint64_t numerator = (std::uint64_t{1} << 40) | (rng() & ((std::uint64_t{1} << 40) - 1));
        BigRat zeta(mpz_class(static_cast<unsigned long>(numerator)), mpz_class(kDenPrime));

        std::vector<BigRat> raw;
        raw.reserve(2 * base.size() * core.d_values.size());
        for (std::size_t ai = 0; ai < base.size(); ++ai) {
            for (const BigRat& d : core.d_values) {
                const BigRat shift = zeta * d;
                raw.push_back(base[ai] + shift);
                raw.push_back(base[ai] - shift);
            }
        }
        auto built = ValueSet::build(std::move(raw));
        if (built.collisions == 0 && !built.set.contains_zero()) {
            core.zeta = zeta;
            core.attempts = attempt;
            core.built = std::move(built);
            return core;
        }
        failure = built.collisions != 0
                      ? "collision among {a +/- zeta*d} values"
                      : "zeta made some a +/- zeta*d vanish";
    }
    throw std::runtime_error("blowup: retry budget exhausted (" + failure + ")");
}

// Edges (a + zeta*a*c, b - zeta*a*c) for (a, b) ranging over `pairs` and
// all c in A. Throws when any two triples collapse to one edge.
EdgeGraph blowup_edges(const ValueSet& base, const BlowupCore& core,
                       const std::vector<IndexPair>& pairs) {
    const std::size_t nd = core.d_values.size();

    // D-index of each product a*c.
    std::unordered_map<BigRat, std::uint32_t, BigRatHash> d_index;
    d_index.reserve(nd * 2);
    for (std::size_t i = 0; i < nd; ++i) {
        d_index.emplace(core.d_values[i], static_cast<std::uint32_t>(i));
    }
    std::vector<std::uint32_t> prod_idx(base.size() * base.size());
    for (std::size_t a = 0; a < base.size(); ++a) {
        for (std::size_t c = 0; c < base.size(); ++c) {
            prod_idx[a * base.size() + c] = d_index.at(base[a] * base[c]);
        }
    }

    auto b_vertex = [&](std::size_t a, std::uint32_t d, bool plus) {
        const std::size_t g = (a * nd + d) * 2 + (plus ? 0 : 1);
        return core.built.index_of_input[g];
    };

    std::vector<IndexPair> raw_edges;
    raw_edges.reserve(pairs.size() * base.size());
    for (const auto& [a, b] : pairs) {
        for (std::size_t c = 0; c < base.size(); ++c) {
            const std::uint32_t d = prod_idx[static_cast<std::size_t>(a) * base.size() + c];
            raw_edges.emplace_back(b_vertex(a, d, true), b_vertex(b, d, false));
        }
    }
    const std::uint64_t expected = raw_edges.size();
    EdgeGraph g = EdgeGraph::from_pairs(static_cast<std::uint32_t>(core.built.set.size()),
                                        std::move(raw_edges));
    if (g.edges.size() != expected) {
        throw std::logic_error("blowup: triples produced coincident edges");
    }
    return g;
}

void fill_blowup_output(ConstructionOutput& out, const ValueSet& base, BlowupCore&& core) {
    out.set = std::move(core.built.set);
    out.witness_schema = "sign a_index d_index";
    out.witnesses.resize(out.set.size());
    const std::size_t nd = core.d_values.size();
    for (std::size_t a = 0; a < base.size(); ++a) {
        for (std::size_t d = 0; d < nd; ++d) {
            const std::size_t g = (a * nd + d) * 2;
            out.witnesses[core.built.index_of_input[g]] = {+1, static_cast<std::int64_t>(a),
                                                           static_cast<std::int64_t>(d)};
            out.witnesses[core.built.index_of_input[g + 1]] = {-1, static_cast<std::int64_t>(a),
                                                               static_cast<std::int64_t>(d)};
        }
    }
    add_note(out, "zeta", core.zeta.fraction_str());
    add_note_u64(out, "zeta_attempts", static_cast<std::uint64_t>(core.attempts));
    add_note_u64(out, "base_size", base.size());
    add_note_u64(out, "product_set_size", nd);
    add_note_u64(out, "base_sumset_size", pair_set_size(base, Mode::kSum));
    add_note_u64(out, "base_ratioset_size", pair_set_size(base, Mode::kRatio));
}

}  // namespace

ConstructionOutput build_blowup(const ValueSet& base, const BlowupOptions& opts) {
    BlowupCore core = make_blowup_core(base, opts);

    std::vector<IndexPair> all_pairs;
    all_pairs.reserve(base.size() * base.size());
    for (std::uint32_t a = 0; a < base.size(); ++a) {
        for (std::uint32_t b = 0; b < base.size(); ++b) {
            all_pairs.emplace_back(a, b);
        }
    }

    ConstructionOutput out;
    out.name = "blowup";
    add_param(out, "seed", u64_str(opts.seed));
    out.graph = blowup_edges(base, core, all_pairs);
    out.edge_count = out.graph.edges.size();
    fill_blowup_output(out, base, std::move(core));
    return out;
}

ConstructionOutput build_blowup_restricted(const ValueSet& base, const BlowupOptions& opts) {
    BlowupCore core = make_blowup_core(base, opts);
    DyadicExtraction ex = dyadic_extract(base, SpectrumMode::kMultiplicative);
    const std::vector<IndexPair>& pairs = *ex.graph.ordered_pairs;

    ConstructionOutput out;
    out.name = "blowup_restricted";
    add_param(out, "seed", u64_str(opts.seed));
    out.graph = blowup_edges(base, core, pairs);
    out.edge_count = out.graph.edges.size();
    if (out.edge_count != pairs.size() * base.size()) {
        throw std::logic_error("blowup_restricted: expected |H|*|A| edges");
    }
    fill_blowup_output(out, base, std::move(core));

    const auto [alpha, beta] = compute_alpha_beta(base);
    const double N = static_cast<double>(out.set.size());
    const double M = static_cast<double>(ex.value_count);
    add_note_u64(out, "ordered_pair_count", pairs.size());
    add_note_u64(out, "level_value_count", ex.value_count);
    add_note_u64(out, "level_index", ex.level_index);
    add_note_double(out, "alpha", alpha);
    add_note_double(out, "beta", beta);
    // Formula targets at measured N, constants suppressed.
    add_note_double(out, "target_m_lo", std::pow(N, beta / (3.0 - beta)));
    add_note_double(out, "target_m_hi", std::pow(N, (2.0 - beta) / (3.0 - beta)));
    add_note_double(out, "target_edges", std::sqrt(M) * std::pow(N, (4.0 + beta) / (6.0 - 2.0 * beta)));
    add_note_double(out, "target_ratios", M * std::pow(N, 1.0 / (3.0 - beta)));
    add_note_double(out, "target_sums", std::pow(N, (2.0 - alpha) / (3.0 - beta)));
    return out;
}

std::pair<double, double> compute_alpha_beta(const ValueSet& set) {
    if (set.size() < 2) throw std::invalid_argument("compute_alpha_beta: |A| must be >= 2");
    const double logn = std::log(static_cast<double>(set.size()));
    const double alpha =
        2.0 - std::log(static_cast<double>(pair_set_size(set, Mode::kSum))) / logn;
    const double beta =
        2.0 - std::log(static_cast<double>(pair_set_size(set, Mode::kProduct))) / logn;
    return {alpha, beta};
}

}  // namespace edgesums
