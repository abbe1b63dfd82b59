#include <doctest.h>

#include <algorithm>
#include <random>

#include "rsciex/scientometrics.hpp"

using namespace rsciex;
using namespace rsciex::metrics;

namespace {

// Definition-level oracles: try every candidate value directly.

// h is the largest value such that at least h papers have >= h citations.
std::int64_t brute_h(const std::vector<std::int64_t>& counts) {
    std::int64_t best = 0;
    for (std::int64_t candidate = 0;
         candidate <= static_cast<std::int64_t>(counts.size()); ++candidate) {
        const auto papers = std::count_if(counts.begin(), counts.end(),
                                          [&](std::int64_t c) { return c >= candidate; });
        if (papers >= candidate) best = candidate;
    }
    return best;
}

// g is the largest value (<= N_p) such that the g most-cited papers have at
// least g^2 citations in total.
std::int64_t brute_g(const std::vector<std::int64_t>& counts) {
    auto sorted = counts;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::int64_t best = 0;
    for (std::int64_t candidate = 0;
         candidate <= static_cast<std::int64_t>(sorted.size()); ++candidate) {
        std::int64_t sum = 0;
        for (std::int64_t i = 0; i < candidate; ++i) sum += sorted[static_cast<std::size_t>(i)];
        if (sum >= candidate * candidate) best = candidate;
    }
    return best;
}

CitationProfile profile(std::vector<std::int64_t> counts) {
    return CitationProfile(std::move(counts));
}

} // namespace

TEST_CASE("total citations") {
    CHECK(total_citations(profile({})) == 0);
    CHECK(total_citations(profile({10, 8, 5, 4, 3})) == 30);
    CHECK(total_citations(profile({1, 1, 1})) == 3);
}

TEST_CASE("citations per paper is an exact rational") {
    CHECK(citations_per_paper(profile({10, 8, 5, 4, 3})) == Rational(6));
    CHECK(citations_per_paper(profile({7})) == Rational(7));
    CHECK(citations_per_paper(profile({1, 2})) == Rational(3, 2));
    CHECK_THROWS_WITH_AS(citations_per_paper(profile({})),
                         "EMPTY_PROFILE: citations per paper needs N_p >= 1", Error);
}

TEST_CASE("h-index examples") {
    CHECK(h_index(profile({})) == 0);
    CHECK(h_index(profile({10, 8, 5, 4, 3})) == 4);
    CHECK(h_index(profile({1, 1, 1})) == 1);
    CHECK(h_index(profile({0, 0})) == 0);
}

TEST_CASE("g-index examples") {
    CHECK(g_index(profile({})) == 0);
    CHECK(g_index(profile({10, 8, 5, 4, 3})) == 5);
    CHECK(g_index(profile({3, 2, 1})) == 2);
}

TEST_CASE("i10-index counts papers with at least ten citations") {
    CHECK(i10_index(profile({})) == 0);
    CHECK(i10_index(profile({12, 10, 9})) == 2);
    CHECK(i10_index(profile({10})) == 1);
}

TEST_CASE("significant papers uses a strict threshold") {
    CHECK(significant_papers(profile({10, 8, 5}), 5) == 2);
    CHECK(significant_papers(profile({10, 8, 5}), 1000) == 0);
    CHECK(significant_papers(profile({10}), 10) == 0);
}

TEST_CASE("top-q citations") {
    CHECK(top_q_citations(profile({10, 8, 5, 4, 3}), 2) == std::vector<std::int64_t>{10, 8});
    CHECK(top_q_citations(profile({7}), 1) == std::vector<std::int64_t>{7});
    CHECK(top_q_citations(profile({3, 10, 8}), 3) == std::vector<std::int64_t>{10, 8, 3});
    CHECK_THROWS_AS(top_q_citations(profile({7}), 2), Error);
    CHECK_THROWS_AS(top_q_citations(profile({7}), 0), Error);
}

TEST_CASE("hirsch coefficient fits total = a * h^2") {
    const auto fit = hirsch_a(profile({12, 12, 12, 12})); // h = 4, total = 48
    CHECK(fit.h == 4);
    CHECK(fit.n_c_tot == 48);
    CHECK(fit.a == Rational(3));
    CHECK(fit.within_empirical_range);

    const auto low = hirsch_a(profile({2, 2})); // h = 2, total = 4
    CHECK(low.a == Rational(1));
    CHECK_FALSE(low.within_empirical_range);

    CHECK_THROWS_AS(hirsch_a(profile({0, 0})), Error);
    CHECK_THROWS_AS(hirsch_a(profile({})), Error);
}

TEST_CASE("empirical range includes its endpoints") {
    CHECK(hirsch_a(profile({3, 1, 1, 1})).a == Rational(6)); // not in range
    // h = 1, total = 3 -> a = 3 exactly
    CHECK(hirsch_a(profile({3})).within_empirical_range);
    // h = 1, total = 5 -> a = 5 exactly
    CHECK(hirsch_a(profile({5})).within_empirical_range);
    // h = 1, total = 6 -> a = 6, outside
    CHECK_FALSE(hirsch_a(profile({6})).within_empirical_range);
}

TEST_CASE("impact factor follows the two-year ratio") {
    CHECK(impact_factor({100, 50, 30, 20}) == Rational(3));
    CHECK(impact_factor({0, 0, 10, 10}) == Rational(0));
    CHECK(impact_factor({7, 0, 3, 0}) == Rational(7, 3));
    CHECK_THROWS_AS(impact_factor({5, 5, 0, 0}), Error);
}

TEST_CASE("h and g agree with brute force on random profiles") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<std::int64_t> size(0, 50);
    std::uniform_int_distribution<std::int64_t> citations(0, 500);
    for (int round = 0; round < 500; ++round) {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(size(rng)));
        for (auto& c : counts) c = citations(rng);
        CAPTURE(round);
        CHECK(h_index(profile(counts)) == brute_h(counts));
        CHECK(g_index(profile(counts)) == brute_g(counts));
    }
}

TEST_CASE("index properties hold on random profiles") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<std::int64_t> size(0, 50);
    std::uniform_int_distribution<std::int64_t> citations(0, 500);
    for (int round = 0; round < 500; ++round) {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(size(rng)));
        for (auto& c : counts) c = citations(rng);
        const auto p = profile(counts);
        const auto h = h_index(p);
        const auto g = g_index(p);

        CHECK(h >= 0);
        CHECK(h <= static_cast<std::int64_t>(counts.size()));
        if (!counts.empty())
            CHECK(h <= *std::max_element(counts.begin(), counts.end()));
        CHECK(g >= h);

        // Permutation invariance.
        auto shuffled = counts;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(h_index(profile(shuffled)) == h);
        CHECK(g_index(profile(shuffled)) == g);
        CHECK(i10_index(profile(shuffled)) == i10_index(p));
        CHECK(total_citations(profile(shuffled)) == total_citations(p));

        // Monotonicity under a single increment.
        if (!counts.empty()) {
            auto bumped = counts;
            bumped[static_cast<std::size_t>(
                std::uniform_int_distribution<std::size_t>(0, counts.size() - 1)(rng))] += 1;
            const auto bp = profile(bumped);
            CHECK(h_index(bp) >= h);
            CHECK(g_index(bp) >= g);
            CHECK(i10_index(bp) >= i10_index(p));
            CHECK(significant_papers(bp, 5) >= significant_papers(p, 5));
            CHECK(total_citations(bp) == total_citations(p) + 1);
        }
    }
}

TEST_CASE("hirsch fit is exact for random profiles") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<std::int64_t> size(1, 40);
    std::uniform_int_distribution<std::int64_t> citations(0, 300);
    for (int round = 0; round < 300; ++round) {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(size(rng)));
        for (auto& c : counts) c = citations(rng);
        const auto p = profile(counts);
        if (h_index(p) == 0) continue;
        const auto fit = hirsch_a(p);
        CHECK(fit.a * Rational(fit.h * fit.h) == Rational(fit.n_c_tot));
        CHECK(fit.within_empirical_range == (fit.a >= Rational(3) && fit.a <= Rational(5)));
    }
}
