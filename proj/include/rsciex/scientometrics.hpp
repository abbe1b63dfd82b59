#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "rsciex/errors.hpp"

namespace rsciex::metrics {

/// Exact fraction; all ratio-valued indicators avoid floating point until
/// they are rendered for display.
using Rational = boost::rational<std::int64_t>;

/// A multiset of per-paper citation counts for one author or venue. Order
/// carries no meaning; every indicator is permutation-invariant.
class CitationProfile {
public:
    CitationProfile() = default;
    explicit CitationProfile(std::vector<std::int64_t> counts);

    const std::vector<std::int64_t>& counts() const noexcept { return counts_; }
    std::size_t paper_count() const noexcept { return counts_.size(); }
    bool empty() const noexcept { return counts_.empty(); }

private:
    std::vector<std::int64_t> counts_;
};

/// Per-journal two-year citation window for the impact factor.
struct YearlyJournalStats {
    std::int64_t citations_prev1 = 0;    // citations in year y to items of y-1
    std::int64_t citations_prev2 = 0;    // citations in year y to items of y-2
    std::int64_t publications_prev1 = 0;
    std::int64_t publications_prev2 = 0;
};

/// The h-index together with the coefficient a of N_c,tot = a*h^2 and
/// whether a falls in the empirically observed band [3, 5].
struct HirschFit {
    std::int64_t h = 0;
    std::int64_t n_c_tot = 0;
    Rational a;                        // n_c_tot / h^2, only defined for h > 0
    bool within_empirical_range = false;
};

std::int64_t total_citations(const CitationProfile& p);

/// N_c,tot / N_p. Throws EMPTY_PROFILE for an empty profile.
Rational citations_per_paper(const CitationProfile& p);

/// Largest h such that h papers each have at least h citations; 0 for an
/// empty or all-zero profile.
std::int64_t h_index(const CitationProfile& p);

/// Fits a = N_c,tot / h^2. Throws ZERO_H when h is 0.
HirschFit hirsch_a(const CitationProfile& p);

/// Largest g (at most N_p) such that the g most-cited papers total at least
/// g^2 citations.
std::int64_t g_index(const CitationProfile& p);

/// Number of papers cited at least 10 times.
std::int64_t i10_index(const CitationProfile& p);

/// Number of papers with strictly more than y citations.
std::int64_t significant_papers(const CitationProfile& p, std::int64_t y);

/// The q largest counts in descending order. Throws Q_OUT_OF_RANGE unless
/// 1 <= q <= N_p.
std::vector<std::int64_t> top_q_citations(const CitationProfile& p, std::int64_t q);

/// Two-year impact factor. Throws NO_PUBLICATIONS when both publication
/// counts are zero.
Rational impact_factor(const YearlyJournalStats& s);

} // namespace rsciex::metrics
