#include "rsciex/scientometrics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace rsciex::metrics {

CitationProfile::CitationProfile(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
    for (auto c : counts_)
        if (c < 0) throw std::invalid_argument("citation counts must be non-negative");
}

namespace {

std::vector<std::int64_t> sorted_descending(const CitationProfile& p) {
    auto counts = p.counts();
    std::sort(counts.begin(), counts.end(), std::greater<>());
    return counts;
}

} // namespace

std::int64_t total_citations(const CitationProfile& p) {
    return std::accumulate(p.counts().begin(), p.counts().end(), std::int64_t{0});
}

Rational citations_per_paper(const CitationProfile& p) {
    if (p.empty()) throw Error(ErrorCode::EmptyProfile, "citations per paper needs N_p >= 1");
    return {total_citations(p), static_cast<std::int64_t>(p.paper_count())};
}

std::int64_t h_index(const CitationProfile& p) {
    const auto counts = sorted_descending(p);
    std::int64_t h = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const auto rank = static_cast<std::int64_t>(i) + 1;
        if (counts[i] >= rank) h = rank;
        else break;
    }
    return h;
}

HirschFit hirsch_a(const CitationProfile& p) {
    const auto h = h_index(p);
    if (h == 0) throw Error(ErrorCode::ZeroH, "coefficient a is undefined for h = 0");
    HirschFit fit;
    fit.h = h;
    fit.n_c_tot = total_citations(p);
    fit.a = Rational{fit.n_c_tot, h * h};
    fit.within_empirical_range = fit.a >= Rational{3} && fit.a <= Rational{5};
    return fit;
}

std::int64_t g_index(const CitationProfile& p) {
    const auto counts = sorted_descending(p);
    std::int64_t g = 0;
    std::int64_t cumulative = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const auto rank = static_cast<std::int64_t>(i) + 1;
        cumulative += counts[i];
        if (cumulative >= rank * rank) g = rank;
    }
    return g;
}

std::int64_t i10_index(const CitationProfile& p) {
    return std::count_if(p.counts().begin(), p.counts().end(),
                         [](std::int64_t c) { return c >= 10; });
}

std::int64_t significant_papers(const CitationProfile& p, std::int64_t y) {
    if (y < 0) throw std::invalid_argument("threshold y must be non-negative");
    return std::count_if(p.counts().begin(), p.counts().end(),
                         [y](std::int64_t c) { return c > y; });
}

std::vector<std::int64_t> top_q_citations(const CitationProfile& p, std::int64_t q) {
    if (q < 1 || q > static_cast<std::int64_t>(p.paper_count()))
        throw Error(ErrorCode::QOutOfRange,
                    "q = " + std::to_string(q) + " not in 1.." + std::to_string(p.paper_count()));
    auto counts = sorted_descending(p);
    counts.resize(static_cast<std::size_t>(q));
    return counts;
}

Rational impact_factor(const YearlyJournalStats& s) {
    if (s.citations_prev1 < 0 || s.citations_prev2 < 0 || s.publications_prev1 < 0
        || s.publications_prev2 < 0)
        throw std::invalid_argument("journal stats must be non-negative");
    const auto publications = s.publications_prev1 + s.publications_prev2;
    if (publications == 0)
        throw Error(ErrorCode::NoPublications, "impact factor needs publications in the window");
    return {s.citations_prev1 + s.citations_prev2, publications};
}

} // namespace rsciex::metrics
