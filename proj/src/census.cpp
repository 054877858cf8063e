#include "bisect/census.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "bisect/core.hpp"
#include "bisect/error.hpp"

namespace bisect {

namespace {

constexpr std::int64_t kHardCap = 31;

void check_census_size(std::int64_t p, std::int64_t max_p) {
    if (p > kHardCap)
        throw FieldTooLarge("p = " + std::to_string(p) + " exceeds the hard cap of 31");
    if (p > max_p)
        throw FieldTooLarge("p = " + std::to_string(p) + " exceeds the configured bound of " +
                            std::to_string(max_p));
}

std::array<std::int64_t, 3> scan_key(const StandardFormField& f) {
    return {f.h().residue(), f.k().residue(), f.mu().residue()};
}

std::int64_t pairs_of(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

std::vector<Line> brute_force_bisectors(const Quadrilateral& q, std::int64_t max_p) {
    const FieldDescriptor desc = q.field();
    if (desc.kind != FieldKind::Prime)
        throw UnsupportedInMode("exhaustive bisector search needs a prime field");
    check_census_size(desc.p, max_p);
    std::vector<Line> out;
    for (const Line& ell : all_lines(desc))
        if (bisects_direct(q, ell)) out.push_back(ell);
    return out;
}

bool dickson_check(const StandardFormField& f) {
    const FieldElement inner = f.h() * f.h() * f.mu() - f.k() * f.k();
    return !is_square(-108 * (f.mu() * inner * inner));
}

bool witness_transports_bisectors(const StandardFormField& f1, const StandardFormField& f2) {
    const auto w = equivalence_witness(f1, f2);
    if (!w) return false;
    const auto q1 = quadrilateral_from_triple(f1);
    const auto q2 = quadrilateral_from_triple(f2);
    if (!q1 || !q2) return false;

    const std::vector<Line> s1 = brute_force_bisectors(*q1);
    std::vector<Line> s2 = brute_force_bisectors(*q2);
    std::vector<Line> moved;
    moved.reserve(s1.size());
    for (const Line& ell : s1) moved.push_back(w->apply(ell));
    std::sort(moved.begin(), moved.end());
    std::sort(s2.begin(), s2.end());
    return moved == s2;
}

CensusReport run_census(std::int64_t p, const CensusOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    const FieldDescriptor desc = FieldDescriptor::prime(p);
    check_census_size(p, opts.max_p);

    struct Bucket {
        std::int64_t cubic = 0, wc = 0, realized_wc = 0;
        std::optional<StandardFormField> rep;
    };
    struct Partial {
        std::int64_t linear = 0, quadratic = 0, cubic = 0, wc = 0, dickson = 0;
        std::int64_t realized = 0, unrealized = 0;
        Bucket by_square[2];  // [0] square mu, [1] non-square mu
        std::vector<StandardFormField> realized_wc_pool;
    };

    const int threads = std::max(1, opts.threads);
    std::vector<Partial> parts(threads);
    std::vector<std::exception_ptr> errors(threads);

    auto work = [&](int w) {
        try {
            Partial& out = parts[static_cast<std::size_t>(w)];
            const std::int64_t lo = p * w / threads;
            const std::int64_t hi = p * (w + 1) / threads;
            for (std::int64_t h = lo; h < hi; ++h)
                for (std::int64_t k = 0; k < p; ++k)
                    for (std::int64_t m = 1; m < p; ++m) {
                        const StandardFormField f(FieldElement::from_int(desc, h),
                                                  FieldElement::from_int(desc, k),
                                                  FieldElement::from_int(desc, m));
                        bool wc = true;
                        if (f.cls() == BisectorClass::Linear) {
                            ++out.linear;
                        } else if (f.cls() == BisectorClass::Quadratic) {
                            ++out.quadratic;
                        } else {
                            ++out.cubic;
                            Bucket& b = out.by_square[is_square(f.mu()) ? 0 : 1];
                            ++b.cubic;
                            wc = well_centered(f);
                            if (wc) {
                                ++out.wc;
                                ++b.wc;
                                if (!b.rep || scan_key(f) < scan_key(*b.rep)) b.rep = f;
                            }
                            if (dickson_check(f)) {
                                ++out.dickson;
                                if (!wc)
                                    throw IdentityCheckFailed(
                                        "non-square discriminant but no rational center slope at " +
                                        f.to_string());
                            }
                        }

                        if (!opts.full) continue;
                        const auto quad = quadrilateral_from_triple(f);
                        if (!quad) {
                            ++out.unrealized;
                            continue;
                        }
                        ++out.realized;
                        const FieldPolynomials fp = bisector_field(*quad);
                        if (!same_bisector_field(fp, standard_polynomials(f)))
                            throw IdentityCheckFailed("realization has a different family at " +
                                                      f.to_string());
                        if (count_parallel_pencils(fp) != 3 - fp.f_degree)
                            throw IdentityCheckFailed("pencil count violates 3 - degree at " +
                                                      f.to_string());
                        if (f.cls() == BisectorClass::Cubic && wc) {
                            ++out.by_square[is_square(f.mu()) ? 0 : 1].realized_wc;
                            out.realized_wc_pool.push_back(f);
                        }
                    }
        } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);

    CensusReport report;
    report.p = p;
    report.full = opts.full;
    report.triples = p * p * (p - 1);

    Bucket merged[2];
    std::vector<StandardFormField> pool;
    for (const Partial& part : parts) {
        report.linear += part.linear;
        report.quadratic += part.quadratic;
        report.cubic += part.cubic;
        report.well_centered_cubic += part.wc;
        report.dickson_hits += part.dickson;
        report.realized += part.realized;
        report.unrealized += part.unrealized;
        for (int s = 0; s < 2; ++s) {
            merged[s].cubic += part.by_square[s].cubic;
            merged[s].wc += part.by_square[s].wc;
            merged[s].realized_wc += part.by_square[s].realized_wc;
            const auto& rep = part.by_square[s].rep;
            if (rep && (!merged[s].rep || scan_key(*rep) < scan_key(*merged[s].rep)))
                merged[s].rep = *rep;
        }
        pool.insert(pool.end(), part.realized_wc_pool.begin(), part.realized_wc_pool.end());
    }
    std::sort(pool.begin(), pool.end(), [](const StandardFormField& a, const StandardFormField& b) {
        return scan_key(a) < scan_key(b);
    });

    for (int s = 0; s < 2; ++s) {
        if (merged[s].wc == 0) continue;
        report.classes.push_back(
            CensusClass{s == 0, merged[s].rep, merged[s].wc, merged[s].realized_wc});
        report.undecided_pairs += pairs_of(merged[s].cubic) - pairs_of(merged[s].wc);
    }

    if (opts.full && pool.size() >= 2) {
        std::mt19937_64 rng(0x5EEDu ^ static_cast<std::uint64_t>(p));
        int attempts = 0;
        while (report.validated_pairs < opts.transport_pairs && attempts < 20 * opts.transport_pairs) {
            ++attempts;
            const StandardFormField& f1 = pool[rng() % pool.size()];
            const StandardFormField& f2 = pool[rng() % pool.size()];
            if (is_square(f1.mu()) != is_square(f2.mu())) continue;
            if (!witness_transports_bisectors(f1, f2))
                throw IdentityCheckFailed("witness failed to transport the bisector set: " +
                                          f1.to_string() + " -> " + f2.to_string());
            ++report.validated_pairs;
        }
    }

    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string census_csv(std::int64_t p) {
    const FieldDescriptor desc = FieldDescriptor::prime(p);
    check_census_size(p, kHardCap);
    std::ostringstream out;
    out << "p,h,k,mu,class,well_centered,square_mu\n";
    for (std::int64_t h = 0; h < p; ++h)
        for (std::int64_t k = 0; k < p; ++k)
            for (std::int64_t m = 1; m < p; ++m) {
                const StandardFormField f(FieldElement::from_int(desc, h),
                                          FieldElement::from_int(desc, k),
                                          FieldElement::from_int(desc, m));
                out << p << ',' << h << ',' << k << ',' << m << ',' << to_string(f.cls()) << ','
                    << (well_centered(f) ? 1 : 0) << ',' << (is_square(f.mu()) ? 1 : 0) << '\n';
            }
    return out.str();
}

}  // namespace bisect
