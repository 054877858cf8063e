#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bisect/standard.hpp"

namespace bisect {

/// Exhaustive bisector search over a small prime field: every canonical line
/// is run through the midpoint oracle.  Throws FieldTooLarge above `max_p`
/// (and always above the hard cap of 31), UnsupportedInMode off prime fields.
std::vector<Line> brute_force_bisectors(const Quadrilateral& q, std::int64_t max_p = 13);

/// Sufficient criterion for a rational center-form slope: true when
/// -108 * mu * (h^2*mu - k^2)^2, the discriminant of the center form, is a
/// non-square (a cubic with non-square discriminant cannot be irreducible).
bool dickson_check(const StandardFormField& f);

/// Realize both triples, transport the brute-force bisector set of the first
/// through the equivalence witness, and compare with the second set.  False
/// when no witness or realization exists, or when the sets differ.
bool witness_transports_bisectors(const StandardFormField& f1, const StandardFormField& f2);

/// One affine-equivalence class of well-centered cubic triples over GF(p),
/// keyed by whether mu is a square.
struct CensusClass {
    bool square_mu = false;
    std::optional<StandardFormField> representative;  ///< first triple in scan order
    std::int64_t size = 0;
    std::int64_t realized = 0;  ///< members admitting a quadrilateral (full mode)
};

struct CensusOptions {
    bool full = false;        ///< materialize quadrilaterals and cross-check them
    int threads = 1;
    std::int64_t max_p = 13;  ///< soft refusal bound; the hard cap stays 31
    int transport_pairs = 10; ///< witness validations sampled in full mode
};

/// Deterministic scan summary of all (h, k, mu) triples over GF(p); equal for
/// equal inputs regardless of thread count, except for wall_time_seconds.
struct CensusReport {
    std::int64_t p = 0;
    bool full = false;
    std::int64_t triples = 0;
    std::int64_t linear = 0;
    std::int64_t quadratic = 0;
    std::int64_t cubic = 0;
    std::int64_t well_centered_cubic = 0;
    std::int64_t dickson_hits = 0;      ///< cubics certified by dickson_check
    std::vector<CensusClass> classes;   ///< square-mu class first when present
    std::int64_t undecided_pairs = 0;   ///< cubic pairs the theory leaves open
    std::int64_t realized = 0;          ///< full mode: triples with a quadrilateral
    std::int64_t unrealized = 0;
    int validated_pairs = 0;            ///< full mode: transport checks performed
    double wall_time_seconds = 0.0;
};

/// Scan GF(p)^2 x GF(p)* and classify every standard triple.  In full mode
/// each triple is realized where possible, the realization's bisector family
/// is checked against the triple, the pencil count is checked against the
/// class, and sampled equivalence witnesses are validated by brute-force set
/// transport; any violation throws IdentityCheckFailed.
CensusReport run_census(std::int64_t p, const CensusOptions& opts = {});

/// Per-triple rows "p,h,k,mu,class,well_centered,square_mu" in scan order.
std::string census_csv(std::int64_t p);

}  // namespace bisect
