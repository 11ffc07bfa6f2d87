#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "argonaut/lfunction.hpp"

namespace argonaut {

// Critical-line zero ordinates for one L-function, with a completeness
// guarantee below height_max. Tables holding only nonnegative ordinates answer
// negative-height queries by reflection (exact for self-dual instances, and
// the documented behavior for any positive-only table).
struct ZeroTable {
    enum class Provenance { Computed, Ingested };

    std::string descriptor_id;
    std::vector<double> ordinates;     // strictly ascending after folding
    std::vector<int> multiplicities;   // parallel to ordinates, each >= 1
    double height_max = 0.0;
    Provenance provenance = Provenance::Computed;
    bool count_verified = false;       // matched the argument-principle count
    // Where count-consistency refinement gave up (possible unresolved close
    // pair or multiple zero); empty for clean tables.
    std::vector<std::pair<double, double>> suspect_intervals;

    bool reflects_negative() const;  // no negative ordinate stored
    std::size_t size() const { return ordinates.size(); }

    // (ordinate, multiplicity) pairs with a <= gamma <= b, reflection applied.
    std::vector<std::pair<double, int>> zeros_in(double a, double b) const;
    // Total multiplicity of stored ordinates in [0, t] (no reflection).
    int count_upto(double t) const;
};

// Real rotated completed function: Z(t) = e^{i omega(t)} L(1/2 + it) with the
// phase chosen so Z is real-valued for every built-in instance; |Z| = |L|.
double hardy_function(const LFunctionDescriptor& d, double t);

// Zeros with |gamma| <= t_max by sign-change bracketing plus bisection, then a
// count-consistency check against the argument principle. Non-self-dual
// instances are scanned over [-t_max, t_max]; self-dual ones over [0, t_max]
// with reflection. A count mismatch triggers local grid refinement down to
// step 1e-4; leftovers are recorded in suspect_intervals (not fatal).
// grid_refinement > 1 shrinks the initial scan step by that factor.
ZeroTable find_zeros(const LFunctionDescriptor& d, double t_max, double grid_refinement = 1.0);

// Raw sign-change scan over [lo, hi]: ordinates only, no count verification.
// Used for local work (splitting an integration path at nearby zeros).
std::vector<double> locate_zeros(const LFunctionDescriptor& d, double lo, double hi,
                                 double grid_refinement = 1.0);

// One ordinate per line, ascending; '#' lines skipped. Repeated ordinates
// (within 1e-12) fold into a multiplicity. height_max = last ordinate.
ZeroTable ingest_zero_table(const std::filesystem::path& file, std::string descriptor_id);

// Cache layout: {dir}/{descriptor_id}/{height}.zeros with a one-line header
// "# argonaut-zeros v1 <descriptor_id> <height_max>".
void write_zero_cache(const ZeroTable& table, const std::filesystem::path& cache_dir);
std::optional<ZeroTable> load_zero_cache(const std::filesystem::path& cache_dir,
                                         const std::string& descriptor_id, double min_height);

// Cache lookup, else find_zeros + cache write (when a directory is given).
ZeroTable obtain_zeros(const LFunctionDescriptor& d, double t_max,
                       const std::optional<std::filesystem::path>& cache_dir);

// Throws CompletenessFailure unless the table passed its count check.
void require_verified(const ZeroTable& table);

}  // namespace argonaut
