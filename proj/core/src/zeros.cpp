#include "argonaut/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "argonaut/argument.hpp"
#include "argonaut/errors.hpp"

namespace argonaut {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Scan step: a sixth of the mean zero gap implied by the conductor density.
double scan_step(const LFunctionDescriptor& d, double t, double refinement) {
    const double density = std::log(analytic_conductor(d, t)) / kTwoPi;
    return 1.0 / (6.0 * density * refinement);
}

double bisect_zero(const LFunctionDescriptor& d, double a, double b, double za) {
    for (int i = 0; i < 200; ++i) {
        const double m = 0.5 * (a + b);
        if (b - a <= 1e-11 * std::max(1.0, std::abs(m))) break;
        const double zm = hardy_function(d, m);
        if (zm == 0.0) return m;
        if ((zm > 0.0) == (za > 0.0)) {
            a = m;
            za = zm;
        } else {
            b = m;
        }
    }
    // secant polish down to rounding level
    double x0 = a, x1 = b;
    double f0 = hardy_function(d, x0), f1 = hardy_function(d, x1);
    for (int i = 0; i < 6 && f1 != f0; ++i) {
        const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!(x2 > a - 1e-9 && x2 < b + 1e-9)) break;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = hardy_function(d, x1);
        if (f1 == 0.0) break;
    }
    return x1;
}

// Sign-change roots of the rotated completed function on [lo, hi].
std::vector<double> scan_roots(const LFunctionDescriptor& d, double lo, double hi,
                               double refinement) {
    std::vector<double> roots;
    double t = lo;
    double zt = hardy_function(d, t);
    while (t < hi) {
        double t2 = std::min(t + scan_step(d, t, refinement), hi);
        double z2 = hardy_function(d, t2);
        if (z2 == 0.0) {
            roots.push_back(t2);
            t2 = std::min(t2 + 1e-10, hi);
            z2 = hardy_function(d, t2);
        } else if ((z2 > 0.0) != (zt > 0.0)) {
            roots.push_back(bisect_zero(d, t, t2, zt));
        }
        t = t2;
        zt = z2;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                roots.end());
    return roots;
}

long expected_count(const LFunctionDescriptor& d, double lo, double hi) {
    // Push the top edge past hi by more than the boundary-dodge radius so a
    // zero at the boundary counts fully rather than half.
    const CountResult c = count_zeros_by_argument(d, lo, hi + 2e-7);
    return std::lround(c.value);
}

ZeroTable parse_ordinate_stream(std::istream& in, std::string descriptor_id) {
    ZeroTable table;
    table.descriptor_id = std::move(descriptor_id);
    std::string line;
    long lineno = 0;
    double prev = -std::numeric_limits<double>::infinity();
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        double v = 0.0;
        try {
            std::size_t used = 0;
            v = std::stod(t, &used);
            if (used != t.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw ParseError("zero table: not a number: '" + t + "'", lineno);
        }
        if (v < prev - 1e-12) {
            std::ostringstream os;
            os << "zero table: ordinate " << v << " out of order";
            throw MonotonicityError(os.str());
        }
        if (!table.ordinates.empty() && std::abs(v - prev) <= 1e-12) {
            ++table.multiplicities.back();
        } else {
            table.ordinates.push_back(v);
            table.multiplicities.push_back(1);
        }
        prev = std::max(prev, v);
    }
    table.height_max = table.ordinates.empty() ? 0.0 : table.ordinates.back();
    return table;
}

std::string height_label(double h) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", h);
    return buf;
}

}  // namespace

std::vector<double> locate_zeros(const LFunctionDescriptor& d, double lo, double hi,
                                 double grid_refinement) {
    if (!(hi > lo)) return {};
    return scan_roots(d, lo, hi, std::max(1.0, grid_refinement));
}

bool ZeroTable::reflects_negative() const {
    return ordinates.empty() || ordinates.front() >= 0.0;
}

std::vector<std::pair<double, int>> ZeroTable::zeros_in(double a, double b) const {
    std::vector<std::pair<double, int>> all;
    if (reflects_negative()) {
        for (std::size_t i = ordinates.size(); i-- > 0;)
            if (ordinates[i] > 0.0) all.emplace_back(-ordinates[i], multiplicities[i]);
    }
    for (std::size_t i = 0; i < ordinates.size(); ++i)
        all.emplace_back(ordinates[i], multiplicities[i]);
    std::vector<std::pair<double, int>> out;
    for (const auto& z : all)
        if (z.first >= a && z.first <= b) out.push_back(z);
    return out;
}

int ZeroTable::count_upto(double t) const {
    int total = 0;
    for (std::size_t i = 0; i < ordinates.size() && ordinates[i] <= t; ++i)
        if (ordinates[i] >= 0.0) total += multiplicities[i];
    return total;
}

double hardy_function(const LFunctionDescriptor& d, double t) {
    if (!d.builtin()) throw Unsupported("hardy_function requires a built-in instance");
    const Complex s{0.5, t};
    Complex w = 0.5 * s * std::log(double(d.conductor()));
    for (const Complex& mu : d.spectral_params()) w += log_gamma_r(s + mu);
    const double phase = w.imag() - 0.5 * std::arg(d.root_number());
    return (std::exp(Complex(0.0, phase)) * evaluate_l(d, s)).real();
}

ZeroTable find_zeros(const LFunctionDescriptor& d, double t_max, double grid_refinement) {
    if (!d.builtin()) throw Unsupported("find_zeros requires a built-in instance");
    if (!(t_max > 0.0) || t_max > 1000.0)
        throw Error("find_zeros: height must lie in (0, 1000]");
    if (grid_refinement < 1.0) grid_refinement = 1.0;

    const double lo = d.self_dual() ? 0.0 : -t_max;
    const double hi = t_max;
    std::vector<double> roots = scan_roots(d, lo, hi, grid_refinement);

    ZeroTable table;
    table.descriptor_id = d.id();
    table.height_max = t_max;
    table.provenance = ZeroTable::Provenance::Computed;

    long expected = 0;
    bool countable = true;
    try {
        expected = expected_count(d, d.self_dual() ? 0.0 : lo - 1e-8, hi);
    } catch (const NonIntegerResult&) {
        countable = false;
        table.suspect_intervals.emplace_back(lo, hi);
    }

    if (countable && long(roots.size()) != expected) {
        // Localize the discrepancy between midpoints of adjacent roots and
        // rescan the deficient stretches with progressively finer grids.
        std::vector<double> cuts{lo};
        for (std::size_t i = 0; i + 1 < roots.size(); ++i)
            cuts.push_back(0.5 * (roots[i] + roots[i + 1]));
        cuts.push_back(hi);
        std::vector<double> fixed;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const double a = cuts[i], b = cuts[i + 1];
            std::vector<double> local;
            for (double r : roots)
                if (r >= a && r <= b) local.push_back(r);
            long want = 0;
            try {
                want = expected_count(d, a, b);
            } catch (const NonIntegerResult&) {
                table.suspect_intervals.emplace_back(a, b);
                fixed.insert(fixed.end(), local.begin(), local.end());
                continue;
            }
            double refinement = grid_refinement * 4.0;
            while (long(local.size()) != want &&
                   scan_step(d, std::max(std::abs(a), std::abs(b)), refinement) > 1e-4) {
                local = scan_roots(d, a, b, refinement);
                refinement *= 4.0;
            }
            if (long(local.size()) != want) table.suspect_intervals.emplace_back(a, b);
            fixed.insert(fixed.end(), local.begin(), local.end());
        }
        std::sort(fixed.begin(), fixed.end());
        fixed.erase(std::unique(fixed.begin(), fixed.end(),
                                [](double x, double y) { return std::abs(x - y) < 1e-9; }),
                    fixed.end());
        roots = std::move(fixed);
    }

    table.ordinates = roots;
    table.multiplicities.assign(roots.size(), 1);
    table.count_verified =
        countable && table.suspect_intervals.empty() && long(roots.size()) == expected;
    return table;
}

ZeroTable ingest_zero_table(const std::filesystem::path& file, std::string descriptor_id) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open zero table " + file.string());
    ZeroTable table = parse_ordinate_stream(in, std::move(descriptor_id));
    table.provenance = ZeroTable::Provenance::Ingested;
    return table;
}

void write_zero_cache(const ZeroTable& table, const std::filesystem::path& cache_dir) {
    const std::filesystem::path sub = cache_dir / table.descriptor_id;
    std::filesystem::create_directories(sub);
    const std::filesystem::path file = sub / (height_label(table.height_max) + ".zeros");
    std::ofstream out(file);
    if (!out) throw Error("cannot write zero cache file " + file.string());
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", table.height_max);
    out << "# argonaut-zeros v1 " << table.descriptor_id << " " << buf << "\n";
    for (std::size_t i = 0; i < table.ordinates.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", table.ordinates[i]);
        for (int k = 0; k < table.multiplicities[i]; ++k) out << buf << "\n";
    }
}

std::optional<ZeroTable> load_zero_cache(const std::filesystem::path& cache_dir,
                                         const std::string& descriptor_id, double min_height) {
    const std::filesystem::path sub = cache_dir / descriptor_id;
    if (!std::filesystem::is_directory(sub)) return std::nullopt;
    std::filesystem::path best;
    double best_height = 0.0;
    for (const auto& entry : std::filesystem::directory_iterator(sub)) {
        if (entry.path().extension() != ".zeros") continue;
        std::ifstream in(entry.path());
        std::string tag, version, id;
        double height = 0.0;
        char hash = 0;
        if (!(in >> hash >> tag >> version >> id >> height)) continue;
        if (hash != '#' || tag != "argonaut-zeros" || version != "v1" || id != descriptor_id)
            continue;
        if (height >= min_height && (best.empty() || height < best_height)) {
            best = entry.path();
            best_height = height;
        }
    }
    if (best.empty()) return std::nullopt;
    std::ifstream in(best);
    ZeroTable table = parse_ordinate_stream(in, descriptor_id);
    table.height_max = best_height;  // the guarantee is the scanned height
    table.provenance = ZeroTable::Provenance::Computed;
    table.count_verified = true;  // only verified tables are written
    return table;
}

ZeroTable obtain_zeros(const LFunctionDescriptor& d, double t_max,
                       const std::optional<std::filesystem::path>& cache_dir) {
    if (cache_dir) {
        if (auto cached = load_zero_cache(*cache_dir, d.id(), t_max)) return *cached;
    }
    ZeroTable table = find_zeros(d, t_max);
    if (cache_dir && table.count_verified) write_zero_cache(table, *cache_dir);
    return table;
}

void require_verified(const ZeroTable& table) {
    if (!table.count_verified)
        throw CompletenessFailure("zero table for " + table.descriptor_id +
                                  " failed the count-consistency check");
}

}  // namespace argonaut
