#include "tlab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace tlab {

namespace {

std::vector<std::vector<double>> simplex_vertices(int d) {
    // Regular d-simplex with side sqrt(2): vertex i gets the i-th components
    // of the Helmert basis of the hyperplane orthogonal to (1,...,1) in
    // R^{d+1}, which places the centroid at the origin. Scaling by sqrt(2)
    // afterwards gives side length 2.
    std::vector<std::vector<double>> vertices(
        static_cast<std::size_t>(d + 1), std::vector<double>(static_cast<std::size_t>(d), 0.0));
    for (int j = 1; j <= d; ++j) {
        const double scale = 1.0 / std::sqrt(static_cast<double>(j) * (j + 1));
        for (int i = 0; i <= d; ++i) {
            double component = 0.0;
            if (i < j) {
                component = scale;
            } else if (i == j) {
                component = -static_cast<double>(j) * scale;
            }
            vertices[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] =
                std::sqrt(2.0) * component;
        }
    }
    return vertices;
}

} // namespace

Configuration simplex_clique(int dimension) {
    if (dimension < 2) {
        throw UsageError("simplex_clique requires dimension >= 2 (the middle ball degenerates)");
    }
    const int d = dimension;
    std::vector<Ball> balls;
    balls.reserve(static_cast<std::size_t>(d) + 2);
    for (auto& v : simplex_vertices(d)) {
        balls.emplace_back(Point::f64(std::move(v)), Scalar::f64(1.0));
    }
    const double circumradius = std::sqrt(2.0 * d / (d + 1.0));
    balls.emplace_back(Point::f64(std::vector<double>(static_cast<std::size_t>(d), 0.0)),
                       Scalar::f64(circumradius - 1.0));

    std::vector<IndexPair> tangencies;
    for (int i = 0; i < d + 2; ++i) {
        for (int j = i + 1; j < d + 2; ++j) tangencies.emplace_back(i, j);
    }
    return Configuration(d, std::move(balls), TolerancePolicy::approximate(),
                         std::move(tangencies));
}

namespace {

// Minimal vectors of D_d (all +-1,+-1 pairs) scaled by sqrt(2): norm 2 and
// minimum pairwise distance 2.
std::vector<std::vector<double>> scaled_d_lattice_minimal_vectors(int d) {
    const double s = std::sqrt(2.0);
    std::vector<std::vector<double>> centers;
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            for (int sa : {-1, 1}) {
                for (int sb : {-1, 1}) {
                    std::vector<double> c(static_cast<std::size_t>(d), 0.0);
                    c[static_cast<std::size_t>(a)] = s * sa;
                    c[static_cast<std::size_t>(b)] = s * sb;
                    centers.push_back(std::move(c));
                }
            }
        }
    }
    return centers;
}

std::vector<std::vector<double>> scaled_e8_roots() {
    auto centers = scaled_d_lattice_minimal_vectors(8); // 112 integer-type roots
    const double h = std::sqrt(2.0) / 2.0;
    for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
        std::vector<double> c(8, h);
        for (int bit = 0; bit < 8; ++bit) {
            if (mask & (1 << bit)) c[static_cast<std::size_t>(bit)] = -h;
        }
        centers.push_back(std::move(c)); // 128 half-integer-type roots
    }
    return centers;
}

} // namespace

Configuration kissing_configuration(int dimension) {
    std::vector<std::vector<double>> centers;
    switch (dimension) {
    case 1:
        centers = {{-2.0}, {2.0}};
        break;
    case 2:
        for (int k = 0; k < 6; ++k) {
            const double angle = k * std::acos(-1.0) / 3.0;
            centers.push_back({2.0 * std::cos(angle), 2.0 * std::sin(angle)});
        }
        break;
    case 3:
        centers = scaled_d_lattice_minimal_vectors(3);
        break;
    case 4:
        centers = scaled_d_lattice_minimal_vectors(4);
        break;
    case 8:
        centers = scaled_e8_roots();
        break;
    default:
        throw UsageError("kissing_configuration supports only d in {1, 2, 3, 4, 8}");
    }
    std::sort(centers.begin(), centers.end());

    std::vector<Ball> balls;
    balls.reserve(centers.size() + 1);
    balls.emplace_back(Point::f64(std::vector<double>(static_cast<std::size_t>(dimension), 0.0)),
                       Scalar::f64(1.0));
    for (auto& c : centers) balls.emplace_back(Point::f64(std::move(c)), Scalar::f64(1.0));

    std::vector<IndexPair> tangencies;
    for (int k = 1; k <= static_cast<int>(centers.size()); ++k) tangencies.emplace_back(0, k);
    return Configuration(dimension, std::move(balls), TolerancePolicy::approximate(),
                         std::move(tangencies));
}

Configuration shrink_to_index(const Configuration& cfg, int index) {
    if (index < 0 || index >= cfg.size()) throw UsageError("ball index out of range");
    {
        const ValidationReport report = validate_configuration(cfg);
        if (!report.valid()) throw DomainViolation("shrink_to_index requires a valid configuration");
    }
    const Ball& pivot = cfg.ball(index);
    const bool rational = cfg.scalar_mode() == ScalarMode::Rational;

    std::vector<Ball> out;
    std::vector<int> kept; // source indices, pivot included
    for (int j = 0; j < cfg.size(); ++j) {
        if (j == index) {
            out.push_back(pivot);
            kept.push_back(j);
            continue;
        }
        const Ball& other = cfg.ball(j);
        if (classify_pair(pivot, other, cfg.policy()) != ContactClass::Tangent) continue;
        if (other.radius < pivot.radius) {
            std::ostringstream msg;
            msg << "neighbour " << j << " is smaller than ball " << index
                << "; shrinking only goes downward";
            throw DomainViolation(msg.str());
        }
        if (other.radius == pivot.radius) { // already the right size
            out.push_back(other);
            kept.push_back(j);
            continue;
        }
        // New center at distance 2*r_pivot from the pivot center, along the
        // original direction: the contact point is preserved.
        std::vector<Scalar> center;
        center.reserve(static_cast<std::size_t>(cfg.dimension()));
        if (rational) {
            // Tangency is exact here, so |c_j - c_i| = r_i + r_j and the
            // scale factor 2 r_i / (r_i + r_j) stays rational.
            const Rational scale =
                Rational(2) * pivot.radius.rat() / (pivot.radius.rat() + other.radius.rat());
            for (int t = 0; t < cfg.dimension(); ++t) {
                const Rational delta = other.center[t].rat() - pivot.center[t].rat();
                center.push_back(Scalar::rational(pivot.center[t].rat() + scale * delta));
            }
        } else {
            double dist2 = 0.0;
            for (int t = 0; t < cfg.dimension(); ++t) {
                const double delta = other.center[t].value_f64() - pivot.center[t].value_f64();
                dist2 += delta * delta;
            }
            const double scale = 2.0 * pivot.radius.value_f64() / std::sqrt(dist2);
            for (int t = 0; t < cfg.dimension(); ++t) {
                const double delta = other.center[t].value_f64() - pivot.center[t].value_f64();
                center.push_back(Scalar::f64(pivot.center[t].value_f64() + scale * delta));
            }
        }
        out.emplace_back(Point(std::move(center)), pivot.radius);
        kept.push_back(j);
    }

    std::vector<IndexPair> tangencies;
    const int pivot_pos =
        static_cast<int>(std::find(kept.begin(), kept.end(), index) - kept.begin());
    for (int p = 0; p < static_cast<int>(out.size()); ++p) {
        if (p == pivot_pos) continue;
        tangencies.emplace_back(std::min(p, pivot_pos), std::max(p, pivot_pos));
    }

    Configuration result(cfg.dimension(), std::move(out), cfg.policy(), std::move(tangencies));
    const ValidationReport report = validate_configuration(result);
    if (!report.valid()) {
        throw InvariantBreach("shrink_to_index produced an invalid configuration");
    }
    return result;
}

BigInt volume_kissing_bound(int dimension) {
    if (dimension < 1) throw UsageError("dimension must be >= 1");
    BigInt power = 1;
    for (int i = 0; i < dimension; ++i) power *= 3;
    return power - 1;
}

const std::map<int, BigInt>& known_kissing_numbers() {
    static const std::map<int, BigInt> table = {
        {1, BigInt(2)},   {2, BigInt(6)},   {3, BigInt(12)},
        {4, BigInt(24)},  {8, BigInt(240)}, {24, BigInt(196560)},
    };
    return table;
}

BoundsRow bounds_for_dimension(int dimension) {
    if (dimension < 1) throw UsageError("dimension must be >= 1");
    BoundsRow row;
    row.dimension = dimension;
    row.lower = dimension == 1 ? 2 : dimension + 2;
    row.kappa_crude = volume_kissing_bound(dimension);

    const auto& known = known_kissing_numbers();
    if (const auto it = known.find(dimension); it != known.end()) {
        row.kappa = it->second;
        row.upper = it->second + 1;
    } else {
        row.upper = row.kappa_crude + 1; // 3^d
    }
    if (dimension == 1) row.chi_known = 2;
    if (dimension == 2) row.chi_known = 4;
    if (dimension == 1 || dimension == 2 || dimension == 8 || dimension == 24) {
        row.magic_upper = known.at(dimension);
    }
    return row;
}

std::vector<BoundsRow> bounds_table(int d_min, int d_max) {
    if (d_min < 1 || d_min > d_max || d_max > 64) {
        throw UsageError("bounds table range must satisfy 1 <= d_min <= d_max <= 64");
    }
    std::vector<BoundsRow> rows;
    rows.reserve(static_cast<std::size_t>(d_max - d_min) + 1);
    for (int d = d_min; d <= d_max; ++d) rows.push_back(bounds_for_dimension(d));
    return rows;
}

namespace {

std::string opt_str(const std::optional<BigInt>& v) { return v ? v->str() : "-"; }

nlohmann::json big_to_json(const BigInt& v) {
    static const BigInt json_safe_max = (BigInt(1) << 53);
    if (v <= json_safe_max) return v.convert_to<std::uint64_t>();
    return v.str();
}

} // namespace

std::string bounds_table_text(const std::vector<BoundsRow>& rows) {
    const std::vector<std::string> headers = {"d",     "lower",     "kappa",      "kappa_crude",
                                              "upper", "chi_known", "magic_upper"};
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const BoundsRow& r : rows) {
        cells.push_back({std::to_string(r.dimension), std::to_string(r.lower), opt_str(r.kappa),
                         r.kappa_crude.str(), r.upper.str(),
                         r.chi_known ? std::to_string(*r.chi_known) : "-",
                         opt_str(r.magic_upper)});
    }
    std::vector<std::size_t> widths(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) {
        widths[c] = headers[c].size();
        for (const auto& row : cells) widths[c] = std::max(widths[c], row[c].size());
    }
    std::ostringstream out;
    for (std::size_t c = 0; c < headers.size(); ++c) {
        out << std::setw(static_cast<int>(widths[c])) << headers[c]
            << (c + 1 < headers.size() ? "  " : "\n");
    }
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << std::setw(static_cast<int>(widths[c])) << row[c]
                << (c + 1 < row.size() ? "  " : "\n");
        }
    }
    return out.str();
}

std::string bounds_table_json(const std::vector<BoundsRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const BoundsRow& r : rows) {
        nlohmann::json jr;
        jr["dimension"] = r.dimension;
        jr["lower"] = r.lower;
        if (r.kappa) jr["kappa"] = big_to_json(*r.kappa);
        jr["kappa_crude"] = big_to_json(r.kappa_crude);
        jr["upper"] = big_to_json(r.upper);
        if (r.chi_known) jr["chi_known"] = *r.chi_known;
        if (r.magic_upper) jr["magic_upper"] = big_to_json(*r.magic_upper);
        out.push_back(std::move(jr));
    }
    return out.dump();
}

} // namespace tlab
