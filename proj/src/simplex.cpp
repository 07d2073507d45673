#include "gorenstein/simplex.hpp"

#include "gorenstein/divisor_lattice.hpp"
#include "gorenstein/errors.hpp"
#include "gorenstein/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gorenstein {

namespace {

IntMatrix edge_matrix(const std::vector<std::vector<std::int64_t>>& vertices) {
    const std::size_t d = vertices.size() - 1;
    IntMatrix e(d, d);
    for (std::size_t i = 1; i <= d; ++i) {
        for (std::size_t r = 0; r < d; ++r) {
            e(r, i - 1) = BigInt(static_cast<long>(vertices[i][r] - vertices[0][r]));
        }
    }
    return e;
}

// Columns (v_i, 1).
IntMatrix lifted_vertex_matrix(const std::vector<std::vector<std::int64_t>>& vertices) {
    const std::size_t d = vertices.size() - 1;
    IntMatrix a(d + 1, d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t r = 0; r < d; ++r) a(r, i) = BigInt(static_cast<long>(vertices[i][r]));
        a(d, i) = 1;
    }
    return a;
}

// Lattice-point counting over a box, pruned by upper bounds of the
// barycentric forms f_i(p) = sum_j coeff[i][j] p_j + offset[i] >= 0.
class SimplexPointCounter {
public:
    SimplexPointCounter(std::vector<std::vector<std::int64_t>> coeff, std::vector<std::int64_t> offset,
                        std::vector<std::int64_t> lo, std::vector<std::int64_t> hi)
        : coeff_(std::move(coeff)), offset_(std::move(offset)), lo_(std::move(lo)), hi_(std::move(hi)) {
        const std::size_t forms = coeff_.size();
        const std::size_t dims = lo_.size();
        // slack_[j][i] = max over coordinates j.. of the contribution to form i.
        slack_.assign(dims + 1, std::vector<std::int64_t>(forms, 0));
        for (std::size_t j = dims; j-- > 0;) {
            for (std::size_t i = 0; i < forms; ++i) {
                const std::int64_t a = coeff_[i][j];
                slack_[j][i] = slack_[j + 1][i] + std::max(a * lo_[j], a * hi_[j]);
            }
        }
    }

    std::uint64_t count() {
        std::vector<std::int64_t> partial = offset_;
        return visit(0, partial);
    }

private:
    std::uint64_t visit(std::size_t j, std::vector<std::int64_t>& partial) {
        for (std::size_t i = 0; i < partial.size(); ++i) {
            if (partial[i] + slack_[j][i] < 0) return 0;
        }
        if (j == lo_.size()) return 1;
        std::uint64_t total = 0;
        for (std::int64_t x = lo_[j]; x <= hi_[j]; ++x) {
            for (std::size_t i = 0; i < partial.size(); ++i) partial[i] += coeff_[i][j] * x;
            total += visit(j + 1, partial);
            for (std::size_t i = 0; i < partial.size(); ++i) partial[i] -= coeff_[i][j] * x;
        }
        return total;
    }

    std::vector<std::vector<std::int64_t>> coeff_;
    std::vector<std::int64_t> offset_;
    std::vector<std::int64_t> lo_;
    std::vector<std::int64_t> hi_;
    std::vector<std::vector<std::int64_t>> slack_;
};

}  // namespace

SimplexModel SimplexModel::from_vertices(std::vector<std::vector<std::int64_t>> vertices) {
    if (vertices.size() < 2) throw std::invalid_argument("a simplex needs at least two vertices");
    const std::size_t d = vertices.size() - 1;
    for (const auto& v : vertices) {
        if (v.size() != d) {
            throw std::invalid_argument("vertex has " + std::to_string(v.size()) + " coordinates, expected " +
                                        std::to_string(d));
        }
    }
    const std::vector<std::int64_t> origin = vertices.front();
    for (auto& v : vertices) {
        for (std::size_t r = 0; r < d; ++r) v[r] -= origin[r];
    }
    if (determinant(edge_matrix(vertices)) == 0) {
        throw std::invalid_argument("degenerate simplex: vertices are affinely dependent");
    }
    SimplexModel s;
    s.dimension_ = d;
    s.vertices_ = std::move(vertices);
    return s;
}

BigInt SimplexModel::normalized_volume() const { return abs(determinant(edge_matrix(vertices_))); }

SimplexModel group_to_simplex(const HeightedGroup& g) {
    const std::size_t width = g.width();
    if (width < 2) throw std::invalid_argument("group_to_simplex: need at least two coordinates");

    BigInt scale(1);
    for (const auto& gen : g.generators()) {
        for (const auto& x : gen) {
            BigInt den = x.den();
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
        }
    }

    // scale * (Z^N + G) is spanned by scale*e_i and scale*g for the generators g.
    const auto& gens = g.generators();
    IntMatrix spanning(width, width + gens.size());
    for (std::size_t i = 0; i < width; ++i) spanning(i, i) = scale;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        for (std::size_t i = 0; i < width; ++i) {
            const Rational scaled = gens[j][i] * Rational(scale, BigInt(1));
            spanning(i, width + j) = scaled.num();
        }
    }
    const IntMatrix basis = hermite_column_basis(spanning);
    if (basis.cols() != width) throw ConsistencyError("group_to_simplex: lattice is not of full rank");

    // Row 0 carries the coordinate sum (an integer on the lattice); after the
    // Hermite step it is (g, 0, ..., 0), so columns 1.. span the kernel.
    IntMatrix augmented(width + 1, width);
    for (std::size_t j = 0; j < width; ++j) {
        BigInt sum(0);
        for (std::size_t i = 0; i < width; ++i) sum += basis(i, j);
        if (sum % scale != 0) throw ConsistencyError("group_to_simplex: non-integer height on the lattice");
        augmented(0, j) = sum / scale;
        for (std::size_t i = 0; i < width; ++i) augmented(i + 1, j) = basis(i, j);
    }
    const IntMatrix reduced = hermite_column_basis(augmented);
    if (reduced.cols() != width) throw ConsistencyError("group_to_simplex: rank dropped while splitting the sum");
    IntMatrix lattice(width, width);
    for (std::size_t i = 0; i < width; ++i) {
        for (std::size_t j = 0; j < width; ++j) lattice(i, j) = reduced(i + 1, j);
    }
    for (std::size_t j = 1; j < width; ++j) {
        if (reduced(0, j) != 0) throw ConsistencyError("group_to_simplex: kernel basis has nonzero sum");
    }

    const auto inverse = rational_inverse(lattice);
    const std::size_t d = width - 1;
    std::vector<std::vector<std::int64_t>> vertices(width, std::vector<std::int64_t>(d, 0));
    const Rational scale_q(scale, BigInt(1));
    for (std::size_t i = 1; i < width; ++i) {
        // coordinates of scale * (e_i - e_0) in the lattice basis
        for (std::size_t r = 0; r < width; ++r) {
            const Rational y = (inverse[r][i] - inverse[r][0]) * scale_q;
            if (!y.is_integer()) throw ConsistencyError("group_to_simplex: e_i - e_0 is not in the lattice");
            if (r == 0) {
                if (!y.is_zero()) throw ConsistencyError("group_to_simplex: e_i - e_0 has nonzero sum component");
                continue;
            }
            vertices[i][r - 1] = to_int64(y.num());
        }
    }
    SimplexModel s = SimplexModel::from_vertices(std::move(vertices));
    if (s.normalized_volume() != BigInt(static_cast<unsigned long>(g.order()))) {
        throw ConsistencyError("group_to_simplex: normalized volume differs from the group order");
    }
    return s;
}

HeightedGroup simplex_to_group(const SimplexModel& s) {
    const IntMatrix a = lifted_vertex_matrix(s.vertices());
    IntMatrix v;
    const IntMatrix diag = diagonal_form(a, v);
    const std::size_t n = a.rows();

    // Lambda = V D^{-1} Z^n mod Z^n, generated by the columns V_j / D_jj.
    std::vector<ModOneVector> gens;
    for (std::size_t j = 0; j < n; ++j) {
        const BigInt& dj = diag(j, j);
        if (dj == 0) throw std::invalid_argument("simplex_to_group: degenerate vertex matrix");
        if (dj == 1) continue;
        std::vector<Rational> column;
        column.reserve(n);
        for (std::size_t r = 0; r < n; ++r) column.push_back(Rational(v(r, j), dj));
        gens.push_back(ModOneVector::from_reals(column));
    }
    BigInt expected(1);
    for (std::size_t j = 0; j < n; ++j) expected *= diag(j, j);
    if (!expected.fits_ulong_p() || expected.get_ui() > kDefaultClosureCap) {
        throw std::length_error("simplex_to_group: normalized volume " + expected.get_str() + " exceeds the cap");
    }
    HeightedGroup out = close_generators(gens, n);
    if (out.order() != expected.get_ui()) {
        throw ConsistencyError("simplex_to_group: enumerated " + std::to_string(out.order()) +
                               " elements, expected " + expected.get_str());
    }
    return out;
}

std::vector<std::int64_t> hstar_of_simplex(const SimplexModel& s) {
    return hstar_vector(simplex_to_group(s), static_cast<std::int64_t>(s.dimension()));
}

std::uint64_t ehrhart_count(const SimplexModel& s, std::int64_t m, std::size_t dim_cap) {
    const std::size_t d = s.dimension();
    if (d > dim_cap) {
        throw std::length_error("ehrhart_count: dimension " + std::to_string(d) + " exceeds the cap " +
                                std::to_string(dim_cap));
    }
    if (m < 1) throw std::invalid_argument("ehrhart_count: m must be positive");

    // A unimodular change of coordinates brings the edges into Hermite form,
    // which keeps the bounding box small without changing the count.
    const IntMatrix hermite = hermite_column_basis(edge_matrix(s.vertices()).transposed());
    std::vector<std::vector<std::int64_t>> verts(d + 1, std::vector<std::int64_t>(d, 0));
    for (std::size_t i = 1; i <= d; ++i) {
        for (std::size_t r = 0; r < d; ++r) verts[i][r] = to_int64(hermite(i - 1, r));
    }

    const IntMatrix a = lifted_vertex_matrix(verts);
    const BigInt det = determinant(a);
    const auto inverse = rational_inverse(a);
    const int sign = det > 0 ? 1 : -1;
    std::vector<std::vector<std::int64_t>> coeff(d + 1, std::vector<std::int64_t>(d));
    std::vector<std::int64_t> offset(d + 1);
    const Rational det_q(det, BigInt(1));
    for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t j = 0; j <= d; ++j) {
            const Rational adj = inverse[i][j] * det_q;
            const std::int64_t value = sign * to_int64(adj.num());
            if (j < d) {
                coeff[i][j] = value;
            } else {
                offset[i] = value * m;
            }
        }
    }
    std::vector<std::int64_t> lo(d);
    std::vector<std::int64_t> hi(d);
    for (std::size_t r = 0; r < d; ++r) {
        std::int64_t mn = 0;
        std::int64_t mx = 0;
        for (const auto& vert : verts) {
            mn = std::min(mn, vert[r]);
            mx = std::max(mx, vert[r]);
        }
        lo[r] = mn * m;
        hi[r] = mx * m;
    }
    return SimplexPointCounter(std::move(coeff), std::move(offset), std::move(lo), std::move(hi)).count();
}

BigInt ehrhart_from_hstar(const std::vector<std::int64_t>& hstar, std::int64_t m) {
    if (hstar.empty()) throw std::invalid_argument("ehrhart_from_hstar: empty h*-vector");
    const auto d = static_cast<unsigned>(hstar.size() - 1);
    BigInt total(0);
    for (unsigned i = 0; i <= d; ++i) {
        total += BigInt(static_cast<long>(hstar[i])) * binomial(static_cast<unsigned>(m) + d - i, d);
    }
    return total;
}

bool is_lattice_pyramid(const SimplexModel& s) { return !zero_coordinates(simplex_to_group(s)).empty(); }

}  // namespace gorenstein
