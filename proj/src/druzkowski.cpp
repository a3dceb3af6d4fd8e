#include "bezkit/druzkowski.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

namespace bez {

namespace {

void check_square(const RationalMatrix& a) {
    if (a.empty()) throw NonSquareMatrix("empty matrix");
    for (const auto& row : a)
        if (row.size() != a.size()) throw NonSquareMatrix("matrix must be square");
}

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
    return inv;
}

}  // namespace

PolySystem cubic_linear_system(const RationalMatrix& a) {
    check_square(a);
    const int n = static_cast<int>(a.size());
    RingPtr ring = RingContext::standard(n);
    std::vector<Polynomial> polys;
    polys.reserve(n);
    for (int i = 0; i < n; ++i) {
        Polynomial linear = Polynomial::zero(ring);
        for (int j = 0; j < n; ++j)
            linear += a[i][j] * Polynomial::variable(ring, j);
        polys.push_back(Polynomial::variable(ring, i) + linear.pow(3));
    }
    return PolySystem(ring, std::move(polys));
}

DruzkowskiSpec from_matrix(const RationalMatrix& a) {
    PolySystem system = cubic_linear_system(a);
    Polynomial jac = jacobian(system);
    if (!jac.is_constant() || jac.is_zero()) throw NotDruzkowski(std::move(jac));
    DruzkowskiSpec spec;
    spec.matrix = a;
    spec.jacobian_constant = jac.constant_value();  // necessarily 1
    spec.system = std::move(system);
    return spec;
}

DruzkowskiSpec permutation_conjugate(const DruzkowskiSpec& spec,
                                     const std::vector<int>& perm) {
    const int n = spec.system.n();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation has wrong length");
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[i] != i) throw std::invalid_argument("not a permutation");

    const std::vector<int> inv = inverse_permutation(perm);
    RationalMatrix conj(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) conj[i][j] = spec.matrix[inv[i]][inv[j]];

    DruzkowskiSpec result = from_matrix(conj);

    // Cross-check P o f o P^-1 against the system built from P A P^-1.
    const RingPtr& ring = spec.system.ring;
    std::map<int, Polynomial> relabel;
    for (int j = 0; j < n; ++j)
        relabel.emplace(j, Polynomial::variable(ring, perm[j]));
    for (int i = 0; i < n; ++i) {
        Polynomial composed = spec.system.polys[inv[i]].substitute(relabel);
        if (composed != result.system.polys[i])
            throw std::logic_error(
                "permutation conjugation identity failed; internal bug");
    }
    return result;
}

RowMultResult row_mult_conjugate(const DruzkowskiSpec& spec, int i,
                                 const Rational& m) {
    const int n = spec.system.n();
    if (i < 0 || i >= n) throw std::out_of_range("row index out of range");
    if (m == 0) throw std::invalid_argument("row multiplier must be nonzero");

    const RingPtr& ring = spec.system.ring;
    std::map<int, Polynomial> shrink;
    shrink.emplace(i, (Rational(1) / m) * Polynomial::variable(ring, i));

    std::vector<Polynomial> composed;
    composed.reserve(n);
    for (int l = 0; l < n; ++l) {
        Polynomial g = spec.system.polys[l].substitute(shrink);
        if (l == i) g = (m * m * m) * g;
        composed.push_back(std::move(g));
    }

    RowMultResult result;
    result.composed = PolySystem(ring, std::move(composed));
    result.candidate = spec.matrix;
    for (int j = 0; j < n; ++j) {
        if (j != i) {
            result.candidate[i][j] *= m;        // row i scaled by m
            result.candidate[j][i] /= m;        // column i scaled by 1/m
        }
    }
    PolySystem shape = cubic_linear_system(result.candidate);
    result.is_druzkowski = true;
    for (int l = 0; l < n; ++l) {
        if (result.composed.polys[l] != shape.polys[l]) {
            result.is_druzkowski = false;
            break;
        }
    }
    return result;
}

std::optional<ConjugationWitness> conjugate_search(const RationalMatrix& a,
                                                  int max_n) {
    check_square(a);
    const int n = static_cast<int>(a.size());
    if (n > max_n)
        throw SearchSpaceTooLarge("n = " + std::to_string(n) +
                                  " exceeds --max-n = " + std::to_string(max_n));

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        const std::vector<int> inv = inverse_permutation(perm);
        for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
            std::vector<int> signs(n);
            for (int k = 0; k < n; ++k)
                signs[k] = (mask >> (n - 1 - k)) & 1 ? -1 : 1;
            RationalMatrix conj(n, std::vector<Rational>(n));
            bool upper = true;
            for (int i = 0; i < n && upper; ++i) {
                for (int j = 0; j < n; ++j) {
                    conj[i][j] = Rational(signs[inv[i]] * signs[inv[j]]) *
                                 a[inv[i]][inv[j]];
                    if (j <= i && conj[i][j] != 0) {
                        upper = false;
                        break;
                    }
                }
            }
            if (upper) {
                ConjugationWitness w;
                w.permutation = perm;
                w.signs = signs;
                w.conjugated = std::move(conj);
                return w;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::vector<ExperimentRecord> question411_experiment(const RationalMatrix& a,
                                                     size_t samples,
                                                     uint64_t seed,
                                                     unsigned range) {
    if (samples == 0) throw std::invalid_argument("samples must be positive");
    DruzkowskiSpec spec = from_matrix(a);
    const int n = spec.system.n();

    std::vector<RationalPoint> points;
    points.reserve(samples);
    points.emplace_back(n, Rational(0));
    std::mt19937_64 rng(seed);
    const uint64_t width = 2 * uint64_t(range) + 1;
    for (size_t s = 1; s < samples; ++s) {
        RationalPoint q;
        q.reserve(n);
        for (int j = 0; j < n; ++j) {
            int64_t v = static_cast<int64_t>(rng() % width) - range;
            q.emplace_back(static_cast<long>(v));
        }
        points.push_back(std::move(q));
    }

    std::vector<ExperimentRecord> records;
    records.reserve(samples);
    for (size_t s = 0; s < samples; ++s) {
        ExperimentRecord rec;
        rec.sample_index = s;
        rec.q = points[s];
        auto start = std::chrono::steady_clock::now();
        BezoutianReport report = reduced_bezoutian(spec.system, points[s]);
        auto stop = std::chrono::steady_clock::now();
        rec.elapsed_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        rec.constant_value = report.reduced_constant_value;
        rec.is_one = report.reduced_is_constant && rec.constant_value &&
                     *rec.constant_value == 1;
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace bez
