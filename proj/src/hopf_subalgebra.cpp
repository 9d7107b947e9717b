#include "hopfdepth/hopf_subalgebra.hpp"

#include "hopfdepth/errors.hpp"

namespace hopfdepth {
namespace {

SparseTensor2 sparse_tensor(const Matrix<Scalar>& dense) {
    SparseTensor2 out;
    for (std::size_t a = 0; a < dense.size(); ++a)
        for (std::size_t b = 0; b < dense[a].size(); ++b)
            if (!dense[a][b].is_zero()) out.push_back({a, b, dense[a][b]});
    return out;
}

/// x·y where y is given sparsely.
Vector multiply_right_sparse(const HopfAlgebra& h, const Vector& x, const SparseVector& y) {
    Vector out(h.dimension());
    for (const auto& t : y) axpy(out, t.value, h.multiply_right_basis(x, t.index));
    return out;
}

}  // namespace

HopfSubalgebra HopfSubalgebra::from_inclusion(HopfAlgebraPtr parent, Matrix<Scalar> rows,
                                              std::vector<std::string> labels, std::string name) {
    if (!parent) throw SubalgebraError("subalgebra without parent");
    const HopfAlgebra& h = *parent;
    const std::size_t d = h.dimension();
    const std::size_t k = rows.size();
    if (k == 0) throw SubalgebraError("subalgebra must be nonzero");
    for (const auto& r : rows)
        if (r.size() != d) throw SubalgebraError("inclusion row length does not match parent dimension");
    RowBasis<Scalar> basis;
    try {
        basis = RowBasis<Scalar>(std::move(rows), d);
    } catch (const DimensionMismatch&) {
        throw SubalgebraError("inclusion matrix does not have full row rank");
    }
    const auto& inc = basis.rows();

    HopfData data;
    if (labels.empty())
        for (std::size_t r = 0; r < k; ++r) labels.push_back("x" + std::to_string(r));
    if (labels.size() != k) throw SubalgebraError("label count does not match subalgebra dimension");
    data.labels = std::move(labels);

    auto unit = basis.coordinates(h.unit());
    if (!unit) throw SubalgebraError("1_H is not in the subalgebra");
    data.unit = std::move(*unit);

    data.mult.resize(k * k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t s = 0; s < k; ++s) {
            auto c = basis.coordinates(h.multiply(inc[r], inc[s]));
            if (!c) throw SubalgebraError("subalgebra is not closed under multiplication");
            data.mult[r * k + s] = to_sparse(*c);
        }

    data.comult.resize(k);
    for (std::size_t r = 0; r < k; ++r) {
        // Δ(x_r) as a d×d matrix D; find C with D = incᵀ·C·inc.
        Matrix<Scalar> dmat(d, Vector(d));
        for (std::size_t i = 0; i < d; ++i) {
            if (inc[r][i].is_zero()) continue;
            for (const auto& t : h.coproduct(i)) dmat[t.left][t.right] += inc[r][i] * t.value;
        }
        Matrix<Scalar> y(d, Vector(k));
        for (std::size_t j = 0; j < d; ++j) {
            if (is_zero_row(dmat[j])) continue;
            auto c = basis.coordinates(dmat[j]);
            if (!c) throw SubalgebraError("Δ(K) is not contained in H⊗K");
            y[j] = std::move(*c);
        }
        Matrix<Scalar> cmat(k, Vector(k));
        for (std::size_t s = 0; s < k; ++s) {
            Vector column(d);
            for (std::size_t j = 0; j < d; ++j) column[j] = y[j][s];
            auto c = basis.coordinates(column);
            if (!c) throw SubalgebraError("Δ(K) is not contained in K⊗K");
            for (std::size_t rr = 0; rr < k; ++rr) cmat[rr][s] = (*c)[rr];
        }
        data.comult[r] = sparse_tensor(cmat);
    }

    data.antipode.resize(k);
    data.counit.resize(k);
    for (std::size_t r = 0; r < k; ++r) {
        auto c = basis.coordinates(h.antipode_of(inc[r]));
        if (!c) throw SubalgebraError("subalgebra is not closed under the antipode");
        data.antipode[r] = to_sparse(*c);
        data.counit[r] = h.counit_of(inc[r]);
    }

    if (d % k != 0)
        throw SubalgebraError("dim K = " + std::to_string(k) + " does not divide dim H = " + std::to_string(d));
    auto algebra = std::make_shared<const HopfAlgebra>(std::move(data), std::move(name));
    require_hopf(*algebra);
    return HopfSubalgebra(std::move(parent), std::move(basis), std::move(algebra));
}

Matrix<Scalar> augmentation_ideal(const HopfSubalgebra& k) {
    const HopfAlgebra& h = *k.parent();
    Matrix<Scalar> eps(1, Vector(k.dimension()));
    for (std::size_t r = 0; r < k.dimension(); ++r) eps[0][r] = h.counit_of(k.inclusion()[r]);
    Matrix<Scalar> out;
    for (const auto& c : nullspace(eps, k.dimension())) out.push_back(k.embed(c));
    return out;
}

Subspace<Scalar> left_ideal_span(const HopfSubalgebra& k) {
    const HopfAlgebra& h = *k.parent();
    Subspace<Scalar> span(h.dimension());
    for (const auto& y : augmentation_ideal(k))
        for (std::size_t i = 0; i < h.dimension(); ++i) span.insert(h.multiply_left_basis(i, y));
    return span;
}

Subspace<Scalar> right_ideal_span(const HopfSubalgebra& k) {
    const HopfAlgebra& h = *k.parent();
    Subspace<Scalar> span(h.dimension());
    for (const auto& y : augmentation_ideal(k))
        for (std::size_t i = 0; i < h.dimension(); ++i) span.insert(h.multiply_right_basis(y, i));
    return span;
}

bool adjoint_stability_test(const HopfSubalgebra& k) {
    const HopfAlgebra& h = *k.parent();
    for (std::size_t i = 0; i < h.dimension(); ++i)
        for (const auto& x : k.inclusion()) {
            Vector ad(h.dimension());
            for (const auto& t : h.coproduct(i)) {
                const Vector hx = h.multiply_left_basis(t.left, x);
                axpy(ad, t.value, multiply_right_sparse(h, hx, h.antipode(t.right)));
            }
            if (!k.contains(ad)) return false;
        }
    return true;
}

bool ideal_test(const HopfSubalgebra& k) { return left_ideal_span(k).same_span(right_ideal_span(k)); }

QuotientHopf quotient_hopf(const HopfSubalgebra& k) {
    if (!ideal_test(k)) throw NotNormal("quotient requires a normal Hopf subalgebra (HK+ != K+H)");
    const HopfAlgebra& h = *k.parent();
    const std::size_t d = h.dimension();
    const Subspace<Scalar> ideal = left_ideal_span(k);

    Subspace<Scalar> span = ideal;
    std::vector<std::size_t> complement;
    for (std::size_t i = 0; i < d; ++i)
        if (span.insert(h.basis_vector(i))) complement.push_back(i);
    const std::size_t m = complement.size();
    if (m * k.dimension() != d)
        throw Error("quotient dimension " + std::to_string(m) + " != |H|/|K| = " + std::to_string(k.index()));

    Matrix<Scalar> full = ideal.rows();
    for (auto c : complement) full.push_back(h.basis_vector(c));
    const RowBasis<Scalar> full_basis(std::move(full), d);
    const std::size_t offset = ideal.dimension();
    Matrix<Scalar> proj(d, Vector(m));
    for (std::size_t i = 0; i < d; ++i) {
        const auto c = full_basis.coordinates(h.basis_vector(i));
        for (std::size_t s = 0; s < m; ++s) proj[i][s] = (*c)[offset + s];
    }
    auto pi = [&](const Vector& v) {
        Vector out(m);
        for (std::size_t i = 0; i < d; ++i) axpy(out, v[i], proj[i]);
        return out;
    };

    HopfData data;
    for (auto c : complement) data.labels.push_back("[" + h.labels()[c] + "]");
    data.mult.resize(m * m);
    data.comult.resize(m);
    data.antipode.resize(m);
    data.counit.resize(m);
    for (std::size_t s = 0; s < m; ++s) {
        const std::size_t bs = complement[s];
        for (std::size_t t = 0; t < m; ++t)
            data.mult[s * m + t] = to_sparse(pi(to_dense(h.product(bs, complement[t]), d)));
        Matrix<Scalar> dm(m, Vector(m));
        for (const auto& term : h.coproduct(bs))
            for (std::size_t a = 0; a < m; ++a) {
                if (proj[term.left][a].is_zero()) continue;
                for (std::size_t b = 0; b < m; ++b)
                    if (!proj[term.right][b].is_zero()) dm[a][b] += term.value * proj[term.left][a] * proj[term.right][b];
            }
        data.comult[s] = sparse_tensor(dm);
        data.counit[s] = h.counit(bs);
        data.antipode[s] = to_sparse(pi(to_dense(h.antipode(bs), d)));
    }
    data.unit = pi(h.unit());
    auto algebra = std::make_shared<const HopfAlgebra>(std::move(data), h.name() + "//" + k.algebra()->name());
    require_hopf(*algebra);
    return QuotientHopf{std::move(algebra), std::move(proj), std::move(complement)};
}

}  // namespace hopfdepth
