#include "hopfdepth/hopf_algebra.hpp"

#include <algorithm>
#include <functional>

#include "hopfdepth/errors.hpp"

namespace hopfdepth {

SparseVector to_sparse(const Vector& v) {
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.push_back({i, v[i]});
    return out;
}

Vector to_dense(const SparseVector& v, std::size_t dim) {
    Vector out(dim);
    for (const auto& t : v) out.at(t.index) = t.value;
    return out;
}

namespace {

void check_sparse(const SparseVector& v, std::size_t d, const char* what) {
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].index >= d) throw DimensionMismatch(std::string(what) + ": index out of range");
        if (k > 0 && v[k - 1].index >= v[k].index)
            throw DimensionMismatch(std::string(what) + ": entries not strictly sorted");
        if (v[k].value.is_zero()) throw DimensionMismatch(std::string(what) + ": explicit zero entry");
    }
}

void add_scaled(Vector& acc, const Scalar& c, const SparseVector& v) {
    if (c.is_zero()) return;
    for (const auto& t : v) acc[t.index] += c * t.value;
}

}  // namespace

HopfAlgebra::HopfAlgebra(HopfData data, std::string name)
    : name_(std::move(name)), dim_(data.labels.size()), data_(std::move(data)) {
    const std::size_t d = dim_;
    if (d == 0) throw DimensionMismatch("Hopf algebra must have positive dimension");
    if (data_.mult.size() != d * d) throw DimensionMismatch("mult must have d*d entries");
    if (data_.comult.size() != d) throw DimensionMismatch("comult must have d entries");
    if (data_.counit.size() != d) throw DimensionMismatch("counit must have d entries");
    if (data_.unit.size() != d) throw DimensionMismatch("unit must have d entries");
    if (data_.antipode.size() != d) throw DimensionMismatch("antipode must have d entries");
    for (const auto& v : data_.mult) check_sparse(v, d, "mult");
    for (const auto& v : data_.antipode) check_sparse(v, d, "antipode");
    for (const auto& t : data_.comult)
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (t[k].left >= d || t[k].right >= d) throw DimensionMismatch("comult: index out of range");
            if (k > 0 && std::pair(t[k - 1].left, t[k - 1].right) >= std::pair(t[k].left, t[k].right))
                throw DimensionMismatch("comult: entries not strictly sorted");
            if (t[k].value.is_zero()) throw DimensionMismatch("comult: explicit zero entry");
        }
}

Vector HopfAlgebra::basis_vector(std::size_t i) const {
    Vector v(dim_);
    v.at(i) = Scalar(1);
    return v;
}

Vector HopfAlgebra::multiply(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("multiply: vector length");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            add_scaled(out, x[i] * y[j], product(i, j));
        }
    }
    return out;
}

Vector HopfAlgebra::multiply_left_basis(std::size_t i, const Vector& x) const {
    Vector out(dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        if (!x[j].is_zero()) add_scaled(out, x[j], product(i, j));
    return out;
}

Vector HopfAlgebra::multiply_right_basis(const Vector& x, std::size_t i) const {
    Vector out(dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        if (!x[j].is_zero()) add_scaled(out, x[j], product(j, i));
    return out;
}

Scalar HopfAlgebra::counit_of(const Vector& x) const {
    Scalar s;
    for (std::size_t i = 0; i < dim_; ++i)
        if (!x[i].is_zero()) s += x[i] * data_.counit[i];
    return s;
}

Vector HopfAlgebra::antipode_of(const Vector& x) const {
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) add_scaled(out, x[i], antipode(i));
    return out;
}

bool HopfAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (product(i, j) != product(j, i)) return false;
    return true;
}

bool HopfAlgebra::is_cocommutative() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        SparseTensor2 flipped;
        for (const auto& t : coproduct(i)) flipped.push_back({t.right, t.left, t.value});
        std::sort(flipped.begin(), flipped.end(),
                  [](const Term2& a, const Term2& b) { return std::pair(a.left, a.right) < std::pair(b.left, b.right); });
        if (flipped != coproduct(i)) return false;
    }
    return true;
}

// ---- axioms ---------------------------------------------------------------------

bool AxiomReport::all_passed() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.passed; });
}

std::vector<std::string> AxiomReport::failures() const {
    std::vector<std::string> out;
    for (const auto& a : axioms)
        if (!a.passed) out.push_back(a.name);
    return out;
}

namespace {

// Dense element of H⊗H, index a*d + b.
Vector coproduct_dense(const HopfAlgebra& h, const Vector& x) {
    const std::size_t d = h.dimension();
    Vector out(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        for (const auto& t : h.coproduct(i)) out[t.left * d + t.right] += x[i] * t.value;
    }
    return out;
}

bool associativity(const HopfAlgebra& h) {
    const std::size_t d = h.dimension();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vector ij = to_dense(h.product(i, j), d);
            for (std::size_t k = 0; k < d; ++k) {
                const Vector jk = to_dense(h.product(j, k), d);
                if (h.multiply_right_basis(ij, k) != h.multiply_left_basis(i, jk)) return false;
            }
        }
    return true;
}

bool unit_law(const HopfAlgebra& h) {
    for (std::size_t i = 0; i < h.dimension(); ++i) {
        const Vector b = h.basis_vector(i);
        if (h.multiply(h.unit(), b) != b || h.multiply(b, h.unit()) != b) return false;
    }
    return true;
}

bool coassociativity(const HopfAlgebra& h) {
    const std::size_t d = h.dimension();
    for (std::size_t i = 0; i < d; ++i) {
        Vector left(d * d * d), right(d * d * d);
        for (const auto& t : h.coproduct(i)) {
            for (const auto& u : h.coproduct(t.left))  // (Δ⊗id)Δ
                left[(u.left * d + u.right) * d + t.right] += t.value * u.value;
            for (const auto& u : h.coproduct(t.right))  // (id⊗Δ)Δ
                right[(t.left * d + u.left) * d + u.right] += t.value * u.value;
        }
        if (left != right) return false;
    }
    return true;
}

bool counit_law(const HopfAlgebra& h) {
    const std::size_t d = h.dimension();
    for (std::size_t i = 0; i < d; ++i) {
        Vector left(d), right(d);
        for (const auto& t : h.coproduct(i)) {
            left[t.right] += h.counit(t.left) * t.value;
            right[t.left] += t.value * h.counit(t.right);
        }
        const Vector b = h.basis_vector(i);
        if (left != b || right != b) return false;
    }
    return true;
}

bool coproduct_multiplicative(const HopfAlgebra& h) {
    const std::size_t d = h.dimension();
    // Δ(1) = 1⊗1
    Vector unit_unit(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) unit_unit[a * d + b] = h.unit()[a] * h.unit()[b];
    if (coproduct_dense(h, h.unit()) != unit_unit) return false;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vector lhs = coproduct_dense(h, to_dense(h.product(i, j), d));
            Vector rhs(d * d);
            for (const auto& s : h.coproduct(i))
                for (const auto& t : h.coproduct(j)) {
                    const Scalar c = s.value * t.value;
                    for (const auto& p : h.product(s.left, t.left))
                        for (const auto& q : h.product(s.right, t.right))
                            rhs[p.index * d + q.index] += c * p.value * q.value;
                }
            if (lhs != rhs) return false;
        }
    return true;
}

bool counit_multiplicative(const HopfAlgebra& h) {
    const std::size_t d = h.dimension();
    if (h.counit_of(h.unit()) != Scalar(1)) return false;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (h.counit_of(to_dense(h.product(i, j), d)) != h.counit(i) * h.counit(j)) return false;
    return true;
}

bool antipode_identity(const HopfAlgebra& h) {
    const std::size_t d = h.dimension();
    for (std::size_t i = 0; i < d; ++i) {
        Vector left(d), right(d);
        for (const auto& t : h.coproduct(i)) {
            for (const auto& s : h.antipode(t.left))
                for (const auto& p : h.product(s.index, t.right)) left[p.index] += t.value * s.value * p.value;
            for (const auto& s : h.antipode(t.right))
                for (const auto& p : h.product(t.left, s.index)) right[p.index] += t.value * s.value * p.value;
        }
        Vector expected(d);
        for (std::size_t k = 0; k < d; ++k) expected[k] = h.counit(i) * h.unit()[k];
        if (left != expected || right != expected) return false;
    }
    return true;
}

bool antipode_involutive(const HopfAlgebra& h) {
    for (std::size_t i = 0; i < h.dimension(); ++i)
        if (h.antipode_of(to_dense(h.antipode(i), h.dimension())) != h.basis_vector(i)) return false;
    return true;
}

}  // namespace

AxiomReport verify_hopf_axioms(const HopfAlgebra& h) {
    using Check = bool (*)(const HopfAlgebra&);
    static constexpr std::pair<const char*, Check> checks[] = {
        {"associativity", associativity},
        {"unit", unit_law},
        {"coassociativity", coassociativity},
        {"counit", counit_law},
        {"comultiplication multiplicative", coproduct_multiplicative},
        {"counit multiplicative", counit_multiplicative},
        {"antipode", antipode_identity},
        {"antipode involutive", antipode_involutive},
    };
    AxiomReport report;
    for (const auto& [name, check] : checks) report.axioms.push_back({name, check(h)});
    return report;
}

void require_hopf(const HopfAlgebra& h) {
    const auto report = verify_hopf_axioms(h);
    if (report.all_passed()) return;
    std::string msg = "Hopf axioms failed for " + (h.name().empty() ? std::string("algebra") : h.name()) + ":";
    for (const auto& f : report.failures()) msg += " " + f + ";";
    throw AxiomError(msg);
}

// ---- integrals ------------------------------------------------------------------

AlgebraElement::AlgebraElement(HopfAlgebraPtr p, Vector c) : parent(std::move(p)), coords(std::move(c)) {
    if (!parent) throw Error("algebra element without parent");
    if (coords.size() != parent->dimension()) throw DimensionMismatch("element length does not match dimension");
}

AlgebraElement idempotent_integral(const HopfAlgebraPtr& hp) {
    const HopfAlgebra& h = *hp;
    const std::size_t d = h.dimension();
    // row (i,k), column j:  [b_i·b_j]_k − ε(b_i)·δ_jk
    Matrix<Scalar> system;
    system.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            Vector row(d);
            for (std::size_t j = 0; j < d; ++j)
                for (const auto& t : h.product(i, j))
                    if (t.index == k) row[j] += t.value;
            row[k] -= h.counit(i);
            if (!is_zero_row(row)) system.push_back(std::move(row));
        }
    const auto space = nullspace(system, d);
    if (space.size() != 1)
        throw MalformedAlgebra("integral space has dimension " + std::to_string(space.size()) + ", expected 1");
    const Scalar eps = h.counit_of(space[0]);
    if (eps.is_zero()) throw NotSemisimple("counit vanishes on the integral space");
    Vector lambda = space[0];
    const Scalar inv = eps.inverse();
    for (auto& x : lambda) x *= inv;
    return AlgebraElement(hp, std::move(lambda));
}

bool is_central(const AlgebraElement& x) {
    const HopfAlgebra& h = *x.parent;
    for (std::size_t i = 0; i < h.dimension(); ++i)
        if (h.multiply_left_basis(i, x.coords) != h.multiply_right_basis(x.coords, i)) return false;
    return true;
}

}  // namespace hopfdepth
