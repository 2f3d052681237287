#include "symker/linalg.hpp"

#include <string>

namespace symker {

namespace {

void check_field(const Scalar& s, const FieldSpec& field) {
    if (s.field() != field)
        throw FieldMismatch("entry over " + s.field().name() + " in a matrix over " + field.name());
}

void check_length(std::size_t got, std::size_t want) {
    if (got != want)
        throw DimensionMismatch("vector of length " + std::to_string(got) + ", expected " +
                                std::to_string(want));
}

}  // namespace

Vector zero_vector(const FieldSpec& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

bool is_zero(std::span<const Scalar> v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

SparseVector to_sparse(std::span<const Scalar> v) {
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.emplace_back(i, v[i]);
    return out;
}

Vector to_dense(const SparseVector& v, const FieldSpec& field, std::size_t n) {
    Vector out = zero_vector(field, n);
    for (const auto& [c, s] : v) {
        if (c >= n) throw DimensionMismatch("sparse index " + std::to_string(c) + " out of range");
        out[c] = s;
    }
    return out;
}

// --- ExactMatrix ------------------------------------------------------------

ExactMatrix::ExactMatrix(FieldSpec field, std::size_t ncols, std::vector<Vector> rows)
    : field_(field), ncols_(ncols) {
    rows_.reserve(rows.size());
    for (auto& r : rows) append_row(std::move(r));
}

ExactMatrix ExactMatrix::from_ints(FieldSpec field, const std::vector<std::vector<long>>& rows,
                                   std::size_t ncols) {
    if (!rows.empty()) ncols = rows.front().size();
    ExactMatrix m(field, ncols);
    for (const auto& r : rows) {
        Vector v;
        v.reserve(r.size());
        for (long x : r) v.push_back(Scalar::from_int(field, x));
        m.append_row(std::move(v));
    }
    return m;
}

ExactMatrix ExactMatrix::identity(FieldSpec field, std::size_t n) {
    ExactMatrix m(field, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector v = zero_vector(field, n);
        v[i] = Scalar::one(field);
        m.append_row(std::move(v));
    }
    return m;
}

ExactMatrix ExactMatrix::zero(FieldSpec field, std::size_t nrows, std::size_t ncols) {
    ExactMatrix m(field, ncols);
    for (std::size_t i = 0; i < nrows; ++i) m.append_row(zero_vector(field, ncols));
    return m;
}

void ExactMatrix::append_row(Vector row) {
    check_length(row.size(), ncols_);
    for (const auto& s : row) check_field(s, field_);
    rows_.push_back(std::move(row));
}

void ExactMatrix::append_row(const SparseVector& row) {
    for (const auto& [c, s] : row) check_field(s, field_);
    rows_.push_back(to_dense(row, field_, ncols_));
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(field_, nrows());
    for (std::size_t c = 0; c < ncols_; ++c) {
        Vector v;
        v.reserve(nrows());
        for (const auto& r : rows_) v.push_back(r[c]);
        t.rows_.push_back(std::move(v));
    }
    return t;
}

Vector ExactMatrix::apply(std::span<const Scalar> v) const {
    check_length(v.size(), ncols_);
    Vector out = zero_vector(field_, nrows());
    for (std::size_t r = 0; r < nrows(); ++r)
        for (std::size_t c = 0; c < ncols_; ++c)
            if (!v[c].is_zero() && !rows_[r][c].is_zero()) out[r] += rows_[r][c] * v[c];
    return out;
}

// --- RowSpace -----------------------------------------------------------------

std::vector<std::size_t> RowSpace::pivots() const {
    std::vector<std::size_t> out;
    out.reserve(rows_.size());
    for (const auto& [p, r] : rows_) out.push_back(p);
    return out;
}

void RowSpace::reduce_in_place(Vector& work) const {
    // Rows only have entries at or right of their pivot, so ascending order
    // never reintroduces an already-cleared pivot column.
    for (const auto& [pivot, row] : rows_) {
        if (work[pivot].is_zero()) continue;
        const Scalar factor = work[pivot];
        for (const auto& [c, s] : row) work[c] -= factor * s;
    }
}

bool RowSpace::insert_reduced(Vector work) {
    std::size_t lead = 0;
    while (lead < ncols_ && work[lead].is_zero()) ++lead;
    if (lead == ncols_) return false;
    const Scalar inv = work[lead].inverse();
    SparseVector row;
    for (std::size_t c = lead; c < ncols_; ++c)
        if (!work[c].is_zero()) row.emplace_back(c, work[c] * inv);
    rows_.emplace(lead, std::move(row));
    return true;
}

Vector RowSpace::reduce(std::span<const Scalar> v) const {
    check_length(v.size(), ncols_);
    for (const auto& s : v) check_field(s, field_);
    Vector work(v.begin(), v.end());
    reduce_in_place(work);
    return work;
}

Vector RowSpace::reduce(const SparseVector& v) const {
    for (const auto& [c, s] : v) check_field(s, field_);
    Vector work = to_dense(v, field_, ncols_);
    reduce_in_place(work);
    return work;
}

bool RowSpace::insert(std::span<const Scalar> v) { return insert_reduced(reduce(v)); }
bool RowSpace::insert(const SparseVector& v) { return insert_reduced(reduce(v)); }

ExactMatrix RowSpace::to_rref() const {
    // Back-substitute from the last pivot upwards so each row is cleared on
    // every later pivot column.
    std::vector<std::pair<std::size_t, Vector>> dense;
    dense.reserve(rows_.size());
    for (const auto& [p, r] : rows_) dense.emplace_back(p, to_dense(r, field_, ncols_));
    for (std::size_t i = dense.size(); i-- > 0;) {
        const auto& [pivot, prow] = dense[i];
        for (std::size_t k = 0; k < i; ++k) {
            Vector& target = dense[k].second;
            if (target[pivot].is_zero()) continue;
            const Scalar factor = target[pivot];
            for (std::size_t c = pivot; c < ncols_; ++c)
                if (!prow[c].is_zero()) target[c] -= factor * prow[c];
        }
    }
    ExactMatrix out(field_, ncols_);
    for (auto& [p, r] : dense) out.append_row(std::move(r));
    return out;
}

bool same_row_space(const RowSpace& a, const RowSpace& b) {
    if (a.ncols() != b.ncols()) throw DimensionMismatch("row spaces in different ambients");
    if (a.rank() != b.rank()) return false;
    const ExactMatrix ra = a.to_rref();
    for (const auto& r : ra.rows())
        if (!b.contains(r)) return false;
    return true;
}

bool same_row_space(const std::vector<Vector>& a, const std::vector<Vector>& b,
                    const FieldSpec& field, std::size_t ncols) {
    RowSpace sa(field, ncols), sb(field, ncols);
    for (const auto& v : a) sa.insert(v);
    for (const auto& v : b) sb.insert(v);
    // Mutual residues: every generator of one side reduces to zero in the other.
    for (const auto& v : a)
        if (!sb.contains(v)) return false;
    for (const auto& v : b)
        if (!sa.contains(v)) return false;
    return true;
}

// --- free functions -----------------------------------------------------------

RrefResult rref(const ExactMatrix& m) {
    RowSpace space(m.field(), m.ncols());
    for (const auto& r : m.rows()) space.insert(r);
    RrefResult out{space.to_rref(), space.pivots(), space.rank()};
    return out;
}

std::size_t rank(const ExactMatrix& m) {
    RowSpace space(m.field(), m.ncols());
    for (const auto& r : m.rows()) space.insert(r);
    return space.rank();
}

Vector residue(std::span<const Scalar> v, const ExactMatrix& basis) {
    check_length(v.size(), basis.ncols());
    Vector work(v.begin(), v.end());
    for (const auto& s : work) check_field(s, basis.field());
    for (const auto& row : basis.rows()) {
        std::size_t pivot = 0;
        while (pivot < row.size() && row[pivot].is_zero()) ++pivot;
        if (pivot == row.size()) continue;
        if (work[pivot].is_zero()) continue;
        const Scalar factor = work[pivot] / row[pivot];
        for (std::size_t c = pivot; c < row.size(); ++c)
            if (!row[c].is_zero()) work[c] -= factor * row[c];
    }
    return work;
}

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.ncols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t free = 0; free < m.ncols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(m.field(), m.ncols());
        v[free] = Scalar::one(m.field());
        for (std::size_t i = 0; i < r.rank; ++i) {
            const Scalar& entry = r.matrix(i, free);
            if (!entry.is_zero()) v[r.pivots[i]] = -entry;
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace symker
