#include "sho/subspace.hpp"

#include <stdexcept>

namespace sho {

GradedSubspace::GradedSubspace(ParamsPtr par, BasisIndexPtr idx)
    : par_(std::move(par)), idx_(std::move(idx)) {}

bool GradedSubspace::insert_homogeneous(const Derivation& d, int degree, bool track) {
    auto it = blocks_.find(degree);
    if (it == blocks_.end())
        it = blocks_.emplace(degree, Echelon(par_->p(), idx_->w_dim(degree))).first;
    bool grew = it->second.insert(idx_->w_coords(d, degree));
    if (grew && track) gens_.push_back(d);
    return grew;
}

bool GradedSubspace::insert(const Derivation& d) {
    if (frozen_) throw std::logic_error("GradedSubspace: insert after freeze");
    bool grew = false;
    for (const auto& [deg, comp] : d.graded_components())
        grew |= insert_homogeneous(comp, deg, true);
    return grew;
}

bool GradedSubspace::contains_homogeneous(const Derivation& d, int degree) const {
    auto it = blocks_.find(degree);
    if (it == blocks_.end()) return d.is_zero();
    return it->second.contains(idx_->w_coords(d, degree));
}

bool GradedSubspace::contains(const Derivation& d) const {
    for (const auto& [deg, comp] : d.graded_components())
        if (!contains_homogeneous(comp, deg)) return false;
    return true;
}

std::map<int, int> GradedSubspace::dims() const {
    std::map<int, int> out;
    for (const auto& [deg, block] : blocks_)
        if (block.rank() > 0) out[deg] = block.rank();
    return out;
}

int GradedSubspace::dim() const {
    int total = 0;
    for (const auto& [deg, block] : blocks_) total += block.rank();
    return total;
}

int GradedSubspace::dim_at(int degree) const {
    auto it = blocks_.find(degree);
    return it == blocks_.end() ? 0 : it->second.rank();
}

std::optional<int> GradedSubspace::min_degree() const {
    for (const auto& [deg, block] : blocks_)
        if (block.rank() > 0) return deg;
    return std::nullopt;
}

std::optional<int> GradedSubspace::max_degree() const {
    std::optional<int> best;
    for (const auto& [deg, block] : blocks_)
        if (block.rank() > 0) best = deg;
    return best;
}

void GradedSubspace::freeze() {
    if (frozen_) return;
    int offset = 0;
    for (const auto& [deg, block] : blocks_) {
        if (block.rank() == 0) continue;
        offsets_[deg] = offset;
        auto& bucket = basis_[deg];
        for (const auto& row : block.rows()) {
            bucket.push_back(idx_->w_from_coords(deg, row));
            flat_.push_back(bucket.back());
        }
        offset += block.rank();
    }
    frozen_ = true;
}

const std::vector<Derivation>& GradedSubspace::basis(int degree) const {
    static const std::vector<Derivation> empty;
    if (!frozen_) throw std::logic_error("GradedSubspace: basis before freeze");
    auto it = basis_.find(degree);
    return it == basis_.end() ? empty : it->second;
}

const std::vector<Derivation>& GradedSubspace::flat_basis() const {
    if (!frozen_) throw std::logic_error("GradedSubspace: basis before freeze");
    return flat_;
}

int GradedSubspace::flat_offset(int degree) const { return offsets_.at(degree); }

std::optional<std::vector<std::uint8_t>> GradedSubspace::coords(const Derivation& d) const {
    if (!frozen_) throw std::logic_error("GradedSubspace: coords before freeze");
    std::vector<std::uint8_t> out(flat_.size(), 0);
    for (const auto& [deg, comp] : d.graded_components()) {
        auto it = blocks_.find(deg);
        if (it == blocks_.end()) return std::nullopt;
        auto c = it->second.solve(idx_->w_coords(comp, deg));
        if (!c) return std::nullopt;
        int off = offsets_.at(deg);
        for (std::size_t k = 0; k < c->size(); ++k) out[off + k] = (*c)[k];
    }
    return out;
}

Derivation GradedSubspace::from_coords(const std::vector<std::uint8_t>& v) const {
    if (!frozen_) throw std::logic_error("GradedSubspace: from_coords before freeze");
    if (v.size() != flat_.size()) throw config_error("coordinate vector has wrong length");
    Derivation d(par_);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k]) d += flat_[k].scaled(v[k]);
    return d;
}

bool GradedSubspace::subspace_of(const GradedSubspace& other) const {
    for (const auto& [deg, block] : blocks_)
        for (const auto& row : block.rows())
            if (!other.contains_homogeneous(idx_->w_from_coords(deg, row), deg)) return false;
    return true;
}

GradedSubspace derived_algebra(const GradedSubspace& s) {
    GradedSubspace out(s.params(), s.index());
    const auto& seeds = s.generators();
    // pairwise brackets of a spanning set of s; rank-increasing results
    // become the spanning worklist of the result
    std::vector<Derivation> work;
    for (std::size_t i = 0; i < seeds.size(); ++i)
        for (std::size_t j = i; j < seeds.size(); ++j) {
            Derivation b = bracket(seeds[i], seeds[j]);
            if (!b.is_zero() && out.insert(b)) work.push_back(std::move(b));
        }
    // close under bracket (no-op when s is a genuine subalgebra)
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Derivation c = bracket(work[i], work[j]);
            if (!c.is_zero() && out.insert(c)) work.push_back(std::move(c));
        }
    return out;
}

}  // namespace sho
