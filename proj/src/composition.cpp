#include "exhd/composition.hpp"

#include <numeric>
#include <stdexcept>

namespace exhd {

Composition::Composition(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int v : counts_) {
        if (v < 0) throw std::domain_error("composition with a negative count");
        order_ += v;
    }
}

Composition Composition::zero(int parts) { return Composition(std::vector<int>(static_cast<std::size_t>(parts), 0)); }

Composition Composition::unit(int parts, int j) {
    std::vector<int> v(static_cast<std::size_t>(parts), 0);
    v.at(static_cast<std::size_t>(j)) = 1;
    return Composition(std::move(v));
}

bool Composition::dominates(const Composition& c) const {
    if (c.parts() != parts()) return false;
    for (std::size_t j = 0; j < counts_.size(); ++j) {
        if (c.counts_[j] > counts_[j]) return false;
    }
    return true;
}

Composition Composition::operator+(const Composition& o) const {
    if (o.parts() != parts()) throw std::domain_error("composition size mismatch");
    std::vector<int> v(counts_);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += o.counts_[j];
    return Composition(std::move(v));
}

Composition Composition::operator-(const Composition& o) const {
    if (o.parts() != parts()) throw std::domain_error("composition size mismatch");
    std::vector<int> v(counts_);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= o.counts_[j];
    return Composition(std::move(v));
}

Composition Composition::plus_unit(int j) const {
    std::vector<int> v(counts_);
    ++v.at(static_cast<std::size_t>(j));
    return Composition(std::move(v));
}

std::string Composition::to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < counts_.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(counts_[j]);
    }
    return s + ")";
}

std::uint64_t composition_count(int n, int parts) {
    if (n < 0 || parts < 0) return 0;
    if (parts == 0) return n == 0 ? 1 : 0;
    // C(n+parts-1, parts-1) by the multiplicative formula; every prefix is integral.
    std::uint64_t r = 1;
    for (int t = 1; t < parts; ++t) {
        r = r * static_cast<std::uint64_t>(n + t) / static_cast<std::uint64_t>(t);
    }
    return r;
}

namespace {

void emit(int remaining, std::size_t pos, std::vector<int>& cur, std::vector<Composition>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur[pos] = v;
        emit(remaining - v, pos + 1, cur, out);
    }
}

}  // namespace

std::vector<Composition> compositions(int n, int parts) {
    if (parts < 0 || n < 0) throw std::domain_error("compositions: negative argument");
    std::vector<Composition> out;
    if (parts == 0) {
        if (n == 0) out.emplace_back(std::vector<int>{});
        return out;
    }
    out.reserve(composition_count(n, parts));
    std::vector<int> cur(static_cast<std::size_t>(parts), 0);
    emit(n, 0, cur, out);
    return out;
}

std::vector<Composition> compositions_up_to(int n, int parts) {
    std::vector<Composition> out;
    for (int a = 0; a <= n; ++a) {
        auto layer = compositions(a, parts);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::size_t composition_rank(const Composition& c) {
    std::size_t rank = 0;
    int remaining = c.order();
    const int parts = c.parts();
    for (int p = 0; p + 1 < parts; ++p) {
        // Compositions with a larger value at position p come first.
        for (int v = remaining; v > c[p]; --v) {
            rank += composition_count(remaining - v, parts - p - 1);
        }
        remaining -= c[p];
    }
    return rank;
}

}  // namespace exhd
