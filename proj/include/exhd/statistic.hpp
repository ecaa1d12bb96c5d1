#pragma once

#include <stdexcept>
#include <vector>

#include "exhd/composition.hpp"
#include "exhd/laws.hpp"
#include "exhd/linalg.hpp"

namespace exhd {

/// A function on the weak compositions N(order, K), i.e. a symmetric
/// function on D^order that is constant on each count class. Values are
/// stored in compositions(order, K) order.
template <class Tag>
class ClassFunction {
public:
    ClassFunction() = default;
    ClassFunction(int order, int alphabet)
        : order_(order), alphabet_(alphabet), values_(composition_count(order, alphabet)) {}
    ClassFunction(int order, int alphabet, Vector values)
        : order_(order), alphabet_(alphabet), values_(std::move(values)) {
        if (values_.size() != composition_count(order, alphabet)) {
            throw std::invalid_argument("class function needs one value per composition");
        }
    }

    int order() const { return order_; }
    int alphabet_size() const { return alphabet_; }
    std::size_t size() const { return values_.size(); }

    const Rational& at(const Composition& c) const { return values_.at(index(c)); }
    Rational& at(const Composition& c) { return values_.at(index(c)); }
    const Rational& operator[](std::size_t r) const { return values_[r]; }
    Rational& operator[](std::size_t r) { return values_[r]; }

    const Vector& values() const { return values_; }
    std::vector<Composition> domain() const { return compositions(order_, alphabet_); }
    bool is_zero() const { return exhd::is_zero(values_); }

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.order_ == b.order_ && a.alphabet_ == b.alphabet_ && a.values_ == b.values_;
    }
    ClassFunction& operator+=(const ClassFunction& o) {
        check_same(o);
        for (std::size_t r = 0; r < values_.size(); ++r) values_[r] += o.values_[r];
        return *this;
    }
    ClassFunction& operator-=(const ClassFunction& o) {
        check_same(o);
        for (std::size_t r = 0; r < values_.size(); ++r) values_[r] -= o.values_[r];
        return *this;
    }
    ClassFunction& operator*=(const Rational& s) {
        for (auto& v : values_) v *= s;
        return *this;
    }

private:
    std::size_t index(const Composition& c) const {
        if (c.parts() != alphabet_ || c.order() != order_) {
            throw std::domain_error("composition " + c.to_string() + " outside the domain of this function");
        }
        return composition_rank(c);
    }
    void check_same(const ClassFunction& o) const {
        if (o.order_ != order_ || o.alphabet_ != alphabet_) throw std::domain_error("class function shape mismatch");
    }

    int order_ = 0;
    int alphabet_ = 0;
    Vector values_;
};

struct KernelTag {};
struct StatisticTag {};

/// Symmetric kernel phi of order k.
using SymmetricKernel = ClassFunction<KernelTag>;
/// Symmetric statistic T(X_1..X_n).
using SymmetricStatistic = ClassFunction<StatisticTag>;

/// The U-statistic sum over k-subsets of phi. On a class i:
///   F(i) = sum_{c <= i, |c| = k} prod_j C(i_j, c_j) phi(c).
SymmetricStatistic u_statistic(const SymmetricKernel& phi, int n);

/// Matrix of the map phi -> u_statistic(phi, n); rows N(n,K), columns N(k,K).
Matrix u_statistic_matrix(int k, int n, int alphabet);

/// E[T1 T2] = sum_i multinomial(i) P_n(i) T1(i) T2(i).
Rational inner_product(const ExchangeableLaw& law, const SymmetricStatistic& t1, const SymmetricStatistic& t2);

/// Images of the indicator kernels of N(k,K); spans SU_k(X_[n]).
std::vector<SymmetricStatistic> su_basis(const ExchangeableLaw& law, int n, int k);

}  // namespace exhd
