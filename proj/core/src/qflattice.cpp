#include "x0quartic/qflattice.hpp"

#include <algorithm>
#include <cmath>

#include "x0quartic/checked.hpp"
#include "x0quartic/error.hpp"

namespace x0quartic::qflattice {

namespace {

bool canonical(std::vector<std::int64_t> const& x) {
    for (auto v : x)
        if (v != 0) return v > 0;
    return false;
}

// The integers t with d * (t - c)^2 <= budget form an interval around c.
// Bounds are guessed in long double and then settled exactly.
struct Interval {
    std::int64_t lo = 1, hi = 0;
    std::int64_t nearest = 0;
    bool empty() const { return lo > hi; }
};

Interval coordinate_range(Rational const& d, Rational const& c, Rational const& budget) {
    auto fits = [&](std::int64_t t) {
        Rational off = Rational(t) - c;
        return d * off * off <= budget;
    };
    Interval r;
    r.nearest = (c + Rational(1, 2)).floor();
    if (!fits(r.nearest)) return r;
    long double radius = std::sqrt(std::max<long double>(0, (budget / d).to_long_double()));
    long double center = c.to_long_double();
    r.hi = std::max<std::int64_t>(r.nearest, static_cast<std::int64_t>(std::floor(center + radius)));
    r.lo = std::min<std::int64_t>(r.nearest, static_cast<std::int64_t>(std::ceil(center - radius)));
    while (r.hi > r.nearest && !fits(r.hi)) --r.hi;
    while (fits(r.hi + 1)) ++r.hi;
    while (r.lo < r.nearest && !fits(r.lo)) ++r.lo;
    while (fits(r.lo - 1)) --r.lo;
    return r;
}

class Enumerator {
public:
    Enumerator(PDForm const& form, std::int64_t bound)
        : f_(form), bound_(bound), x_(form.dim, 0) {}

    std::vector<LatticeVector> run() {
        descend(f_.dim, Rational(bound_));
        return std::move(out_);
    }

private:
    void descend(std::size_t level, Rational const& budget) {
        if (level == 0) {
            emit();
            return;
        }
        std::size_t i = level - 1;
        Rational c;
        for (std::size_t j = i + 1; j < f_.dim; ++j) c -= f_.L[j][i] * Rational(x_[j]);
        Interval r = coordinate_range(f_.D[i], c, budget);
        if (r.empty()) return;
        auto visit = [&](std::int64_t t) {
            x_[i] = t;
            Rational off = Rational(t) - c;
            descend(i, budget - f_.D[i] * off * off);
        };
        for (std::int64_t t = r.nearest; t >= r.lo; --t) visit(t);
        for (std::int64_t t = r.nearest + 1; t <= r.hi; ++t) visit(t);
        x_[i] = 0;
    }

    void emit() {
        if (!canonical(x_)) return;
        std::int64_t v = quadratic_value(f_.gram, x_);
        if (v <= 0 || v > bound_) throw InternalError("enumerated vector fails the integer re-check");
        out_.push_back({x_, v});
    }

    PDForm const& f_;
    std::int64_t bound_;
    std::vector<std::int64_t> x_;
    std::vector<LatticeVector> out_;
};

void require_nonempty(PDForm const& form) {
    if (form.dim == 0) throw DomainError("zero-dimensional form");
}

}  // namespace

PDForm ldl_decompose(IntMatrix const& gram) {
    if (gram.empty()) throw DomainError("zero-dimensional form");
    if (!is_symmetric(gram)) throw DomainError("gram matrix is not symmetric");
    std::size_t n = gram.size();
    PDForm f;
    f.dim = n;
    f.gram = gram;
    f.L.assign(n, std::vector<Rational>(n, Rational(0)));
    f.D.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        f.L[i][i] = Rational(1);
        Rational d(gram[i][i]);
        for (std::size_t k = 0; k < i; ++k) d -= f.L[i][k] * f.L[i][k] * f.D[k];
        if (d.sign() <= 0)
            throw NotPositiveDefiniteError(i + 1,
                                           "leading minor " + std::to_string(i + 1) + " has pivot " + d.to_string());
        f.D[i] = d;
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational s(gram[j][i]);
            for (std::size_t k = 0; k < i; ++k) s -= f.L[j][k] * f.L[i][k] * f.D[k];
            f.L[j][i] = s / d;
        }
    }
    return f;
}

EnumerationResult enumerate_up_to(PDForm const& form, std::int64_t bound) {
    require_nonempty(form);
    if (bound < 1) throw DomainError("enumeration bound must be positive");
    EnumerationResult res;
    res.bound = bound;
    res.vectors = Enumerator(form, bound).run();
    std::sort(res.vectors.begin(), res.vectors.end(), [](LatticeVector const& a, LatticeVector const& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.coords > b.coords;
    });
    if (!res.vectors.empty()) res.minimum = res.vectors.front().value;
    return res;
}

EnumerationResult enumerate_for_target(PDForm const& form, std::int64_t target) {
    if (target < 1) throw DomainError("target must be positive");
    EnumerationResult res = enumerate_up_to(form, target);
    TargetCheck t{target, false, std::nullopt};
    for (auto const& v : res.vectors)
        if (v.value == target) {
            t.found = true;
            t.witness = v.coords;
            break;
        }
    res.target = t;
    return res;
}

TargetCheck represents(PDForm const& form, std::int64_t k) { return *enumerate_for_target(form, k).target; }

Minimum minimum(PDForm const& form) {
    require_nonempty(form);
    std::int64_t b = form.gram[0][0];
    for (std::size_t i = 1; i < form.dim; ++i) b = std::min(b, form.gram[i][i]);
    auto res = enumerate_up_to(form, b);
    if (res.vectors.empty()) throw InternalError("no vector found below the least diagonal entry");
    return {res.vectors.front().value, res.vectors.front().coords};
}

}  // namespace x0quartic::qflattice
