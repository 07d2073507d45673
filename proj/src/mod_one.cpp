#include "gorenstein/mod_one.hpp"

#include "gorenstein/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace gorenstein {

namespace {

const Rational kOne{1};

bool in_unit_interval(const Rational& r) { return r.sign() >= 0 && r < kOne; }

}  // namespace

ModOneVector::ModOneVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!in_unit_interval(entries_[i])) {
            throw std::invalid_argument("coordinate " + std::to_string(i) + " = " + entries_[i].to_string() +
                                        " is outside [0,1)");
        }
    }
}

ModOneVector::ModOneVector(std::initializer_list<Rational> entries)
    : ModOneVector(std::vector<Rational>(entries)) {}

ModOneVector ModOneVector::zero(std::size_t width) {
    ModOneVector v;
    v.entries_.assign(width, Rational{});
    return v;
}

ModOneVector ModOneVector::from_reals(std::span<const Rational> values) {
    ModOneVector v;
    v.entries_.reserve(values.size());
    for (const auto& x : values) v.entries_.push_back(x.frac());
    return v;
}

ModOneVector ModOneVector::parse(std::span<const std::string> values) {
    std::vector<Rational> entries;
    entries.reserve(values.size());
    for (const auto& s : values) entries.push_back(Rational::parse(s));
    return ModOneVector(std::move(entries));
}

bool ModOneVector::is_zero() const {
    for (const auto& x : entries_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

std::vector<std::size_t> ModOneVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!entries_[i].is_zero()) out.push_back(i);
    }
    return out;
}

ModOneVector ModOneVector::padded(std::size_t count) const {
    ModOneVector v = *this;
    v.entries_.resize(entries_.size() + count);
    return v;
}

ModOneVector ModOneVector::select(std::span<const std::size_t> indices) const {
    ModOneVector v;
    v.entries_.reserve(indices.size());
    for (std::size_t i : indices) v.entries_.push_back(entries_.at(i));
    return v;
}

std::vector<std::string> ModOneVector::to_strings() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& x : entries_) out.push_back(x.to_string());
    return out;
}

std::string ModOneVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ",";
        out += entries_[i].to_string();
    }
    return out + ")";
}

std::size_t ModOneVector::hash() const {
    std::size_t h = entries_.size();
    for (const auto& x : entries_) h = h * 1000003ULL ^ x.hash();
    return h;
}

std::strong_ordering operator<=>(const ModOneVector& a, const ModOneVector& b) {
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                  b.entries_.end());
}

ModOneVector add_mod1(const ModOneVector& a, const ModOneVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("add_mod1: length mismatch " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
    }
    std::vector<Rational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
        if (out[i] >= kOne) out[i] -= kOne;
    }
    return ModOneVector(std::move(out));
}

ModOneVector sub_mod1(const ModOneVector& a, const ModOneVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("sub_mod1: length mismatch " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
    }
    std::vector<Rational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
        if (out[i].sign() < 0) out[i] += kOne;
    }
    return ModOneVector(std::move(out));
}

ModOneVector scale_mod1(const ModOneVector& a, std::uint64_t t) {
    std::vector<Rational> out;
    out.reserve(a.size());
    const BigInt factor(static_cast<unsigned long>(t));
    for (const auto& x : a) {
        BigInt n = x.num() * factor;
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), x.den().get_mpz_t());
        out.emplace_back(r, x.den());
    }
    return ModOneVector(std::move(out));
}

Rational coordinate_sum(const ModOneVector& a) {
    mpq_class acc(0);
    for (const auto& x : a) acc += x.raw();
    return Rational(acc);
}

std::int64_t height(const ModOneVector& a) {
    const Rational s = coordinate_sum(a);
    if (!s.is_integer()) {
        throw NonIntegerHeight("coordinate sum " + s.to_string() + " of " + a.to_string() +
                               " is not an integer; vector not in a valid height-graded group");
    }
    return to_int64(s.num());
}

std::uint64_t order_of(const ModOneVector& a) {
    BigInt l(1);
    for (const auto& x : a) {
        BigInt d = x.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    if (!l.fits_ulong_p()) throw std::overflow_error("element order exceeds 64 bits");
    return l.get_ui();
}

Rational shift_sum_delta(std::int64_t d, std::int64_t n, std::int64_t s) {
    if (d <= 0 || n <= 0) throw std::out_of_range("shift_sum_delta: d and n must be positive");
    if (s < 0 || s >= n * d) {
        throw std::out_of_range("shift_sum_delta: s = " + std::to_string(s) + " outside [0, " +
                                std::to_string(n * d) + ")");
    }
    const Rational alpha(s, n * d);
    Rational shifted;
    Rational base;
    for (std::int64_t j = 0; j < d; ++j) {
        const Rational point(j, d);
        shifted += (point + alpha).frac();
        base += point;
    }
    return shifted - base;
}

ModOneVector blocks(std::initializer_list<std::pair<Rational, std::size_t>> parts) {
    std::vector<Rational> entries;
    for (const auto& [value, count] : parts) entries.insert(entries.end(), count, value);
    return ModOneVector(std::move(entries));
}

}  // namespace gorenstein
