#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "torspan/errors.hpp"
#include "torspan/rational.hpp"

namespace torspan {

inline constexpr std::int64_t kDefaultEnumerationCap = 1'000'000;

/**
 * Element of a finitely generated abelian group, written multiplicatively as
 * a vector of exponents over the torsion generators followed by the free
 * generators.  Exponents are kept canonical (torsion reduced mod the
 * generator order) by the owning group's operations.
 */
class GroupElement {
  public:
    GroupElement() = default;
    GroupElement(std::vector<std::int64_t> torsion, std::vector<std::int64_t> free)
        : torsion_(std::move(torsion)), free_(std::move(free)) {}

    const std::vector<std::int64_t>& torsion_exponents() const { return torsion_; }
    const std::vector<std::int64_t>& free_exponents() const { return free_; }

    bool is_identity() const {
        auto zero = [](std::int64_t e) { return e == 0; };
        return std::all_of(torsion_.begin(), torsion_.end(), zero) &&
               std::all_of(free_.begin(), free_.end(), zero);
    }

    auto operator<=>(const GroupElement&) const = default;
    bool operator==(const GroupElement&) const = default;

  private:
    std::vector<std::int64_t> torsion_;
    std::vector<std::int64_t> free_;
};

/**
 * A group Z/n_1 + ... + Z/n_k + Z^r given by its torsion orders and free
 * rank.  All element operations live here so that exponent vectors are
 * always reduced against the right orders.
 */
class AbelianGroup {
  public:
    AbelianGroup(std::vector<std::int64_t> torsion_orders, int free_rank,
                 std::vector<std::string> generator_names = {})
        : torsion_orders_(std::move(torsion_orders)),
          free_rank_(free_rank),
          names_(std::move(generator_names)) {
        if (free_rank_ < 0)
            throw invalid_parameter_error("AbelianGroup: negative free rank");
        for (std::int64_t n : torsion_orders_)
            if (n < 2)
                throw invalid_parameter_error(
                    "AbelianGroup: torsion orders must be >= 2, got " + std::to_string(n));
        const std::size_t generators = torsion_orders_.size() + free_rank_;
        if (names_.empty())
            for (std::size_t i = 0; i < generators; ++i)
                names_.push_back("g" + std::to_string(i + 1));
        if (names_.size() != generators)
            throw invalid_parameter_error("AbelianGroup: generator name count mismatch");
    }

    static AbelianGroup trivial() { return AbelianGroup({}, 0); }
    static AbelianGroup cyclic(std::int64_t n, const std::string& name = "t") {
        return AbelianGroup({n}, 0, {name});
    }

    const std::vector<std::int64_t>& torsion_orders() const { return torsion_orders_; }
    int free_rank() const { return free_rank_; }
    std::size_t torsion_rank() const { return torsion_orders_.size(); }
    const std::vector<std::string>& generator_names() const { return names_; }

    /** Order of the torsion subgroup as an exact integer. */
    Integer torsion_size() const {
        Integer size = 1;
        for (std::int64_t n : torsion_orders_)
            size *= n;
        return size;
    }

    // Structural identity: names are presentation sugar and do not count.
    bool same_structure(const AbelianGroup& o) const {
        return torsion_orders_ == o.torsion_orders_ && free_rank_ == o.free_rank_;
    }

    GroupElement identity() const {
        return GroupElement(std::vector<std::int64_t>(torsion_rank(), 0),
                            std::vector<std::int64_t>(free_rank_, 0));
    }

    /** Canonicalize an exponent vector into an element of this group. */
    GroupElement element(std::vector<std::int64_t> torsion,
                         std::vector<std::int64_t> free = {}) const {
        if (free.empty())
            free.resize(free_rank_, 0);
        check_shape(torsion.size(), free.size());
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            torsion[i] %= torsion_orders_[i];
            if (torsion[i] < 0)
                torsion[i] += torsion_orders_[i];
        }
        return GroupElement(std::move(torsion), std::move(free));
    }

    /** The k-th generator (torsion generators first, then free ones). */
    GroupElement generator(std::size_t k) const {
        std::vector<std::int64_t> torsion(torsion_rank(), 0);
        std::vector<std::int64_t> free(free_rank_, 0);
        if (k < torsion_rank())
            torsion[k] = 1;
        else if (k < torsion_rank() + static_cast<std::size_t>(free_rank_))
            free[k - torsion_rank()] = 1;
        else
            throw structural_error("AbelianGroup::generator: index out of range");
        return GroupElement(std::move(torsion), std::move(free));
    }

    GroupElement mul(const GroupElement& a, const GroupElement& b) const {
        check_member(a);
        check_member(b);
        std::vector<std::int64_t> torsion(torsion_rank());
        std::vector<std::int64_t> free(free_rank_);
        for (std::size_t i = 0; i < torsion.size(); ++i)
            torsion[i] = (a.torsion_exponents()[i] + b.torsion_exponents()[i]) %
                         torsion_orders_[i];
        for (std::size_t i = 0; i < free.size(); ++i)
            free[i] = a.free_exponents()[i] + b.free_exponents()[i];
        return GroupElement(std::move(torsion), std::move(free));
    }

    GroupElement inverse(const GroupElement& a) const {
        check_member(a);
        std::vector<std::int64_t> torsion(torsion_rank());
        std::vector<std::int64_t> free(free_rank_);
        for (std::size_t i = 0; i < torsion.size(); ++i)
            torsion[i] = a.torsion_exponents()[i] == 0
                             ? 0
                             : torsion_orders_[i] - a.torsion_exponents()[i];
        for (std::size_t i = 0; i < free.size(); ++i)
            free[i] = -a.free_exponents()[i];
        return GroupElement(std::move(torsion), std::move(free));
    }

    GroupElement pow(const GroupElement& a, std::int64_t k) const {
        check_member(a);
        std::vector<std::int64_t> torsion(torsion_rank());
        std::vector<std::int64_t> free(free_rank_);
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            // reduce through Integer so e*k cannot overflow on the way
            Integer e = Integer(a.torsion_exponents()[i]) * k % torsion_orders_[i];
            if (e < 0)
                e += torsion_orders_[i];
            torsion[i] = e.convert_to<std::int64_t>();
        }
        for (std::size_t i = 0; i < free.size(); ++i)
            free[i] = a.free_exponents()[i] * k;
        return GroupElement(std::move(torsion), std::move(free));
    }

    bool is_torsion(const GroupElement& a) const {
        check_member(a);
        for (std::int64_t e : a.free_exponents())
            if (e != 0)
                return false;
        return true;
    }

    /**
     * Order of an element: the least common multiple of n_i / gcd(n_i, e_i)
     * over the torsion coordinates, infinite (nullopt) as soon as a free
     * exponent is non-zero.
     */
    std::optional<Integer> order(const GroupElement& a) const {
        if (!is_torsion(a))
            return std::nullopt;
        Integer result = 1;
        for (std::size_t i = 0; i < torsion_rank(); ++i) {
            const Integer n = torsion_orders_[i];
            const Integer e = a.torsion_exponents()[i];
            result = lcm(result, Integer(n / gcd(n, e)));
        }
        return result;
    }

    /** Like order(), but infinite order is an error. */
    Integer order_checked(const GroupElement& a) const {
        const auto n = order(a);
        if (!n)
            throw structural_error("element " + format_element(a) + " has infinite order");
        return *n;
    }

    /**
     * All torsion elements in ascending lexicographic order on exponent
     * vectors.  The order is part of the contract: deterministic searches
     * (first matching dual element and the like) depend on it.
     */
    std::vector<GroupElement> enumerate_torsion(
        std::int64_t cap = kDefaultEnumerationCap) const {
        const Integer size = torsion_size();
        if (size > cap)
            throw enumeration_limit_error(
                "enumerate_torsion: torsion subgroup of " + format() + " has order " +
                size.str() + ", which exceeds the enumeration cap " + std::to_string(cap));
        std::vector<GroupElement> all;
        all.reserve(size.convert_to<std::size_t>());
        std::vector<std::int64_t> exps(torsion_rank(), 0);
        const std::vector<std::int64_t> free(free_rank_, 0);
        while (true) {
            all.emplace_back(exps, free);
            // odometer step, last coordinate fastest
            std::size_t i = torsion_rank();
            while (i > 0) {
                --i;
                if (++exps[i] < torsion_orders_[i])
                    break;
                exps[i] = 0;
                if (i == 0)
                    return all;
            }
            if (torsion_rank() == 0)
                return all;
        }
    }

    /** "Z/6 + Z" style presentation string. */
    std::string format() const {
        if (torsion_orders_.empty() && free_rank_ == 0)
            return "0";
        std::string out;
        for (std::int64_t n : torsion_orders_) {
            if (!out.empty())
                out += " + ";
            out += "Z/" + std::to_string(n);
        }
        for (int i = 0; i < free_rank_; ++i) {
            if (!out.empty())
                out += " + ";
            out += "Z";
        }
        return out;
    }

    /** "t^3", "u1^2*u2^-1"; the identity renders as "1". */
    std::string format_element(const GroupElement& a) const {
        check_member(a);
        std::string out;
        auto append = [&](const std::string& name, std::int64_t e) {
            if (e == 0)
                return;
            if (!out.empty())
                out += "*";
            out += name;
            if (e != 1)
                out += "^" + std::to_string(e);
        };
        for (std::size_t i = 0; i < torsion_rank(); ++i)
            append(names_[i], a.torsion_exponents()[i]);
        for (std::size_t i = 0; i < static_cast<std::size_t>(free_rank_); ++i)
            append(names_[torsion_rank() + i], a.free_exponents()[i]);
        return out.empty() ? "1" : out;
    }

  private:
    void check_shape(std::size_t torsion, std::size_t free) const {
        if (torsion != torsion_rank() || free != static_cast<std::size_t>(free_rank_))
            throw structural_error("group mismatch: exponent vector does not fit " + format());
    }
    void check_member(const GroupElement& a) const {
        check_shape(a.torsion_exponents().size(), a.free_exponents().size());
    }

    std::vector<std::int64_t> torsion_orders_;
    int free_rank_;
    std::vector<std::string> names_;
};

} // namespace torspan
