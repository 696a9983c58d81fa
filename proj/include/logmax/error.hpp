#pragma once

#include <stdexcept>
#include <string>

namespace logmax {

/// A moment (or other closed form) is infinite at the requested point.
///
/// `factor` names the vanishing denominator factor and `origin` the term
/// (usually a partition) that produced it, so binding-transition boundaries
/// can be diagnosed from the message alone.
class Divergence : public std::domain_error {
public:
    Divergence(const std::string& what, std::string factor = {}, std::string origin = {})
        : std::domain_error(compose(what, factor, origin)),
          factor_(std::move(factor)),
          origin_(std::move(origin)) {}

    const std::string& factor() const noexcept { return factor_; }
    const std::string& origin() const noexcept { return origin_; }

private:
    static std::string compose(const std::string& what, const std::string& factor,
                               const std::string& origin) {
        std::string s = what;
        if (!factor.empty()) s += " [factor " + factor + "]";
        if (!origin.empty()) s += " [from " + origin + "]";
        return s;
    }

    std::string factor_;
    std::string origin_;
};

/// Two residue poles coincide; the caller has to move to generic parameters.
class PoleCollision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal consistency check failed. Always a bug or a formula error.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace logmax
