#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace torsionlab {

enum class GroupKind { Trivial, Cyclic, FiniteTable };

/// A finite group with a decidable normal form: the trivial group, a cyclic
/// group Z/n (elements are exponents reduced mod n), or an explicit
/// multiplication table. Immutable and cheap to copy.
class Group {
  public:
    Group() : Group(trivial()) {}

    static Group trivial();
    static Group cyclic(unsigned n);

    /// `table[i][j]` is the index of the product g_i * g_j. The table must be
    /// a Latin square, associative, with consistent identity and inverses.
    static Group finite_table(std::vector<std::vector<unsigned>> table,
                              std::vector<unsigned> inverse, unsigned identity);

    GroupKind kind() const { return impl_->kind; }
    unsigned order() const { return impl_->order; }
    bool abelian() const { return impl_->abelian; }

    unsigned identity() const { return impl_->identity; }
    unsigned mul(unsigned a, unsigned b) const;
    unsigned inverse(unsigned a) const;

    bool operator==(const Group& other) const;
    bool operator!=(const Group& other) const { return !(*this == other); }

    std::string describe() const;

  private:
    struct Impl {
        GroupKind kind = GroupKind::Trivial;
        unsigned order = 1;
        unsigned identity = 0;
        bool abelian = true;
        std::vector<std::vector<unsigned>> table;  // FiniteTable only
        std::vector<unsigned> inverse;             // FiniteTable only
    };
    explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// An element of a Group in canonical form (exponent for cyclic groups,
/// table index otherwise).
struct GroupElement {
    Group group;
    unsigned repr = 0;

    GroupElement() = default;
    GroupElement(Group g, unsigned r) : group(std::move(g)), repr(r) {
        if (repr >= group.order())
            throw std::invalid_argument("group element out of range");
    }

    GroupElement operator*(const GroupElement& other) const {
        require_same_group(other);
        return GroupElement(group, group.mul(repr, other.repr));
    }
    GroupElement inverse() const { return GroupElement(group, group.inverse(repr)); }
    bool is_identity() const { return repr == group.identity(); }

    bool operator==(const GroupElement& o) const { return group == o.group && repr == o.repr; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }

    void require_same_group(const GroupElement& o) const {
        if (group != o.group) throw std::invalid_argument("group mismatch");
    }
};

}  // namespace torsionlab
