#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace grconv {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

struct group_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A finite group with a fixed element listing. listing[0] is always the
/// identity; products and inverses are table lookups on listing indices.
///
/// Supported kinds: cyclic C_n, symmetric S_n (n <= 4), and direct
/// products. For products, factors[0] is the slowest-varying index in the
/// listing. The name parser maps "XxY" to product({Y, X}), i.e. the
/// rightmost-named factor varies slowest; this is the ordering under which
/// the block shapes of the embedded matrices come out with the outer
/// factor indexing the blocks (h-blocks for C4xC2 and C3xC3).
///
/// Permutations multiply by function composition: (x*y)(p) = x(y(p)),
/// so g_mul((12),(13)) = (132) under the fixed S3 listing
/// 1,(12),(13),(23),(123),(132).
class Group : public std::enable_shared_from_this<Group> {
public:
    static GroupPtr cyclic(int n, std::string generator_name = "a");
    static GroupPtr symmetric(int n);
    static GroupPtr product(std::vector<GroupPtr> factors);
    /// "C4", "S3", "C4xC2", "C3xC3", "C2xC2xC2", ...
    static GroupPtr parse(const std::string& name);

    int order() const { return order_; }
    int mul(int i, int j) const { return mul_[i * order_ + j]; }
    int inverse(int i) const { return inv_[i]; }
    int identity() const { return 0; }
    bool is_abelian() const;

    const std::string& element_name(int i) const { return names_[i]; }
    /// Generator name -> listing index ("a", "b", "g", "h", ...).
    const std::map<std::string, int>& generators() const { return gens_; }
    const std::string& name() const { return name_; }
    bool same(const Group& other) const;

private:
    Group() = default;
    void build_inverses();

    int order_ = 1;
    std::string name_;
    std::vector<int> mul_;   // order x order
    std::vector<int> inv_;
    std::vector<std::string> names_;
    std::map<std::string, int> gens_;
};

struct GroupElement {
    GroupPtr group;
    int index = 0;
};

GroupElement g_mul(const GroupElement& x, const GroupElement& y);
GroupElement g_inv(const GroupElement& x);
/// The canonical ordered element listing.
std::vector<GroupElement> listing(const GroupPtr& group);

}  // namespace grconv
