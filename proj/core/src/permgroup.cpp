#include "ehom/permgroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ehom {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Perm: image list is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Perm Perm::identity(int degree) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
    return Perm(std::move(img));
}

int Perm::operator[](int i) const {
    if (i < 0 || i >= degree()) throw std::out_of_range("Perm: point out of range");
    return img_[static_cast<std::size_t>(i)];
}

Perm Perm::inverse() const {
    std::vector<int> img(img_.size());
    for (int i = 0; i < degree(); ++i) img[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
    return Perm(std::move(img));
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> img(a.img_.size());
    for (int i = 0; i < a.degree(); ++i)
        img[static_cast<std::size_t>(i)] = a.img_[static_cast<std::size_t>(b.img_[static_cast<std::size_t>(i)])];
    return Perm(std::move(img));
}

PermGroup PermGroup::generate(int degree, std::vector<Perm> generators, std::size_t max_order) {
    if (degree < 0) throw std::invalid_argument("generate: negative degree");
    for (const Perm& g : generators)
        if (g.degree() != degree) throw std::invalid_argument("generate: generator degree mismatch");

    std::set<Perm> elements;
    elements.insert(Perm::identity(degree));
    std::vector<Perm> frontier(elements.begin(), elements.end());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& e : frontier)
            for (const Perm& g : generators) {
                Perm p = compose(g, e);
                if (elements.insert(p).second) {
                    if (elements.size() > max_order)
                        throw std::invalid_argument("generate: group exceeds the order bound");
                    next.push_back(std::move(p));
                }
            }
        frontier = std::move(next);
    }

    PermGroup out;
    out.degree_ = degree;
    out.generators_ = std::move(generators);
    out.elements_.assign(elements.begin(), elements.end());
    return out;
}

int PermGroup::index_of(const Perm& p) const {
    const auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || !(*it == p)) return -1;
    return static_cast<int>(it - elements_.begin());
}

int PermGroup::mul(int a, int b) const {
    const Perm p = compose(elements_[static_cast<std::size_t>(a)], elements_[static_cast<std::size_t>(b)]);
    return index_of(p);
}

int PermGroup::inv(int a) const { return index_of(elements_[static_cast<std::size_t>(a)].inverse()); }

bool PermGroup::is_subgroup(const std::vector<int>& element_indices) const {
    if (element_indices.empty()) return false;
    std::vector<bool> mask(order(), false);
    for (int i : element_indices) {
        if (i < 0 || i >= static_cast<int>(order())) return false;
        mask[static_cast<std::size_t>(i)] = true;
    }
    if (!mask[0]) return false;  // identity is always element 0
    for (int a : element_indices)
        for (int b : element_indices)
            if (!mask[static_cast<std::size_t>(mul(a, b))]) return false;
    return true;
}

namespace {

// Closure of a set of element indices under multiplication.
std::vector<int> close_indices(const PermGroup& g, std::vector<int> seed) {
    std::vector<bool> mask(g.order(), false);
    mask[0] = true;
    std::vector<int> members{0};
    std::vector<int> frontier{0};
    auto add = [&](int idx) {
        if (!mask[static_cast<std::size_t>(idx)]) {
            mask[static_cast<std::size_t>(idx)] = true;
            members.push_back(idx);
            frontier.push_back(idx);
        }
    };
    for (int s : seed) add(s);
    while (!frontier.empty()) {
        const int x = frontier.back();
        frontier.pop_back();
        for (std::size_t i = 0; i < members.size(); ++i) {
            add(g.mul(members[i], x));
            add(g.mul(x, members[i]));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

std::vector<SubgroupClass> subgroup_classes(const PermGroup& g) {
    const int n = static_cast<int>(g.order());
    std::set<std::vector<int>> subgroups;
    subgroups.insert({0});
    for (int x = 0; x < n; ++x) subgroups.insert(close_indices(g, {x}));

    // Join pairs until no new subgroup appears.
    bool changed = true;
    while (changed) {
        changed = false;
        const std::vector<std::vector<int>> snapshot(subgroups.begin(), subgroups.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                std::vector<int> seed = snapshot[i];
                seed.insert(seed.end(), snapshot[j].begin(), snapshot[j].end());
                if (subgroups.insert(close_indices(g, std::move(seed))).second) changed = true;
            }
    }

    // Group into conjugacy classes.
    std::vector<SubgroupClass> classes;
    std::set<std::vector<int>> assigned;
    for (const auto& sub : subgroups) {
        if (assigned.count(sub)) continue;
        std::set<std::vector<int>> orbit;
        for (int h = 0; h < n; ++h) orbit.insert(conjugate_subgroup(g, sub, h));
        for (const auto& conj : orbit) assigned.insert(conj);

        SubgroupClass cls;
        cls.representative = *orbit.begin();  // lexicographic minimum
        cls.order = cls.representative.size();
        cls.conjugate_count = orbit.size();
        cls.normalizer_order = normalizer(g, cls.representative).size();
        cls.norm_quotient = cls.normalizer_order / cls.order;
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.representative < b.representative;
    });
    return classes;
}

std::vector<int> normalizer(const PermGroup& g, const std::vector<int>& k) {
    if (!g.is_subgroup(k)) throw std::invalid_argument("normalizer: k is not a subgroup");
    std::vector<int> out;
    for (int h = 0; h < static_cast<int>(g.order()); ++h)
        if (conjugate_subgroup(g, k, h) == k) out.push_back(h);
    return out;
}

std::size_t fixed_coset_count(const PermGroup& g, const std::vector<int>& k,
                              const std::vector<int>& l) {
    if (!g.is_subgroup(k) || !g.is_subgroup(l))
        throw std::invalid_argument("fixed_coset_count: inputs must be subgroups");
    std::vector<bool> in_k(g.order(), false);
    for (int e : k) in_k[static_cast<std::size_t>(e)] = true;
    std::vector<bool> seen(g.order(), false);
    std::size_t fixed = 0;
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
        if (seen[static_cast<std::size_t>(x)]) continue;
        for (int e : k) seen[static_cast<std::size_t>(g.mul(x, e))] = true;
        const int xinv = g.inv(x);
        bool ok = true;
        for (int e : l)
            if (!in_k[static_cast<std::size_t>(g.mul(g.mul(xinv, e), x))]) {
                ok = false;
                break;
            }
        if (ok) ++fixed;
    }
    return fixed;
}

std::vector<int> conjugate_subgroup(const PermGroup& g, const std::vector<int>& k, int by) {
    const int byinv = g.inv(by);
    std::vector<int> out;
    out.reserve(k.size());
    for (int e : k) out.push_back(g.mul(g.mul(by, e), byinv));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> canonical_conjugate(const PermGroup& g, const std::vector<int>& k) {
    std::vector<int> best = conjugate_subgroup(g, k, 0);
    for (int h = 1; h < static_cast<int>(g.order()); ++h) {
        std::vector<int> cand = conjugate_subgroup(g, k, h);
        if (cand < best) best = std::move(cand);
    }
    return best;
}

PermGroup subgroup_as_group(const PermGroup& g, const std::vector<int>& element_indices) {
    if (!g.is_subgroup(element_indices))
        throw std::invalid_argument("subgroup_as_group: not a subgroup");
    std::vector<Perm> gens;
    gens.reserve(element_indices.size());
    for (int i : element_indices) gens.push_back(g.elements()[static_cast<std::size_t>(i)]);
    return PermGroup::generate(g.degree(), std::move(gens));
}

std::vector<Perm> materialize_action(const PermGroup& g, const GroupAction& a) {
    if (a.per_generator.size() != g.generators().size())
        throw std::invalid_argument("materialize_action: one image permutation per generator required");
    for (const Perm& p : a.per_generator)
        if (p.degree() != a.points)
            throw std::invalid_argument("materialize_action: image degree does not match point count");

    std::vector<int> gen_indices;
    for (const Perm& gen : g.generators()) gen_indices.push_back(g.index_of(gen));

    const Perm unset = Perm::identity(0);
    std::vector<Perm> act(g.order(), unset);
    std::vector<bool> known(g.order(), false);
    act[0] = Perm::identity(a.points);
    known[0] = true;
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        const int x = frontier.back();
        frontier.pop_back();
        for (std::size_t gi = 0; gi < gen_indices.size(); ++gi) {
            const int y = g.mul(gen_indices[gi], x);
            Perm candidate = compose(a.per_generator[gi], act[static_cast<std::size_t>(x)]);
            if (!known[static_cast<std::size_t>(y)]) {
                act[static_cast<std::size_t>(y)] = std::move(candidate);
                known[static_cast<std::size_t>(y)] = true;
                frontier.push_back(y);
            } else if (!(act[static_cast<std::size_t>(y)] == candidate)) {
                throw std::invalid_argument(
                    "materialize_action: images do not respect the group relations");
            }
        }
    }
    return act;
}

std::vector<std::size_t> orbit_type_counts(const PermGroup& g,
                                           const std::vector<SubgroupClass>& classes,
                                           const GroupAction& a) {
    const std::vector<Perm> act = materialize_action(g, a);
    std::map<std::vector<int>, std::size_t> class_index;
    for (std::size_t i = 0; i < classes.size(); ++i) class_index[classes[i].representative] = i;

    std::vector<std::size_t> counts(classes.size(), 0);
    std::vector<bool> visited(static_cast<std::size_t>(a.points), false);
    for (int p = 0; p < a.points; ++p) {
        if (visited[static_cast<std::size_t>(p)]) continue;
        std::vector<int> stabilizer;
        for (std::size_t e = 0; e < act.size(); ++e) {
            const int q = act[e][p];
            visited[static_cast<std::size_t>(q)] = true;
            if (q == p) stabilizer.push_back(static_cast<int>(e));
        }
        const auto it = class_index.find(canonical_conjugate(g, stabilizer));
        if (it == class_index.end())
            throw std::invalid_argument("orbit_type_counts: stabilizer class missing");
        ++counts[it->second];
    }
    return counts;
}

}  // namespace ehom
