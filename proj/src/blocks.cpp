#include "endohecke/blocks.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace endohecke {

TorusCharacter act_on_char(const AffWElem& w, const TorusCharacter& L) { return char_act(w.finite_part(), L); }

BlockSystem::BlockSystem(RootDatum d, const TorusCharacter& L) : d_(std::move(d)), amb_(ambient_system(d_)) {
    if (static_cast<int>(L.values.size()) != d_.rank) throw std::invalid_argument("character of wrong dimension");
    orbit_ = orbit_and_stabilizer(L, d_).orbit;
    std::sort(orbit_.begin(), orbit_.end());
    for (auto& M : orbit_) neutral_.emplace(M, endoscopic_system(d_, M));
}

const CoxeterSystem& BlockSystem::neutral(const TorusCharacter& M) const {
    auto it = neutral_.find(M);
    if (it == neutral_.end()) throw std::invalid_argument("character " + M.str() + " is not in the orbit");
    return it->second;
}

AffWElem BlockSystem::key(const AffWElem& w, const TorusCharacter& L) const {
    const CoxeterSystem& H = neutral(L);
    AffWElem cur = w;
    int l = H.length(cur);
    while (l > 0) {
        bool found = false;
        for (auto& s : H.simples()) {
            AffWElem n = cur * s;
            int nl = H.length(n);
            if (nl < l) {
                cur = n;
                l = nl;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no right S_L descent for positive N_L");
    }
    return cur;
}

bool BlockSystem::same_block(const AffWElem& u, const AffWElem& v, const TorusCharacter& L) const {
    return act_on_char(u, L) == act_on_char(v, L) && key(u, L) == key(v, L);
}

AffWElem BlockSystem::minimal_element(const Block& b) const {
    const CoxeterSystem& H = neutral(b.right_char);
    std::vector<AffWElem> found;
    for (auto& w : b.members)
        if (H.length(w) == 0) found.push_back(w);
    if (found.empty())
        throw BoundExceeded("no minimal element among block members of length <= " + std::to_string(b.bound));
    if (found.size() > 1) throw std::logic_error("several elements of a block preserve the positive L-roots");
    return found.front();
}

std::vector<Block> BlockSystem::enumerate_blocks(const TorusCharacter& Lp, const TorusCharacter& L, int bound) const {
    neutral(L);
    if (!in_orbit(Lp)) throw std::invalid_argument("left character is not in the W-orbit of the right character");
    std::map<AffWElem, Block> by_key;
    auto levels = amb_.enumerate(bound);
    for (auto& level : levels)
        for (auto& w : level) {
            if (!(act_on_char(w, L) == Lp)) continue;
            AffWElem k = key(w, L);
            auto [it, fresh] = by_key.try_emplace(k);
            Block& b = it->second;
            if (fresh) {
                b.left_char = Lp;
                b.right_char = L;
                b.representative = w;
                b.bound = bound;
            }
            b.members.push_back(w);
        }
    std::vector<Block> out;
    for (auto& [k, b] : by_key) {
        b.minimal = minimal_element(b);
        if (*b.minimal != k) throw std::logic_error("minimal element differs from the descent key");
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [this](const Block& a, const Block& b) {
        int la = amb_.length(*a.minimal), lb = amb_.length(*b.minimal);
        return la != lb ? la < lb : *a.minimal < *b.minimal;
    });
    return out;
}

Block BlockSystem::block_of(const AffWElem& w, const TorusCharacter& L, int bound) const {
    TorusCharacter Lp = act_on_char(w, L);
    AffWElem k = key(w, L);
    for (auto& b : enumerate_blocks(Lp, L, bound))
        if (*b.minimal == k) return b;
    throw BoundExceeded("block minimal element has length beyond bound " + std::to_string(bound));
}

AffWElem BlockSystem::block_factor(const Block& b, const AffWElem& w) const {
    if (!b.minimal) throw std::invalid_argument("block has no minimal element");
    if (!(act_on_char(w, b.right_char) == b.left_char)) throw std::invalid_argument("element not in the block");
    AffWElem v = b.minimal->inverse() * w;
    const CoxeterSystem& H = neutral(b.right_char);
    if (!neutral_membership(H, v, H.length(v)).member) throw std::invalid_argument("element not in the block");
    return v;
}

int BlockSystem::block_length(const Block& b, const AffWElem& w) const {
    AffWElem v = block_factor(b, w);
    const CoxeterSystem& H = neutral(b.right_char);
    return endo_length(H, v, H.length(v));
}

bool BlockSystem::block_leq(const Block& b, const AffWElem& w, const AffWElem& wp) const {
    return neutral(b.right_char).leq(block_factor(b, w), block_factor(b, wp));
}

bool preserves_positive_L_roots(const RootDatum& d, const TorusCharacter& L, const AffWElem& w) {
    // (alpha, n) goes to (beta, n - <beta, lambda>); beyond |<beta, lambda>| every level stays positive
    int span = 0;
    for (auto& r : d.roots) span = std::max(span, std::abs(dot(w.act_char(r), w.translation_part())));
    for (int i : endoscopic_coroots(d, L))
        for (int n = 0; n <= span + 1; ++n) {
            AffRoot a{d.roots[i], n};
            if (!aff_positive(d, a)) continue;
            if (!aff_positive(d, aff_act(w, a))) return false;
        }
    return true;
}

namespace {

bool palindrome_dfs(const CoxeterSystem& sys, const AffWElem& t, int len, std::vector<int>& outer,
                    const LetterFilter& ok, std::vector<int>& out) {
    int idx = sys.simple_index(t);
    if (len == 1 && idx >= 0) {
        out = outer;
        out.push_back(idx);
        out.insert(out.end(), outer.rbegin(), outer.rend());
        return true;
    }
    if (len <= 1) return false;
    for (int s : sys.left_descents(t)) {
        if (ok && !ok(outer, s)) continue;
        AffWElem u = sys.simple(s) * t * sys.simple(s);
        if (sys.length(u) != len - 2) continue;
        outer.push_back(s);
        if (palindrome_dfs(sys, u, len - 2, outer, ok, out)) return true;
        outer.pop_back();
    }
    return false;
}

}  // namespace

std::vector<int> palindromic_reduced(const CoxeterSystem& sys, const AffWElem& t, const LetterFilter& ok) {
    AffWElem e = AffWElem::identity(sys.rank());
    if (t == e || !(t * t == e)) throw std::invalid_argument("not a reflection");
    std::vector<int> outer, out;
    if (!palindrome_dfs(sys, t, sys.length(t), outer, ok, out)) throw std::invalid_argument("no palindromic reduced word");
    return out;
}

Conjugation conjugating_element(const BlockSystem& bs, const AffWElem& sigma, const TorusCharacter& L) {
    const CoxeterSystem& H = bs.neutral(L);
    if (H.simple_index(sigma) < 0) throw std::invalid_argument("not a simple reflection of the neutral group");
    const CoxeterSystem& amb = bs.ambient();
    const RootDatum& d = bs.datum();
    auto root_of = [&](int s) { return d.root_index(amb.simple_root(s)); };
    LetterFilter ok = [&](const std::vector<int>& outer, int s) {
        TorusCharacter M = L;
        for (int r : outer) M = act_on_char(amb.simple(r), M);
        return char_eval(M, d.coroots[root_of(s)]) != 0;
    };
    Conjugation c;
    c.word = palindromic_reduced(amb, sigma, ok);
    const std::size_t k = c.word.size() / 2;
    c.sigma_prime = c.word[k];
    c.x = AffWElem::identity(d.rank);
    for (std::size_t j = 0; j < k; ++j) c.x = amb.simple(c.word[j]) * c.x;
    return c;
}

}  // namespace endohecke
