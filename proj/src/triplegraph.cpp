#include "mspec/triplegraph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mspec/sail.hpp"
#include "mspec/surd.hpp"

namespace mspec {

FareyCode FareyCode::child(bool right) const {
    FareyCode c = *this;
    if (c.runs.empty()) c.runs = {0, 0};
    if (right) {
        c.runs.back() += 1;
    } else if (c.runs.back() == 0) {
        c.runs[c.runs.size() - 2] += 1;
    } else {
        c.runs.push_back(1);
        c.runs.push_back(0);
    }
    return c;
}

long FareyCode::level() const {
    long s = 0;
    for (long r : runs) s += r;
    return s;
}

Rat FareyCode::coordinate() const {
    std::vector<Int> cf;
    cf.emplace_back(0);
    for (std::size_t i = 0; i < runs.size(); ++i) {
        long v = runs[i];
        if (i == 0 || i + 1 == runs.size()) v += 1;
        cf.emplace_back(v);
    }
    return cf_to_rational(Seq{std::move(cf)});
}

bool farey_middle_identity_check(long depth) {
    if (depth > 12) throw std::domain_error("farey_middle_identity_check: depth > 12");
    auto nodes = enumerate_triples(farey_root(), farey_sigma(), depth);
    for (auto& n : nodes)
        if (n.middle != n.code.coordinate()) return false;
    return true;
}

GenMarkovNode gen_markov_root(const Seq& mu, const Seq& nu) {
    Seq mid = concat(mu, nu);
    return {{mu, breve(mu)}, {mid, breve(mid)}, {nu, breve(nu)}, FareyCode::root()};
}

GenMarkovNode gen_markov_child(const GenMarkovNode& node, bool right) {
    const Int& a = node.left.num;
    const Int& b = node.middle.num;
    const Int& c = node.right.num;
    GenMarkovEntry mid;
    if (!right) {
        mid.seq = concat(node.left.seq, node.middle.seq);
        mid.num = trace_coefficient(node.left.seq) * b - c;
    } else {
        mid.seq = concat(node.middle.seq, node.right.seq);
        mid.num = trace_coefficient(node.right.seq) * b - a;
    }
    if (breve(mid.seq) != mid.num)
        throw std::logic_error("gen_markov_child: recursion disagrees with direct breve");
    if (!right)
        return {node.left, std::move(mid), node.middle, node.code.child(false)};
    return {node.middle, std::move(mid), node.right, node.code.child(true)};
}

std::vector<GenMarkovNode> enumerate_gen_markov(const Seq& mu, const Seq& nu, long depth) {
    if (depth < 0) throw std::domain_error("enumerate_gen_markov: negative depth");
    if (depth > 20) throw resource_limit_error("enumerate_gen_markov: depth exceeds limit");
    std::vector<GenMarkovNode> out;
    out.push_back(gen_markov_root(mu, nu));
    std::size_t level_begin = 0;
    for (long d = 0; d < depth; ++d) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            out.push_back(gen_markov_child(out[i], false));
            out.push_back(gen_markov_child(out[i], true));
        }
        level_begin = level_end;
    }
    return out;
}

GraphReport verify_markov_llsgraph(const Seq& mu, const Seq& nu, long depth) {
    GraphReport r;
    r.depth = depth;
    r.evenly_prime = is_evenly_prime(mu) && is_evenly_prime(nu);
    r.order_forward = skew_lex_compare(periodisation(mu), periodisation(nu)) == std::strong_ordering::less;
    r.order_reversed = skew_lex_compare(periodisation(reversed(mu)), periodisation(reversed(nu))) ==
                       std::strong_ordering::less;
    r.extremal_mu = is_extremal(mu).extremal;
    r.extremal_nu = is_extremal(nu).extremal;
    r.evenly_palindromic = true;
    auto nodes = enumerate_triples(seq_root(mu, nu), seq_sigma(), depth);
    for (auto& n : nodes) {
        for (const Seq* s : {&n.left, &n.middle, &n.right}) {
            if (!is_evenly_palindromic(*s)) {
                r.evenly_palindromic = false;
                break;
            }
        }
        if (!r.evenly_palindromic) break;
    }
    return r;
}

MonotonicityResult monotonicity_check(const Seq& mu, const Seq& nu, long depth) {
    bool pre = is_evenly_prime(mu) && is_evenly_prime(nu) &&
               skew_lex_compare(periodisation(mu), periodisation(nu)) == std::strong_ordering::less;
    if (!pre) return {false, false};
    auto nodes = enumerate_triples(seq_root(mu, nu), seq_sigma(), depth);
    std::sort(nodes.begin(), nodes.end(), [](const TripleNode<Seq>& a, const TripleNode<Seq>& b) {
        return a.code.coordinate() < b.code.coordinate();
    });
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (skew_lex_compare(periodisation(nodes[i].middle), periodisation(nodes[i + 1].middle)) !=
            std::strong_ordering::less)
            return {true, false};
    }
    return {true, true};
}

bool free_generated_to_depth(const Seq& mu, const Seq& nu, long depth) {
    auto nodes = enumerate_triples(seq_root(mu, nu), seq_sigma(), depth);
    std::set<std::string> seen;
    for (auto& n : nodes) {
        std::string key = format_seq(n.left) + "|" + format_seq(n.middle) + "|" + format_seq(n.right);
        if (!seen.insert(std::move(key)).second) return false;
    }
    return true;
}

std::optional<TripleNode<Seq>> reconstruct_from_middle(const Seq& target, const Seq& mu,
                                                       const Seq& nu, long max_depth) {
    if (!is_evenly_prime(mu) || !is_evenly_prime(nu))
        throw std::domain_error("reconstruct_from_middle: seeds must be evenly-prime");
    if (skew_lex_compare(periodisation(mu), periodisation(nu)) != std::strong_ordering::less)
        throw std::domain_error("reconstruct_from_middle: requires <mu> before <nu>");
    if (target.empty()) return std::nullopt;
    TripleNode<Seq> node = seq_root(mu, nu);
    auto sigma = seq_sigma();
    EventuallyPeriodicSeq t = periodisation(target);
    for (long d = 0; d <= max_depth; ++d) {
        if (node.middle == target) return node;
        auto cmp = skew_lex_compare(t, periodisation(node.middle));
        if (cmp == std::strong_ordering::equal) return std::nullopt;  // same periodisation, different word
        node = step(node, cmp == std::strong_ordering::greater, sigma);
    }
    return std::nullopt;
}

namespace {

void require_seed_pair(const Seq& mu, const Seq& nu) {
    if (!is_evenly_prime(mu) || !is_evenly_prime(nu))
        throw std::domain_error("collision_search: seeds must be evenly-prime");
    if (skew_lex_compare(periodisation(mu), periodisation(nu)) != std::strong_ordering::less)
        throw std::domain_error("collision_search: requires <mu> before <nu>");
}

}  // namespace

Int collision_value_cap(const Seq& mu, const Seq& nu, long depth) {
    Mat2 m = map_A(mu);
    Mat2 acc = Mat2::identity();
    for (long i = 0; i <= depth; ++i) acc = acc * m;
    return (acc * map_A(nu)).b;
}

std::vector<CollisionGroup> collision_search(const Seq& mu, const Seq& nu, long depth,
                                             bool key_outer) {
    require_seed_pair(mu, nu);
    if (depth < 0) throw std::domain_error("collision_search: negative depth");
    Int cap = collision_value_cap(mu, nu, depth);

    std::map<Int, std::vector<FareyCode>> hits;
    struct Frame {
        Mat2 l, r;
        FareyCode code;
        long level;
    };
    std::vector<Frame> stack;
    stack.push_back({map_A(mu), map_A(nu), FareyCode::root(), 0});
    std::size_t visited = 0;
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        Mat2 mid = f.l * f.r;
        if (mid.b > cap) continue;
        if (++visited > 50'000'000) throw resource_limit_error("collision_search: node budget");
        hits[mid.b].push_back(f.code);
        if (key_outer) {
            hits[f.l.b].push_back(f.code);
            hits[f.r.b].push_back(f.code);
        }
        if (f.level < depth) {
            Mat2 lchild_mid = f.l * mid;
            if (lchild_mid.b != f.l.trace() * mid.b - f.r.b)
                throw std::logic_error("collision_search: recursion disagrees with matrix product");
            Mat2 rchild_mid = mid * f.r;
            if (rchild_mid.b != f.r.trace() * mid.b - f.l.b)
                throw std::logic_error("collision_search: recursion disagrees with matrix product");
            stack.push_back({mid, f.r, f.code.child(true), f.level + 1});
            stack.push_back({f.l, mid, f.code.child(false), f.level + 1});
        }
    }

    std::vector<CollisionGroup> out;
    for (auto& [value, codes] : hits) {
        if (codes.size() < 2) continue;
        std::vector<FareyCode> cs = codes;
        std::sort(cs.begin(), cs.end(), [](const FareyCode& a, const FareyCode& b) {
            return a.coordinate() < b.coordinate();
        });
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        if (cs.size() < 2) continue;
        out.push_back({value, std::move(cs)});
    }
    return out;
}

Seq middle_sequence_of_code(const Seq& mu, const Seq& nu, const FareyCode& code) {
    TripleNode<Seq> node = seq_root(mu, nu);
    auto sigma = seq_sigma();
    // replay the word: L^{a_1} first, then R^{a_2}, ...
    for (std::size_t i = 0; i < code.runs.size(); ++i) {
        bool right = i % 2 == 1;
        for (long k = 0; k < code.runs[i]; ++k) node = step(node, right, sigma);
    }
    return node.middle;
}

}  // namespace mspec
