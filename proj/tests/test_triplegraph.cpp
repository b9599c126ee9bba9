#include <doctest.h>

#include <algorithm>
#include <set>

#include "mspec/classical.hpp"
#include "mspec/triplegraph.hpp"

using namespace mspec;

TEST_CASE("farey codes and coordinates") {
    FareyCode root = FareyCode::root();
    CHECK(root.coordinate() == Rat(1, 2));
    CHECK(root.level() == 0);
    FareyCode l = root.child(false);
    CHECK(l.runs == std::vector<long>{1, 0});
    CHECK(l.coordinate() == Rat(1, 3));
    FareyCode r = root.child(true);
    CHECK(r.runs == std::vector<long>{0, 1});
    CHECK(r.coordinate() == Rat(2, 3));
    // L R R L L L from the root
    FareyCode w = root;
    for (bool dir : {false, true, true, false, false, false}) w = w.child(dir);
    CHECK(w.runs == std::vector<long>{1, 2, 3, 0});
    CHECK(w.coordinate() == Rat(9, 22));
}

TEST_CASE("step semantics") {
    auto f = step(farey_root(), false, farey_sigma());
    CHECK(f.left == Rat(0));
    CHECK(f.middle == Rat(1, 3));
    CHECK(f.right == Rat(1, 2));

    auto s = step(seq_root(Seq{1, 1}, Seq{2, 2}), true, seq_sigma());
    CHECK(s.left == Seq{1, 1, 2, 2});
    CHECK(s.middle == Seq{1, 1, 2, 2, 2, 2});
    CHECK(s.right == Seq{2, 2});

    auto l = step(classical_root(), false, classical_sigma());
    CHECK(l.left == 1);
    CHECK(l.middle == 13);
    CHECK(l.right == 5);
    auto r = step(classical_root(), true, classical_sigma());
    CHECK(r.left == 5);
    CHECK(r.middle == 29);
    CHECK(r.right == 2);
}

TEST_CASE("enumeration is breadth-first and complete") {
    auto farey = enumerate_triples(farey_root(), farey_sigma(), 1);
    REQUIRE(farey.size() == 3);
    CHECK(farey[0].middle == Rat(1, 2));
    CHECK(farey[1].middle == Rat(1, 3));
    CHECK(farey[2].middle == Rat(2, 3));

    auto markov = classical_tree(2);
    REQUIRE(markov.size() == 7);
    std::multiset<Int> middles;
    for (auto& n : markov) middles.insert(n.middle);
    CHECK(middles == std::multiset<Int>{5, 13, 29, 34, 194, 169, 433});

    auto gen = enumerate_gen_markov(Seq{4, 4}, Seq{11, 11}, 1);
    REQUIRE(gen.size() == 3);
    CHECK(gen[0].middle.seq == Seq{4, 4, 11, 11});
    CHECK(gen[1].middle.seq == Seq{4, 4, 4, 4, 11, 11});
    CHECK(gen[2].middle.seq == Seq{4, 4, 11, 11, 11, 11});
}

TEST_CASE("farey middles equal farey coordinates") {
    CHECK(farey_middle_identity_check(0));
    CHECK(farey_middle_identity_check(3));
    CHECK(farey_middle_identity_check(10));
}

TEST_CASE("generalised markov children") {
    GenMarkovNode root = gen_markov_root(Seq{4, 4}, Seq{11, 11});
    CHECK(root.left.num == 4);
    CHECK(root.middle.num == 191);
    CHECK(root.right.num == 11);
    GenMarkovNode l = gen_markov_child(root, false);
    CHECK(l.middle.num == 3427);  // 18*191 - 11
    GenMarkovNode r = gen_markov_child(root, true);
    CHECK(r.middle.num == 23489);  // 123*191 - 4

    GenMarkovNode croot = gen_markov_root(Seq{1, 1}, Seq{2, 2});
    CHECK(croot.middle.num == 5);
    CHECK(gen_markov_child(croot, false).middle.num == 13);
    CHECK(gen_markov_child(croot, true).middle.num == 29);
}

TEST_CASE("classical instance satisfies the Markov equation") {
    for (auto& n : classical_tree(10))
        CHECK(markov_equation_check(n.left, n.middle, n.right));
}

TEST_CASE("gen markov numbers mirror the classical tree") {
    auto gen = enumerate_gen_markov(Seq{1, 1}, Seq{2, 2}, 6);
    auto cls = classical_tree(6);
    REQUIRE(gen.size() == cls.size());
    for (std::size_t i = 0; i < gen.size(); ++i) {
        CHECK(gen[i].left.num == cls[i].left);
        CHECK(gen[i].middle.num == cls[i].middle);
        CHECK(gen[i].right.num == cls[i].right);
    }
}

TEST_CASE("middle equals concatenation of the outer pair") {
    for (auto& n : enumerate_triples(seq_root(Seq{1, 1}, Seq{2, 2}), seq_sigma(), 5))
        CHECK(n.middle == concat(n.left, n.right));
}

TEST_CASE("matrix tree mirrors the sequence tree through map A") {
    auto seqs = enumerate_triples(seq_root(Seq{4, 4}, Seq{11, 11}), seq_sigma(), 4);
    auto mats = enumerate_triples(matrix_root(map_A(Seq{4, 4}), map_A(Seq{11, 11})),
                                  matrix_sigma(), 4);
    REQUIRE(seqs.size() == mats.size());
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        CHECK(map_A(seqs[i].left) == mats[i].left);
        CHECK(map_A(seqs[i].middle) == mats[i].middle);
        CHECK(map_A(seqs[i].right) == mats[i].right);
        CHECK(mats[i].left * mats[i].right == mats[i].middle);
    }
}

TEST_CASE("verify markov lls graph") {
    GraphReport classical = verify_markov_llsgraph(Seq{1, 1}, Seq{2, 2}, 5);
    CHECK(classical.almost_markov());
    CHECK(classical.markov());

    GraphReport gen = verify_markov_llsgraph(Seq{4, 4}, Seq{11, 11}, 4);
    CHECK(gen.almost_markov());
    CHECK(gen.markov());

    GraphReport bad = verify_markov_llsgraph(Seq{1, 1, 2, 2, 2, 2}, Seq{1, 1, 2, 2}, 2);
    CHECK_FALSE(bad.order_reversed);
    CHECK_FALSE(bad.almost_markov());
}

TEST_CASE("monotonicity of middles in farey order") {
    CHECK(monotonicity_check(Seq{1, 1}, Seq{2, 2}, 4).monotone);
    CHECK(monotonicity_check(Seq{4, 4}, Seq{11, 11}, 4).monotone);
    MonotonicityResult same = monotonicity_check(Seq{2, 2}, Seq{2, 2}, 3);
    CHECK_FALSE(same.precondition_ok);
}

TEST_CASE("descending paths stay between the outer periodisations") {
    auto root = seq_root(Seq{1, 1}, Seq{2, 2});
    auto nodes = enumerate_triples(root, seq_sigma(), 6);
    for (auto& n : nodes) {
        CHECK(skew_lex_compare(periodisation(root.left), periodisation(n.middle)) ==
              std::strong_ordering::less);
        CHECK(skew_lex_compare(periodisation(n.middle), periodisation(root.right)) ==
              std::strong_ordering::less);
    }
}

TEST_CASE("free generation to depth 8") {
    CHECK(free_generated_to_depth(Seq{1, 1}, Seq{2, 2}, 8));
    CHECK(free_generated_to_depth(Seq{4, 4}, Seq{11, 11}, 8));
}

TEST_CASE("reconstruction from the middle element") {
    auto hit = reconstruct_from_middle(Seq{1, 1, 2, 2, 2, 2}, Seq{1, 1}, Seq{2, 2}, 10);
    REQUIRE(hit.has_value());
    CHECK(hit->left == Seq{1, 1, 2, 2});
    CHECK(hit->right == Seq{2, 2});
    CHECK(hit->code.runs == std::vector<long>{0, 1});

    CHECK_FALSE(reconstruct_from_middle(Seq{1, 1}, Seq{1, 1}, Seq{2, 2}, 10).has_value());

    Seq target = parse_seq_literal("4,4,(11)^8");
    auto deep = reconstruct_from_middle(target, Seq{4, 4}, Seq{11, 11}, 10);
    REQUIRE(deep.has_value());
    CHECK(deep->code.runs == std::vector<long>{0, 3});
    CHECK(deep->middle == target);
}

TEST_CASE("collision search finds the equal-breve pair") {
    auto groups = collision_search(Seq{4, 4}, Seq{11, 11}, 10);
    Int target("355318099");
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const CollisionGroup& g) { return g.value == target; });
    REQUIRE(it != groups.end());
    REQUIRE(it->codes.size() == 2);
    // L^5 comes first in coordinate order, then R^3
    CHECK(it->codes[0].runs == std::vector<long>{5, 0});
    CHECK(it->codes[1].runs == std::vector<long>{0, 3});
    CHECK(middle_sequence_of_code(Seq{4, 4}, Seq{11, 11}, it->codes[0]) ==
          parse_seq_literal("(4)^12,11,11"));
    CHECK(middle_sequence_of_code(Seq{4, 4}, Seq{11, 11}, it->codes[1]) ==
          parse_seq_literal("4,4,(11)^8"));
}

TEST_CASE("classical tree has no collisions at this scale") {
    CHECK(collision_search(Seq{1, 1}, Seq{2, 2}, 8).empty());
}

TEST_CASE("collision value cap is the all-L chain middle") {
    CHECK(collision_value_cap(Seq{1, 1}, Seq{2, 2}, 0) == 5);
    CHECK(collision_value_cap(Seq{1, 1}, Seq{2, 2}, 1) == 13);
    CHECK(collision_value_cap(Seq{1, 1}, Seq{2, 2}, 2) == 34);
    CHECK(collision_value_cap(Seq{4, 4}, Seq{11, 11}, 1) == 3427);
}

TEST_CASE("collision cap equals the smallest middle of its level") {
    for (auto seeds : {std::pair<Seq, Seq>{Seq{1, 1}, Seq{2, 2}},
                       std::pair<Seq, Seq>{Seq{4, 4}, Seq{11, 11}}}) {
        auto& [mu, nu] = seeds;
        auto nodes = enumerate_gen_markov(mu, nu, 7);
        std::size_t level_begin = 0, level_size = 1;
        for (long d = 0; d <= 7; ++d) {
            Int level_min;
            for (std::size_t i = level_begin; i < level_begin + level_size; ++i)
                if (i == level_begin || nodes[i].middle.num < level_min)
                    level_min = nodes[i].middle.num;
            CHECK(level_min == collision_value_cap(mu, nu, d));
            level_begin += level_size;
            level_size *= 2;
        }
    }
}

TEST_CASE("subtree middles stay between the outer periodisations") {
    auto nodes = enumerate_triples(seq_root(Seq{4, 4}, Seq{11, 11}), seq_sigma(), 5);
    // children at indices 2i+1, 2i+2: walk a few subtrees explicitly
    std::function<void(std::size_t, const TripleNode<Seq>&, int)> walk =
        [&](std::size_t i, const TripleNode<Seq>& anc, int depth_left) {
            if (depth_left == 0 || 2 * i + 2 >= nodes.size()) return;
            for (std::size_t ch : {2 * i + 1, 2 * i + 2}) {
                CHECK(skew_lex_compare(periodisation(anc.left),
                                       periodisation(nodes[ch].middle)) ==
                      std::strong_ordering::less);
                CHECK(skew_lex_compare(periodisation(nodes[ch].middle),
                                       periodisation(anc.right)) ==
                      std::strong_ordering::less);
                walk(ch, anc, depth_left - 1);
            }
        };
    for (std::size_t i : {0u, 1u, 2u, 4u}) walk(i, nodes[i], 3);
}
