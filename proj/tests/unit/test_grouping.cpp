#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "citemetric/grouping.hpp"
#include "support/builders.hpp"
#include "support/check_error.hpp"

using namespace citemetric;
using namespace testsupport;

namespace {

std::vector<int> sorted_cluster_sizes(const ClusterSet& set) {
    std::vector<int> sizes;
    for (const CitationCluster& c : set.clusters) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

} // namespace

TEST_SUITE("grouping") {

TEST_CASE("strategy names round-trip") {
    for (GroupingStrategy s :
         {GroupingStrategy::explicit_labels, GroupingStrategy::shared_author_components,
          GroupingStrategy::last_author})
        CHECK(parse_strategy(strategy_name(s)) == s);
    CHECK_FALSE(parse_strategy("auto").has_value());
    CHECK_FALSE(parse_strategy("").has_value());
}

TEST_CASE("disjoint author sets give singleton groups") {
    Corpus c = make_corpus(
        {{"P1", {"Alice"}}, {"P2", {"Bob"}}, {"P3", {"Carol"}}}, {});
    GroupAssignment a = resolve_groups(c, GroupingStrategy::shared_author_components);
    CHECK(a.groups.size() == 3);
    for (const auto& [id, members] : a.groups) CHECK(members.size() == 1);
}

TEST_CASE("shared authors chain into one component") {
    Corpus c = make_corpus({{"P1", {"Alice", "Bob"}},
                            {"P2", {"Bob", "Carol"}},
                            {"P3", {"Dave"}}},
                           {});
    GroupAssignment a = resolve_groups(c, GroupingStrategy::shared_author_components);
    std::set<std::set<std::string>> expected = {{"P1", "P2"}, {"P3"}};
    CHECK(partition_of(a) == expected);
    CHECK(a.group_of_paper("P1") == a.group_of_paper("P2"));
    CHECK(a.group_of_paper("P1") == "P1"); // smallest member id names the group
}

TEST_CASE("explicit labels partition by equality, unlabeled papers stand alone") {
    Corpus c = make_corpus({{"P1", {"Alice"}, std::string("lab1")},
                            {"P2", {"Bob"}, std::string("lab1")},
                            {"P3", {"Carol"}, std::string("lab2")},
                            {"P4", {"Dave"}}},
                           {});
    GroupAssignment a = resolve_groups(c, GroupingStrategy::explicit_labels);
    std::set<std::set<std::string>> expected = {{"P1", "P2"}, {"P3"}, {"P4"}};
    CHECK(partition_of(a) == expected);
}

TEST_CASE("explicit labels without any label is unavailable") {
    Corpus c = make_corpus({{"P1", {"Alice"}}}, {});
    expect_error(errc::strategy_unavailable,
                 [&] { resolve_groups(c, GroupingStrategy::explicit_labels); });
}

TEST_CASE("last-author grouping keys on the final author only") {
    Corpus c = make_corpus({{"P1", {"Alice", "Prof. X"}},
                            {"P2", {"Bob", "Prof. X"}},
                            {"P3", {"Prof. X", "Carol"}}},
                           {});
    GroupAssignment a = resolve_groups(c, GroupingStrategy::last_author);
    std::set<std::set<std::string>> expected = {{"P1", "P2"}, {"P3"}};
    CHECK(partition_of(a) == expected);
}

TEST_CASE("default strategy honors labels when any exist") {
    Corpus labeled = make_corpus({{"P1", {"Alice"}, std::string("lab1")}, {"P2", {"Alice"}}}, {});
    CHECK(default_strategy(labeled) == GroupingStrategy::explicit_labels);
    Corpus bare = make_corpus({{"P1", {"Alice"}}, {"P2", {"Alice"}}}, {});
    CHECK(default_strategy(bare) == GroupingStrategy::shared_author_components);
}

TEST_CASE("accent variants of a name land in one component") {
    Corpus c = make_corpus({{"P1", {"José García"}}, {"P2", {"Jose Garcia"}}}, {});
    GroupAssignment a = resolve_groups(c, GroupingStrategy::shared_author_components);
    CHECK(a.groups.size() == 1);
}

TEST_CASE("assignments match the brute-force closure on random corpora") {
    std::mt19937_64 rng(20260814);
    for (int run = 0; run < 50; ++run) {
        Corpus c = random_author_corpus(rng, 40);
        GroupAssignment a = resolve_groups(c, GroupingStrategy::shared_author_components);
        CHECK(partition_of(a) == brute_force_author_components(c));
    }
}

TEST_CASE("every strategy yields a real partition") {
    std::mt19937_64 rng(777);
    for (int run = 0; run < 30; ++run) {
        Corpus c = random_author_corpus(rng, 30);
        for (GroupingStrategy s :
             {GroupingStrategy::shared_author_components, GroupingStrategy::last_author}) {
            GroupAssignment a = resolve_groups(c, s);
            std::size_t member_total = 0;
            std::set<std::string> seen;
            for (const auto& [gid, members] : a.groups) {
                CHECK(!members.empty());
                CHECK(gid == *std::min_element(members.begin(), members.end()));
                for (const std::string& id : members) {
                    CHECK(seen.insert(id).second); // no paper in two groups
                    CHECK(a.group_of.at(id) == gid);
                }
                member_total += members.size();
            }
            CHECK(member_total == c.papers().size());
        }
    }
}

TEST_CASE("adding a shared author never increases the group count") {
    std::mt19937_64 rng(31337);
    for (int run = 0; run < 30; ++run) {
        Corpus before = random_author_corpus(rng, 25);
        std::size_t n = before.papers().size();
        if (n < 2) continue;
        // Rebuild the same corpus with one author made common to two papers.
        std::vector<PaperSpec> specs;
        for (const PaperRecord& p : before.papers()) {
            PaperSpec s;
            s.id = p.id;
            for (const AuthorRef& a : p.authors) s.authors.push_back(a.raw_name);
            specs.push_back(std::move(s));
        }
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::size_t i = pick(rng), j = pick(rng);
        specs[j].authors.push_back(specs[i].authors.front());
        Corpus after = make_corpus(specs, {});

        auto groups_before =
            resolve_groups(before, GroupingStrategy::shared_author_components).groups.size();
        auto groups_after =
            resolve_groups(after, GroupingStrategy::shared_author_components).groups.size();
        CHECK(groups_after <= groups_before);
    }
}

TEST_CASE("a paper with no citations has an empty cluster set") {
    Corpus c = make_corpus({{"P1", {"Alice"}}, {"P2", {"Bob"}}}, {});
    GroupAssignment a = resolve_groups(c, GroupingStrategy::shared_author_components);
    ClusterSet set = build_clusters(c, a, "P1");
    CHECK(set.clusters.empty());
    CHECK(set.max_size_overall == 0);
    CHECK(set.cited_id == "P1");
}

TEST_CASE("clusters split citing papers by group") {
    Corpus c = make_corpus({{"T", {"Target"}, std::string("GT")},
                            {"C1", {"X"}, std::string("G1")},
                            {"C2", {"X"}, std::string("G1")},
                            {"C3", {"X"}, std::string("G1")},
                            {"C4", {"Y"}, std::string("G2")},
                            {"C5", {"Y"}, std::string("G2")}},
                           {{"C1", "T", 'b', 1.0},
                            {"C2", "T", 'c', 1.0},
                            {"C3", "T"},
                            {"C4", "T", 'c', 2.0},
                            {"C5", "T", 'g', 1.0}});
    GroupAssignment a = resolve_groups(c, GroupingStrategy::explicit_labels);
    ClusterSet set = build_clusters(c, a, "T");
    REQUIRE(set.clusters.size() == 2);
    CHECK(sorted_cluster_sizes(set) == std::vector<int>{2, 3});
    CHECK(set.max_size_overall == 3);

    // Clusters arrive sorted by group id; G1's id is "C1", G2's is "C4".
    const CitationCluster& g1 = set.clusters[0];
    CHECK(g1.group_id == "C1");
    CHECK(g1.citing_ids == std::vector<std::string>{"C1", "C2", "C3"});
    CHECK(g1.count(Category::B) == 1);
    CHECK(g1.count(Category::C) == 1);
    // The unannotated C3 edge counts toward size but toward no category.
    CHECK(g1.size() == 3);
    int total_categorized = 0;
    for (Category cat : all_categories) total_categorized += g1.count(cat);
    CHECK(total_categorized == 2);

    const CitationCluster& g2 = set.clusters[1];
    CHECK(g2.weight_sum(Category::C) == 2.0);
    CHECK(g2.count(Category::G) == 1);

    CHECK(set.max_count(Category::C) == 1);
    CHECK(set.max_count(Category::B) == 1);
    CHECK(set.max_count(Category::D) == 0);
}

TEST_CASE("unknown cited ids are rejected") {
    Corpus c = make_corpus({{"P1", {"Alice"}}}, {});
    GroupAssignment a = resolve_groups(c, GroupingStrategy::shared_author_components);
    expect_error(errc::unknown_paper, [&] { build_clusters(c, a, "NOPE"); });
    expect_error(errc::unknown_paper, [&] { a.group_of_paper("NOPE"); });
}

TEST_CASE("auto-citation flags mark the cited paper's own group") {
    Corpus c = make_corpus({{"T", {"Target"}, std::string("GT")},
                            {"S1", {"A"}, std::string("GT")},
                            {"S2", {"A"}, std::string("GT")},
                            {"S3", {"A"}, std::string("GT")},
                            {"S4", {"A"}, std::string("GT")},
                            {"F1", {"B"}, std::string("G1")},
                            {"F2", {"C"}, std::string("G2")}},
                           {{"S1", "T"},
                            {"S2", "T"},
                            {"S3", "T"},
                            {"S4", "T"},
                            {"F1", "T"},
                            {"F2", "T"}});
    GroupAssignment a = resolve_groups(c, GroupingStrategy::explicit_labels);
    ClusterSet set = flag_auto_citations(build_clusters(c, a, "T"), a);
    int flagged = 0;
    for (const CitationCluster& cluster : set.clusters)
        if (cluster.auto_citation) {
            ++flagged;
            CHECK(cluster.size() == 4);
        }
    CHECK(flagged == 1);

    // All-foreign case: every flag false.
    ClusterSet foreign = flag_auto_citations(build_clusters(c, a, "F1"), a);
    for (const CitationCluster& cluster : foreign.clusters) CHECK_FALSE(cluster.auto_citation);
}

TEST_CASE("cluster completeness holds on random corpora") {
    std::mt19937_64 rng(424242);
    for (int run = 0; run < 40; ++run) {
        Corpus c = random_cited_corpus(rng, 60);
        GroupAssignment a = resolve_groups(c, GroupingStrategy::explicit_labels);
        ClusterSet set = build_clusters(c, a, "T");
        std::size_t total = 0;
        std::set<std::string> seen;
        for (const CitationCluster& cluster : set.clusters) {
            CHECK(cluster.size() >= 1);
            CHECK(static_cast<std::size_t>(cluster.size()) == cluster.citing_ids.size());
            for (const std::string& id : cluster.citing_ids) {
                CHECK(seen.insert(id).second); // each citing paper in one cluster
                CHECK(a.group_of.at(id) == cluster.group_id);
            }
            total += cluster.citing_ids.size();
            CHECK(set.max_size_overall >= cluster.size());
        }
        CHECK(total == c.incoming_edge_indices("T").size());
    }
}

} // TEST_SUITE
