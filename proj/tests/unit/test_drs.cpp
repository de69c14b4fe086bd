#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "resist/drs.hpp"
#include "resist/error.hpp"

using namespace resist;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("resist-test-" + name + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Classify, Rules) {
  EXPECT_EQ(classify_kmn(3, 3), TheoremTag::kBalanced);
  EXPECT_EQ(classify_kmn(2, 7), TheoremTag::kSmallPartTwo);
  EXPECT_EQ(classify_kmn(7, 2), TheoremTag::kSmallPartTwo);
  EXPECT_EQ(classify_kmn(3, 5), TheoremTag::kConjectureOnly);
  EXPECT_EQ(classify_kmn(3, 6), TheoremTag::kConjectureOnly);
  EXPECT_EQ(classify_kmn(4, 5), TheoremTag::kNearlyBalanced);
  EXPECT_EQ(classify_kmn(2, 3), TheoremTag::kNearlyBalanced);  // first rule wins
  EXPECT_EQ(classify_kmn(1, 1), TheoremTag::kBalanced);
  EXPECT_EQ(classify_kmn(1, 2), TheoremTag::kNearlyBalanced);
  EXPECT_EQ(classify_kmn(1, 5), TheoremTag::kLopsided);
  EXPECT_EQ(classify_kmn(3, 11), TheoremTag::kLopsided);
  EXPECT_EQ(classify_kmn(3, 10), TheoremTag::kConjectureOnly);
  EXPECT_THROW(classify_kmn(0, 3), InvalidArgument);
  EXPECT_EQ(to_string(TheoremTag::kLopsided), "Thm3.4");
  EXPECT_EQ(to_string(TheoremTag::kNotCompleteBipartite), "not-complete-bipartite");
}

TEST(SpectrumIndex, SmallOrders) {
  const auto two = index_spectra(2);
  ASSERT_EQ(two.groups().size(), 1u);
  EXPECT_EQ(to_json(two.groups()[0].spectrum), R"([["1",1]])");

  const auto three = index_spectra(3);
  EXPECT_EQ(three.class_count(), 2u);
  EXPECT_EQ(three.groups().size(), 2u);

  const auto four = index_spectra(4);
  EXPECT_EQ(four.class_count(), 6u);
  EXPECT_EQ(four.groups().size(), 6u);

  const auto five = index_spectra(5);
  EXPECT_EQ(five.class_count(), 21u);
  std::size_t members = 0;
  for (const auto& grp : five.groups()) {
    members += grp.members.size();
    EXPECT_TRUE(std::is_sorted(grp.members.begin(), grp.members.end()));
    for (const auto& c : grp.members) EXPECT_EQ(resistance_spectrum(to_graph(c)), grp.spectrum);
  }
  EXPECT_EQ(members, 21u);
  EXPECT_THROW(index_spectra(10), GuardError);
}

TEST(SpectrumIndex, GroupsAreExactSpectra) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto idx = index_spectra(n);
    std::map<ResistanceSpectrum, std::vector<CanonicalCode>> direct;
    for (const Graph& g : enumerate_connected(n)) direct[spectrum_by_determinants(g)].push_back(adjacency_code(g));
    ASSERT_EQ(idx.groups().size(), direct.size()) << n;
    std::size_t i = 0;
    for (const auto& [s, codes] : direct) {
      EXPECT_EQ(idx.groups()[i].spectrum, s);
      EXPECT_EQ(idx.groups()[i].members, codes);
      ASSERT_NE(idx.find(s), nullptr);
      ++i;
    }
  }
}

TEST(VerifyDrs, Examples) {
  const auto c4 = verify_drs(complete_bipartite(2, 2));
  EXPECT_TRUE(c4.determined());
  EXPECT_EQ(c4.theorem_tag, TheoremTag::kBalanced);
  EXPECT_EQ(c4.classes_searched, 6u);

  const auto star = verify_drs(complete_bipartite(1, 3));
  EXPECT_TRUE(star.determined());

  const auto k33 = verify_drs(complete_bipartite(3, 3));
  EXPECT_TRUE(k33.determined());
  EXPECT_EQ(k33.theorem_tag, TheoremTag::kBalanced);
  EXPECT_EQ(k33.classes_searched, 112u);

  const auto p4 = verify_drs(path_graph(4));
  EXPECT_EQ(p4.theorem_tag, TheoremTag::kNotCompleteBipartite);
  EXPECT_FALSE(p4.parts);

  EXPECT_THROW(verify_drs(Graph(3, {{0, 1}})), InvalidArgument);
  EXPECT_THROW(verify_drs(complete_bipartite(5, 5)), GuardError);
}

TEST(VerifyDrs, RelabelledTargetGivesSameVerdict) {
  const Graph k24 = complete_bipartite(2, 4);
  const Graph shuffled = relabel(k24, {5, 3, 0, 4, 1, 2});
  const auto a = verify_drs(k24), b = verify_drs(shuffled);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.impostors, b.impostors);
  EXPECT_EQ(b.parts, std::make_pair(std::size_t{2}, std::size_t{4}));
}

TEST(CheckTheorems, UpToSeven) {
  const auto six = check_theorems(6);
  for (const auto& v : six) {
    if (v.target.order() == 6) {
      EXPECT_TRUE(v.determined()) << to_graph6(v.target);
    }
  }
  EXPECT_EQ(theorem_exit_code(six), 0);

  const auto seven = check_theorems(7);
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  for (const auto& v : seven) parts.push_back(*v.parts);
  EXPECT_EQ(parts.front(), std::make_pair(std::size_t{1}, std::size_t{1}));
  EXPECT_EQ(parts.back(), std::make_pair(std::size_t{3}, std::size_t{4}));
  EXPECT_EQ(parts.size(), 12u);  // (m,n), m <= n, 2 <= m+n <= 7
  for (const auto& v : seven)
    if (is_theorem_backed(v.theorem_tag)) EXPECT_TRUE(v.determined()) << to_graph6(v.target);
  EXPECT_EQ(theorem_exit_code(seven), 0);
}

TEST(CheckTheorems, ExitCodeFlagsViolations) {
  auto verdicts = check_theorems(4);
  ASSERT_FALSE(verdicts.empty());
  verdicts.back().impostors.push_back(canonical_form(path_graph(4)));
  EXPECT_EQ(theorem_exit_code(verdicts), 2);
  verdicts.back().theorem_tag = TheoremTag::kConjectureOnly;
  EXPECT_EQ(theorem_exit_code(verdicts), 0);
}

TEST(Collisions, SmallOrdersAreEmpty) {
  EXPECT_TRUE(find_collisions(3).pairs.empty());
  const auto four = find_collisions(4);
  EXPECT_TRUE(four.pairs.empty());
  EXPECT_EQ(four.classes, 6u);
  EXPECT_EQ(four.distinct_spectra, 6u);
}

TEST(Collisions, PairsReVerify) {
  for (std::size_t n = 5; n <= 7; ++n) {
    const auto report = find_collisions(n);
    EXPECT_EQ(report.classes, enumerate_connected(n).size());
    for (const auto& p : report.pairs) {
      EXPECT_LT(p.first, p.second);
      EXPECT_FALSE(are_isomorphic(to_graph(p.first), to_graph(p.second)));
      EXPECT_EQ(spectrum_by_determinants(to_graph(p.first)), p.spectrum);
      EXPECT_EQ(spectrum_by_determinants(to_graph(p.second)), p.spectrum);
    }
  }
}

TEST(SpectrumCache, RoundTripAndReuse) {
  const auto dir = fresh_dir("drs");
  DrsOptions opts;
  opts.cache_dir = dir;
  const std::string first = to_json(check_theorems(6, opts));
  ASSERT_TRUE(std::filesystem::exists(dir / "spectra-6.tsv"));
  EXPECT_EQ(to_json(check_theorems(6, opts)), first);
  EXPECT_EQ(to_json(check_theorems(6)), first);

  std::ifstream in(dir / "spectra-4.tsv");
  std::string line;
  std::getline(in, line);
  EXPECT_NE(line.find('\t'), std::string::npos);
  EXPECT_EQ(line.front(), 'C');
  std::filesystem::remove_all(dir);

  std::vector<std::pair<Graph, ResistanceSpectrum>> rows{{path_graph(3), resistance_spectrum(path_graph(3))}};
  const std::string body = format_spectrum_cache(rows);
  EXPECT_EQ(body, "Bg\t[[\"1\",2],[\"2\",1]]\n");
  EXPECT_EQ(parse_spectrum_cache(body), rows);
  EXPECT_THROW(parse_spectrum_cache("Bg [[\"1\",2]]\n"), CacheError);
}

TEST(DrsJson, VerdictShape) {
  const std::string j = to_json(verify_drs(complete_bipartite(2, 2)));
  EXPECT_NE(j.find("\"theorem_tag\": \"Thm3.1\""), std::string::npos) << j;
  EXPECT_NE(j.find("\"determined\": true"), std::string::npos);
  EXPECT_NE(j.find("\"impostors\": []"), std::string::npos);
}

TEST(Determinism, ThreadCountDoesNotChangeReports) {
  DrsOptions one, four;
  four.threads = 4;
  EXPECT_EQ(to_json(check_theorems(7, one)), to_json(check_theorems(7, four)));
  EXPECT_EQ(to_json(find_collisions(7, one)), to_json(find_collisions(7, four)));
}
