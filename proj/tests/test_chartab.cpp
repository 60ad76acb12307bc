#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "hk/chartab.hpp"
#include "hk/json_io.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hk;
using namespace hk::testing;

namespace {

std::vector<long> sorted_degrees(const CharacterTable& t) {
  auto d = t.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST(CharTab, Degrees) {
  EXPECT_EQ(sorted_degrees(*character_table(s3())), (std::vector<long>{1, 1, 2}));
  EXPECT_EQ(sorted_degrees(*character_table(s4())), (std::vector<long>{1, 1, 2, 3, 3}));
  EXPECT_EQ(sorted_degrees(*character_table(q8())), (std::vector<long>{1, 1, 1, 1, 2}));
  EXPECT_EQ(sorted_degrees(*character_table(a5())), (std::vector<long>{1, 3, 3, 4, 5}));
  EXPECT_EQ(sorted_degrees(*character_table(sl23())), (std::vector<long>{1, 1, 1, 2, 2, 2, 3}));
  EXPECT_EQ(sorted_degrees(*character_table(a4())), (std::vector<long>{1, 1, 1, 3}));
}

TEST(CharTab, TrivialRowFirstAndDegreesAscending) {
  for (auto G : {s3(), s4(), q8(), a5(), sl23(), d6()}) {
    auto t = character_table(G);
    EXPECT_EQ((*t)[0], ClassFunction::trivial(G));
    EXPECT_TRUE(std::is_sorted(t->degrees().begin(), t->degrees().end()));
  }
}

TEST(CharTab, CyclicGroupCharacters) {
  for (std::size_t n : {1, 2, 5, 6, 12}) {
    auto G = cyclic(n);
    auto t = character_table(G);
    ASSERT_EQ(t->size(), n);
    // generator g = element for (1 2 ... n); rows are g^k -> zeta^{jk}
    const std::size_t g = n == 1 ? 0 : *G->index_of(G->generators()[0]);
    std::vector<bool> seen(n, false);
    for (const auto& chi : t->irreducibles()) {
      int j = -1;
      for (int c = 0; c < static_cast<int>(n); ++c) {
        if (chi.at_element(g) == Cyclotomic::root_of_unity(static_cast<int>(n), c)) j = c;
      }
      ASSERT_GE(j, 0);
      seen[j] = true;
      for (long long k = 0; k < static_cast<long long>(n); ++k) {
        EXPECT_EQ(chi.at_element(G->power(g, k)), Cyclotomic::root_of_unity(static_cast<int>(n), (j * k) % n));
      }
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  }
}

TEST(CharTab, ElementLevelOrthogonalityOracle) {
  for (auto G : {s4(), sl23(), a5(), d6()}) {
    auto t = character_table(G);
    for (std::size_t i = 0; i < t->size(); ++i) {
      for (std::size_t j = 0; j < t->size(); ++j) {
        auto ip = float_inner_product((*t)[i], (*t)[j]);
        EXPECT_NEAR(std::abs(ip - std::complex<double>(i == j ? 1.0 : 0.0)), 0.0, 1e-9);
      }
      for (std::size_t g = 0; g < G->order(); ++g) {
        EXPECT_LE(std::abs((*t)[i].at_element(g).to_complex()), static_cast<double>(t->degrees()[i]) + 1e-9);
      }
    }
  }
}

TEST(CharTab, PermutationCharacterDecomposesIntoCharacters) {
  for (auto G : {s4(), a5(), d6(), sl23()}) {
    auto t = character_table(G);
    auto pi = fixed_points(G);
    auto v = decompose(pi, *t);
    EXPECT_TRUE(v.is_character());
    EXPECT_EQ(reconstruct(v, *t), pi);
    EXPECT_EQ(v.coeffs[0], 1);  // transitive actions
  }
}

TEST(CharTab, DixonAgreesWithDualGroupOnAbelianGroups) {
  for (auto G : {cyclic(6), cyclic(8), klein(), cyclic(12)}) {
    auto a = compute_character_table(G);
    auto b = compute_character_table_dixon(G);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
  }
}

TEST(CharTab, RegularCharacter) {
  for (auto G : {s3(), q8(), a5()}) {
    auto t = character_table(G);
    auto reg = t->regular();
    EXPECT_EQ(reg, ClassFunction::regular(G));
    auto v = decompose(reg, *t);
    for (std::size_t i = 0; i < t->size(); ++i) EXPECT_EQ(v.coeffs[i], t->degrees()[i]);
    EXPECT_EQ(induce(ClassFunction::trivial(trivial_subgroup(*G)), G), reg);
  }
}

TEST(CharTab, Deterministic) {
  auto a = compute_character_table(sl23());
  auto b = compute_character_table(sl23());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

class CharTabFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / ("hk_chartab_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(CharTabFiles, SaveLoadRoundTrip) {
  for (auto G : {s3(), q8(), a5(), sl23()}) {
    auto t = character_table(G);
    auto path = dir_ / (G->name() + ".json");
    save_table(*t, path);
    auto loaded = load_table(path);
    ASSERT_EQ(loaded.size(), t->size());
    EXPECT_TRUE(loaded.group()->same_as(*G));
    for (std::size_t i = 0; i < t->size(); ++i) EXPECT_EQ(loaded[i].values(), (*t)[i].values());
  }
}

TEST_F(CharTabFiles, TamperedDegreeRejected) {
  auto t = character_table(s3());
  auto path = dir_ / "s3.json";
  save_table(*t, path);
  auto j = read_json_file(path);
  j["irreducibles"][2][0] = cyclotomic_to_json(Cyclotomic(3));
  write_json_file(path, j);
  try {
    load_table(path);
    FAIL() << "tampered table accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VerificationFailed);
  }
}

TEST_F(CharTabFiles, MalformedFileIsSchemaError) {
  auto path = dir_ / "bad.json";
  std::ofstream(path) << "{\"group\": 5}";
  try {
    load_table(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SchemaError);
  }
}

TEST_F(CharTabFiles, ExternalTableAcceptedWithoutRecomputation) {
  // handwritten S3 table in a different row and class order
  auto path = dir_ / "s3_external.json";
  std::ofstream(path) << R"({
    "group": {"name": "S3", "degree": 3, "generators": [[2,3,1],[2,1,3]]},
    "exponent": 6,
    "classes": [{"rep": [2,1,3], "size": 3}, {"rep": [1,2,3], "size": 1}, {"rep": [2,3,1], "size": 2}],
    "irreducibles": [["0", "2", "-1"], ["-1", "1", "1"], ["1", "1", "1"]]
  })";
  auto t = load_table(path);
  EXPECT_EQ(sorted_degrees(t), (std::vector<long>{1, 1, 2}));
  EXPECT_EQ(t[0], ClassFunction::trivial(t.group()));
}
