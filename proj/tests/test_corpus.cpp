#include "factswords/corpus.hpp"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

namespace {

using fw::bytes_to_symbols;
using fw::chars_to_symbols;
using fw::CorpusConfig;
using fw::CorpusMode;
using fw::ingest_corpus;
using fw::tokenize_words;

class CorpusFiles : public ::testing::Test {
 protected:
  std::filesystem::path temp_file(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() /
                      ("fw_corpus_" + name + "_" + std::to_string(::getpid()));
    std::ofstream out(path, std::ios::binary);
    out << body;
    out.close();
    created_.push_back(path);
    return path;
  }

  void TearDown() override {
    for (const auto& p : created_) std::filesystem::remove(p);
  }

  std::vector<std::filesystem::path> created_;
};

TEST(CharsMode, FirstOccurrenceIds) {
  const auto ingest = chars_to_symbols("abca");
  EXPECT_EQ(ingest.seq.alphabet_size, 3u);
  EXPECT_EQ(ingest.seq.symbols, (std::vector<std::uint32_t>{0, 1, 2, 0}));
  EXPECT_EQ(ingest.id_to_char, (std::vector<unsigned char>{'a', 'b', 'c'}));
}

TEST(CharsMode, RoundTripsThroughIdMap) {
  const std::string text = "the quick brown fox: jumps; over 1234!";
  const auto ingest = chars_to_symbols(text);
  std::string rebuilt;
  for (std::uint32_t s : ingest.seq.symbols)
    rebuilt.push_back(static_cast<char>(ingest.id_to_char[s]));
  EXPECT_EQ(rebuilt, text);
}

TEST(CharsMode, SingleCharacterStreamStillBinaryAlphabet) {
  const auto ingest = chars_to_symbols("aaaa");
  EXPECT_EQ(ingest.seq.alphabet_size, 2u);
  ingest.seq.validate();
}

TEST(BytesMode, FourByteFile) {
  const auto x = bytes_to_symbols(std::string("\x00\x41\xff\x7f", 4));
  EXPECT_EQ(x.alphabet_size, 256u);
  EXPECT_EQ(x.symbols, (std::vector<std::uint32_t>{0, 0x41, 0xff, 0x7f}));
}

TEST(BytesMode, DeclaredAlphabetChecked) {
  EXPECT_EQ(bytes_to_symbols("abc", 128).alphabet_size, 128u);
  EXPECT_THROW(bytes_to_symbols(std::string("\xf0", 1), 128), std::invalid_argument);
  EXPECT_THROW(bytes_to_symbols("abc", 1), std::invalid_argument);
  EXPECT_THROW(bytes_to_symbols("abc", 300), std::invalid_argument);
}

TEST(WordTokens, StatedNormalization) {
  EXPECT_EQ(tokenize_words("The the, cat."),
            (std::vector<std::string>{"the", "the", "cat"}));
  EXPECT_EQ(tokenize_words("  spaced\t\tout\nlines "),
            (std::vector<std::string>{"spaced", "out", "lines"}));
  // Pure punctuation tokens vanish; interior punctuation survives.
  EXPECT_EQ(tokenize_words("-- 'don't' --"), (std::vector<std::string>{"don't"}));
  EXPECT_TRUE(tokenize_words("   \n\t ").empty());
}

TEST_F(CorpusFiles, IngestDispatchesOnMode) {
  const auto path = temp_file("abc", "The the, cat.");
  CorpusConfig config;
  config.input_path = path.string();

  config.mode = CorpusMode::word_tokens;
  EXPECT_EQ(ingest_corpus(config).tokens.size(), 3u);

  config.mode = CorpusMode::bytes;
  auto bytes = ingest_corpus(config);
  ASSERT_TRUE(bytes.seq.has_value());
  EXPECT_EQ(bytes.seq->size(), 13u);
  EXPECT_EQ(bytes.seq->alphabet_size, 256u);

  config.mode = CorpusMode::chars;
  auto chars = ingest_corpus(config);
  ASSERT_TRUE(chars.seq.has_value());
  EXPECT_EQ(chars.seq->size(), 13u);
  EXPECT_LT(chars.seq->alphabet_size, 13u);
}

TEST_F(CorpusFiles, MaxSymbolsCap) {
  const auto path = temp_file("cap", "aaaaaaaaaa bbbb cc d");
  CorpusConfig config;
  config.input_path = path.string();
  config.mode = CorpusMode::bytes;
  config.max_symbols = 5;
  EXPECT_EQ(ingest_corpus(config).seq->size(), 5u);
  config.mode = CorpusMode::word_tokens;
  config.max_symbols = 2;
  EXPECT_EQ(ingest_corpus(config).tokens.size(), 2u);
}

TEST_F(CorpusFiles, ErrorsAreExplicit) {
  CorpusConfig config;
  config.input_path = "/nonexistent/gone.txt";
  EXPECT_THROW(ingest_corpus(config), std::runtime_error);
  const auto path = temp_file("empty", "");
  config.input_path = path.string();
  EXPECT_THROW(ingest_corpus(config), std::runtime_error);
  const auto punct = temp_file("punct", "... --- ...");
  config.input_path = punct.string();
  config.mode = CorpusMode::word_tokens;
  EXPECT_THROW(ingest_corpus(config), std::runtime_error);
}

}  // namespace
