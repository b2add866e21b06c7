#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "disaff/features/tokenizer.hpp"
#include "disaff/util/random.hpp"
#include "disaff/util/utf8.hpp"

using namespace disaff;
using namespace disaff::features;
using Tokens = std::vector<std::string>;

TEST(TokenizeWords, UrlBecomesLinkToken) {
    EXPECT_EQ(tokenize_words("Vota! http://ex.am/p"), (Tokens{"vota", "!", "<link>"}));
    EXPECT_EQ(tokenize_words("(www.sito.it) https://a.b"), (Tokens{"(", "<link>", "<link>"}));
}

TEST(TokenizeWords, EmptyText) {
    EXPECT_TRUE(tokenize_words("").empty());
    EXPECT_TRUE(tokenize_words(" \t\n ").empty());
}

TEST(TokenizeWords, EmoticonsAndMentionsStayWhole) {
    EXPECT_EQ(tokenize_words("ciao :) @mario"), (Tokens{"ciao", ":)", "@mario"}));
    EXPECT_EQ(tokenize_words("Ciao :-D"), (Tokens{"ciao", ":-d"}));
    EXPECT_EQ(tokenize_words("@Mario_Rossi, grazie"), (Tokens{"@mario_rossi", ",", "grazie"}));
}

TEST(TokenizeWords, PunctuationPeeledFromBothEnds) {
    EXPECT_EQ(tokenize_words("\"Basta!!\""), (Tokens{"\"", "basta", "!", "!", "\""}));
    EXPECT_EQ(tokenize_words("l'Italia..."), (Tokens{"l'italia", ".", ".", "."}));
    EXPECT_EQ(tokenize_words("#governo"), (Tokens{"#", "governo"}));
    EXPECT_EQ(tokenize_words("!!!"), (Tokens{"!", "!", "!"}));
}

TEST(TokenizeWords, TrailingEmoticonSplitsOff) {
    EXPECT_EQ(tokenize_words("bello:)"), (Tokens{"bello", ":)"}));
    // Letter-initial emoticons are only recognized as whole chunks.
    EXPECT_EQ(tokenize_words("tuxd"), (Tokens{"tuxd"}));
    EXPECT_EQ(tokenize_words("XD"), (Tokens{"xd"}));
}

TEST(TokenizeWords, LowercasesAccentedLetters) {
    EXPECT_EQ(tokenize_words("PERCHÉ Città"), (Tokens{"perché", "città"}));
}

TEST(TokenizeWords, TotalAndDeterministicOnArbitraryBytes) {
    util::Rng rng(1);
    for (int i = 0; i < 2000; ++i) {
        std::string s;
        const auto n = rng.below(40);
        for (std::uint64_t j = 0; j < n; ++j) s.push_back(static_cast<char>(rng.below(256)));
        const auto a = tokenize_words(s);
        EXPECT_EQ(a, tokenize_words(s));
        for (const auto& t : a) EXPECT_FALSE(t.empty());
        const auto g = char_ngrams(s, 3);
        EXPECT_EQ(g, char_ngrams(s, 3));
    }
}

TEST(EmoticonTable, ShippedFileMatchesBuiltin) {
    std::ifstream in(DISAFF_DATA_DIR "/emoticons.txt");
    ASSERT_TRUE(in);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.front() != '#') lines.push_back(line);
    }
    ASSERT_EQ(lines.size(), kDefaultEmoticons.size());
    for (std::size_t i = 0; i < lines.size(); ++i) EXPECT_EQ(lines[i], kDefaultEmoticons[i]);
}

TEST(EmoticonTable, CustomTable) {
    std::istringstream in("# custom\n<(^_^)>\n");
    const auto table = EmoticonTable::load(in);
    EXPECT_EQ(table.size(), 1u);
    EXPECT_EQ(tokenize_words("ok <(^_^)> :)", table), (Tokens{"ok", "<(^_^)>", ":", ")"}));
}

TEST(CharNgrams, Examples) {
    EXPECT_EQ(char_ngrams("monti"), (Tokens{"monti"}));
    EXPECT_TRUE(char_ngrams("ab").empty());
    EXPECT_EQ(char_ngrams("a b c d"), (Tokens{"a b c", " b c ", "b c d"}));
    EXPECT_EQ(char_ngrams("MoNtI!", 5), (Tokens{"monti", "onti!"}));
    EXPECT_EQ(char_ngrams("a\tb\nc", 3), (Tokens{"a b", " b ", "b c"}));
    EXPECT_EQ(char_ngrams("città", 2), (Tokens{"ci", "it", "tt", "tà"}));
    EXPECT_THROW(char_ngrams("x", 0), ValidationError);
}

TEST(CharNgrams, LengthLaw) {
    util::Rng rng(2);
    const std::u32string alphabet = U"ab cèé!Ω";
    for (int i = 0; i < 1000; ++i) {
        std::u32string s;
        const auto len = rng.below(30);
        for (std::uint64_t j = 0; j < len; ++j) s.push_back(alphabet[rng.below(alphabet.size())]);
        const std::size_t n = 1 + rng.below(7);
        const auto grams = char_ngrams(util::encode_utf8(s), n);
        EXPECT_EQ(grams.size(), s.size() >= n ? s.size() - n + 1 : 0u);
    }
}
