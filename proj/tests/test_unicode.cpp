#include <gtest/gtest.h>

#include "unipy/io.hpp"
#include "unipy/unicode.hpp"

namespace u = unipy::unicode;

TEST(Unicode, DecodesMultiByteSequences) {
    const std::string s = "aب€😀";
    auto d = u::decode(s, 0);
    EXPECT_EQ(d.cp, U'a');
    EXPECT_EQ(d.length, 1u);
    d = u::decode(s, 1);
    EXPECT_EQ(d.cp, U'ب');
    EXPECT_EQ(d.length, 2u);
    d = u::decode(s, 3);
    EXPECT_EQ(d.cp, U'€');
    EXPECT_EQ(d.length, 3u);
    d = u::decode(s, 6);
    EXPECT_EQ(d.cp, U'\U0001F600');
    EXPECT_EQ(d.length, 4u);
    EXPECT_TRUE(d.valid);
}

TEST(Unicode, MalformedBytesAdvanceByOne) {
    const std::string s = "\xff\xd9";
    auto d = u::decode(s, 0);
    EXPECT_FALSE(d.valid);
    EXPECT_EQ(d.length, 1u);
    EXPECT_EQ(d.cp, U'�');
    d = u::decode(s, 1);
    EXPECT_FALSE(d.valid);
    EXPECT_EQ(d.length, 1u);
}

TEST(Unicode, EncodeRoundTrip) {
    for (char32_t cp : {U'A', U'۵', U'०', U'中', U'\U0001F600'}) {
        const auto s = u::to_utf8(cp);
        EXPECT_EQ(u::decode(s, 0).cp, cp);
        EXPECT_EQ(u::decode(s, 0).length, s.size());
    }
}

TEST(Unicode, CountsCodePoints) {
    EXPECT_EQ(u::count_code_points(""), 0u);
    EXPECT_EQ(u::count_code_points("abc"), 3u);
    EXPECT_EQ(u::count_code_points("اگر"), 3u);
    EXPECT_TRUE(u::is_ascii("print(1)"));
    EXPECT_FALSE(u::is_ascii("لکھو"));
}

TEST(Unicode, DecimalDigitsOfEveryScript) {
    const std::pair<char32_t, int> digits[] = {
        {U'7', 7}, {U'۵', 5}, {U'٣', 3}, {U'३', 3}, {U'৯', 9}, {U'８', 8},
    };
    for (auto [cp, value] : digits) {
        EXPECT_EQ(u::decimal_value(cp), value);
        EXPECT_TRUE(u::is_identifier_char(cp));
        EXPECT_FALSE(u::is_identifier_start(cp));
    }
    EXPECT_EQ(u::decimal_value(U'a'), -1);
    EXPECT_EQ(u::decimal_value(U'一'), -1);  // CJK numeral "one" is a letter, not a digit
}

TEST(Unicode, IdentifierClasses) {
    EXPECT_TRUE(u::is_identifier_start(U'_'));
    EXPECT_TRUE(u::is_identifier_start(U'ک'));
    EXPECT_TRUE(u::is_identifier_start(U'中'));
    EXPECT_TRUE(u::is_identifier_char(U'ि'));  // Devanagari vowel sign (Mc)
    EXPECT_FALSE(u::is_identifier_char(U'-'));
    EXPECT_FALSE(u::is_identifier_char(U'۔'));
}

TEST(Unicode, PunctuationAndSpace) {
    EXPECT_TRUE(u::is_punctuation(U'۔'));
    EXPECT_TRUE(u::is_punctuation(U'،'));
    EXPECT_TRUE(u::is_punctuation(U'，'));
    EXPECT_FALSE(u::is_punctuation(U'+'));  // Sm
    EXPECT_TRUE(u::is_inline_space(U' '));
    EXPECT_TRUE(u::is_inline_space(U'\t'));
    EXPECT_FALSE(u::is_inline_space(U'\n'));
}

TEST(Unicode, SingleCodePoint) {
    EXPECT_TRUE(u::is_single_code_point("۵"));
    EXPECT_FALSE(u::is_single_code_point("۵۵"));
    EXPECT_FALSE(u::is_single_code_point(""));
}

TEST(Io, StripsBom) {
    std::string text = std::string(unipy::io::kUtf8Bom) + "x = 1";
    EXPECT_TRUE(unipy::io::strip_bom(text));
    EXPECT_EQ(text, "x = 1");
    EXPECT_FALSE(unipy::io::strip_bom(text));
}
