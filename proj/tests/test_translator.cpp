#include <gtest/gtest.h>

#include "test_support.hpp"
#include "unipy/error.hpp"
#include "unipy/io.hpp"
#include "unipy/langpack.hpp"
#include "unipy/lexer.hpp"
#include "unipy/translator.hpp"

using namespace unipy::translator;
using unipy::langpack::resolve_pack;
using unipy::testing::count_lines;

namespace {

const Translator& urdu() {
    static const Translator t(resolve_pack("ur"));
    return t;
}

std::string fwd(std::string_view s) { return urdu().translate(s, Direction::Forward).output; }
std::string rev(std::string_view s) { return urdu().translate(s, Direction::Reverse).output; }

// Reference value of a run of Extended Arabic-Indic digits, computed without
// the library: U+06F0..U+06F9 are two-byte sequences DB B0..DB B9.
long long extended_arabic_value(std::string_view s) {
    long long v = 0;
    for (std::size_t i = 0; i + 1 < s.size(); i += 2) v = v * 10 + (static_cast<unsigned char>(s[i + 1]) - 0xB0);
    return v;
}

std::string extended_arabic(long long v) {
    std::string digits = std::to_string(v), out;
    for (char c : digits) {
        out += '\xDB';
        out += static_cast<char>(0xB0 + (c - '0'));
    }
    return out;
}

}  // namespace

TEST(Translator, KeywordTableForward) {
    const std::pair<const char*, const char*> rows[] = {
        {"لکھو", "print"}, {"اگر", "if"},       {"ورنہاگر", "elif"}, {"ورنہ", "else"},
        {"جب تک", "while"}, {"جو", "for"},       {"اندر", "in"},      {"داخلہ", "input"},
        {"ٹوڑ", "break"},   {"جاری", "continue"}, {"گزر", "pass"},     {"حق", "True"},
        {"باطل", "False"},
    };
    for (auto [local, english] : rows) {
        EXPECT_EQ(fwd(local), english);
        EXPECT_EQ(rev(english), local);
    }
}

TEST(Translator, LocalizedDigits) {
    EXPECT_EQ(fwd("۵"), "5");
    EXPECT_EQ(fwd("۹۰"), "90");
    EXPECT_EQ(fwd("۱۰"), "10");
    EXPECT_EQ(fwd("۲۰۲۵"), "2025");
    EXPECT_EQ(rev("2025"), "۲۰۲۵");
    EXPECT_EQ(rev("0xFF"), "0xFF");
}

TEST(Translator, DigitsInsideIdentifiersStayPut) {
    EXPECT_EQ(fwd("x۲ = ۲"), "x۲ = 2");
    EXPECT_EQ(rev("x2 = 2"), "x2 = ۲");
}

TEST(Translator, MixedScriptNumberWarns) {
    const auto r = urdu().translate("x = ۱2", Direction::Forward);
    EXPECT_EQ(r.output, "x = 12");
    ASSERT_FALSE(r.warnings.empty());
    EXPECT_EQ(r.warnings[0].kind, unipy::DiagnosticKind::MixedScriptNumber);
}

TEST(Translator, ForeignDigitsPassThroughWithWarning) {
    const auto r = urdu().translate("x = ١٢", Direction::Forward);
    EXPECT_EQ(r.output, "x = ١٢");
    ASSERT_FALSE(r.warnings.empty());
    EXPECT_EQ(r.warnings[0].kind, unipy::DiagnosticKind::ForeignDigits);
}

TEST(Translator, StringsAndCommentsAreOpaque) {
    const std::string src = "لکھو(\"اگر ۲\")  # ورنہ ۳";
    const auto r = urdu().translate(src, Direction::Forward);
    EXPECT_EQ(r.output, "print(\"اگر ۲\")  # ورنہ ۳");
    EXPECT_EQ(rev("print('if 2')  # else"), "لکھو('if 2')  # else");
}

TEST(Translator, OpaqueKeywordsAreReported) {
    const auto r = urdu().translate("لکھو(\"اگر\")", Direction::Forward);
    ASSERT_EQ(r.warnings.size(), 1u);
    EXPECT_EQ(r.warnings[0].kind, unipy::DiagnosticKind::OpaqueKeySkip);
}

TEST(Translator, KeywordsMatchWholeTokensOnly) {
    EXPECT_EQ(fwd("اگرچہ = ۱"), "اگرچہ = 1");
    EXPECT_EQ(rev("iffy = format_input"), "iffy = format_input");
}

TEST(Translator, MultiWordKeysMatchLongestFirst) {
    EXPECT_EQ(fwd("جب تک x:"), "while x:");
    EXPECT_EQ(fwd("جب  تک"), "جب  تک");  // two spaces is not the key
    EXPECT_EQ(fwd("اور اگر x:"), "elif x:");
    EXPECT_EQ(fwd("x اور y"), "x and y");
}

TEST(Translator, PunctuationBothWays) {
    EXPECT_EQ(fwd("math۔sqrt(۴، ۲)"), "math.sqrt(4, 2)");
    EXPECT_EQ(rev("math.sqrt(4, 2)"), "math۔sqrt(۴، ۲)");
    EXPECT_EQ(rev("x = 3.5"), "x = ۳.۵");
}

TEST(Translator, SubstitutionsCarryPositions) {
    const auto r = urdu().translate("x = ۲\nاگر x:", Direction::Forward);
    ASSERT_EQ(r.substitutions.size(), 2u);
    EXPECT_EQ(r.substitutions[0], (Substitution{1, 5, "۲", "2", SubstitutionKind::Digit}));
    EXPECT_EQ(r.substitutions[1], (Substitution{2, 1, "اگر", "if", SubstitutionKind::Keyword}));
}

TEST(Translator, ConflatedRowWarnsInBothDirections) {
    const Translator t(unipy::langpack::parse_pack(unipy::testing::fixture("packs/ur_is_eq.yaml")));
    const auto back = t.translate("x is None", Direction::Reverse);
    EXPECT_EQ(back.output, "x ہے کچھنہیں");
    EXPECT_FALSE(back.warnings.empty());
    const auto there = t.translate(back.output, Direction::Forward);
    EXPECT_EQ(there.output, "x == None");
    EXPECT_FALSE(there.warnings.empty());
}

TEST(Translator, InvalidPackIsRejected) {
    EXPECT_THROW(Translator(unipy::langpack::parse_pack(unipy::testing::fixture("packs/nine_digits.yaml"))),
                 unipy::PackError);
}

TEST(Translator, EmptyInput) {
    const auto r = urdu().translate("", Direction::Forward);
    EXPECT_EQ(r.output, "");
    EXPECT_TRUE(r.substitutions.empty());
}

TEST(Translator, IdentifierTranslationIsOptIn) {
    EXPECT_EQ(fwd("کچھ = ۲"), "کچھ = 2");
    TranslateOptions opts;
    opts.translate_identifiers = true;
    const auto r = urdu().translate("کچھ = ۲\nلکھو(کچھ)", Direction::Forward, opts);
    EXPECT_EQ(r.output, "kchh = 2\nprint(kchh)");
}

TEST(Pivot, UrduToHindi) {
    const auto hi = resolve_pack("hi");
    const auto r = pivot("اگر x:\n    لکھو(۲)", resolve_pack("ur"), hi);
    EXPECT_EQ(r.output, "अगर x:\n    छापो(२)");
}

TEST(Pivot, SamePackIsIdentityOnCleanSource) {
    const std::string src = unipy::io::read_file(unipy::testing::fixture("hello.ur.py"));
    EXPECT_EQ(pivot(src, urdu(), urdu()).output, src);
}

TEST(TranslatorProperty, ReverseThenForwardIsIdentityOverCorpus) {
    for (const auto& path : unipy::testing::corpus_programs()) {
        const auto src = unipy::io::read_file(path);
        EXPECT_EQ(fwd(rev(src)), src) << path;
    }
}

TEST(TranslatorProperty, EmptyPackIsIdentity) {
    const Translator none(unipy::langpack::load_pack_text("code: en\nkeywords: {}\n"));
    unipy::testing::SourceFuzzer fuzz(99);
    for (int i = 0; i < 2000; ++i) {
        const auto src = fuzz.next();
        ASSERT_EQ(none.translate(src, Direction::Forward).output, src);
        ASSERT_EQ(none.translate(src, Direction::Reverse).output, src);
    }
}

TEST(TranslatorProperty, LineCountIsStable) {
    unipy::testing::SourceFuzzer fuzz(1234);
    for (int i = 0; i < 2000; ++i) {
        const auto src = fuzz.next();
        ASSERT_EQ(count_lines(fwd(src)), count_lines(src)) << src;
        ASSERT_EQ(count_lines(rev(src)), count_lines(src)) << src;
    }
}

TEST(TranslatorProperty, OpaqueTokensSurviveVerbatim) {
    unipy::testing::SourceFuzzer fuzz(555);
    for (int i = 0; i < 2000; ++i) {
        const auto src = fuzz.next();
        std::vector<std::string> before;
        for (const auto& t : unipy::lexer::tokenize(src))
            if (unipy::lexer::is_opaque(t)) before.push_back(t.text);
        const auto out = fwd(src);
        std::size_t from = 0;
        for (const auto& text : before) {
            const auto at = out.find(text, from);
            ASSERT_NE(at, std::string::npos) << src;
            from = at + text.size();
        }
    }
}

TEST(TranslatorProperty, NumericValuePreserved) {
    for (long long v : {0LL, 1LL, 7LL, 10LL, 90LL, 2025LL, 1234567890LL, 9876543210123LL}) {
        const auto local = extended_arabic(v);
        ASSERT_EQ(extended_arabic_value(local), v);
        EXPECT_EQ(fwd(local), std::to_string(v));
        EXPECT_EQ(rev(std::to_string(v)), local);
    }
}

TEST(TranslatorProperty, ForwardIsIdempotentOnEnglish) {
    for (const auto& path : unipy::testing::corpus_programs()) {
        const auto src = unipy::io::read_file(path);
        EXPECT_EQ(fwd(src), src) << path;
    }
}
