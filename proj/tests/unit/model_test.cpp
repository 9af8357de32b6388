#include <algorithm>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "chmeta/error.hpp"
#include "chmeta/model/category.hpp"
#include "chmeta/model/date.hpp"
#include "chmeta/model/document_number.hpp"
#include "chmeta/model/schema.hpp"
#include "chmeta/model/shelfmark.hpp"
#include "corpus.hpp"

using namespace chmeta;
namespace chr = std::chrono;

namespace {

chr::year_month_day ymd(int y, unsigned m, unsigned d) {
    return chr::year_month_day{chr::year{y}, chr::month{m}, chr::day{d}};
}

bool contains(const std::vector<std::string>& v, std::string_view s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST(Category, NineMembersAndCodeLabelRoundTrip) {
    EXPECT_EQ(kAllCategories.size(), 9u);
    std::set<std::string_view> labels;
    for (int code = 1; code <= 9; ++code) {
        const auto c = category_from_code(code);
        ASSERT_TRUE(c);
        EXPECT_EQ(to_digit(*c), code);
        labels.insert(label(*c));
        EXPECT_EQ(category_from_label(label(*c)), c);
    }
    EXPECT_EQ(labels.size(), 9u);
    EXPECT_FALSE(category_from_code(0));
    EXPECT_FALSE(category_from_code(10));
    EXPECT_FALSE(category_from_label("Letters"));
}

TEST(CategorySet, MembersFollowInsertion) {
    CategorySet s{Category::IncomingCorrespondence, Category::OutgoingCorrespondence};
    EXPECT_TRUE(s.contains(Category::OutgoingCorrespondence));
    EXPECT_FALSE(s.contains(Category::Portraits));
    EXPECT_EQ(s.members(), (std::vector<Category>{Category::OutgoingCorrespondence, Category::IncomingCorrespondence}));
    EXPECT_EQ(CategorySet::all().members().size(), 9u);
    EXPECT_TRUE(CategorySet{}.empty());
}

TEST(DocumentNumber, Examples) {
    EXPECT_EQ(parse_document_number("1.1"), (DocumentNumber{Category::Portraits, 1}));
    EXPECT_EQ(parse_document_number("2.13"), (DocumentNumber{Category::OutgoingCorrespondence, 13}));
    EXPECT_EQ(try_parse_document_number("10.2").code(), Errc::CategoryOutOfRange);
    EXPECT_EQ(try_parse_document_number("3.07").code(), Errc::NonCanonicalForm);
}

TEST(DocumentNumber, Rejections) {
    EXPECT_EQ(try_parse_document_number("2").code(), Errc::NotTwoParts);
    EXPECT_EQ(try_parse_document_number("2.1.1").code(), Errc::NotTwoParts);
    EXPECT_EQ(try_parse_document_number("").code(), Errc::NotTwoParts);
    EXPECT_EQ(try_parse_document_number("0.4").code(), Errc::CategoryOutOfRange);
    EXPECT_EQ(try_parse_document_number("a.4").code(), Errc::CategoryOutOfRange);
    EXPECT_EQ(try_parse_document_number("02.4").code(), Errc::NonCanonicalForm);
    EXPECT_EQ(try_parse_document_number(" 2.4").code(), Errc::NonCanonicalForm);
    EXPECT_EQ(try_parse_document_number("2.4 ").code(), Errc::NonCanonicalForm);
    EXPECT_EQ(try_parse_document_number("2.0").code(), Errc::SequenceNotPositiveInteger);
    EXPECT_EQ(try_parse_document_number("2.-1").code(), Errc::SequenceNotPositiveInteger);
    EXPECT_EQ(try_parse_document_number("2.").code(), Errc::SequenceNotPositiveInteger);
    EXPECT_EQ(try_parse_document_number("2.99999999999").code(), Errc::SequenceNotPositiveInteger);
    EXPECT_THROW(parse_document_number("x"), Error);
}

TEST(DocumentNumber, RoundTripProperty) {
    testsupport::Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        const DocumentNumber d{kAllCategories[rng() % 9], static_cast<std::uint32_t>(1 + rng() % 100000)};
        const auto s = d.to_string();
        EXPECT_EQ(parse_document_number(s), d);
        EXPECT_EQ(parse_document_number(s).to_string(), s);
    }
}

TEST(DocumentNumber, OrdersByCategoryThenSequence) {
    EXPECT_LT(parse_document_number("1.9"), parse_document_number("2.1"));
    EXPECT_LT(parse_document_number("2.2"), parse_document_number("2.10"));
}

TEST(DateExpression, Examples) {
    const auto full = parse_date_expression("1832-03-22");
    EXPECT_EQ(full.kind, DateKind::Single);
    EXPECT_EQ(full.qualifier, DateQualifier::Exact);
    EXPECT_EQ(full.start.precision, DatePrecision::Day);
    EXPECT_EQ(try_parse_date_expression("1900-02-29").code(), Errc::CalendarInvalid);

    const auto range = parse_date_expression("1820/1825");
    EXPECT_EQ(range.kind, DateKind::Range);
    EXPECT_EQ(range.start.year, 1820);
    ASSERT_TRUE(range.end);
    EXPECT_EQ(range.end->year, 1825);
    EXPECT_EQ(range.start.precision, DatePrecision::Year);

    const auto approx = parse_date_expression("~1750");
    EXPECT_EQ(approx.kind, DateKind::Single);
    EXPECT_EQ(approx.qualifier, DateQualifier::Approximate);
}

TEST(DateExpression, GrammarProductions) {
    EXPECT_EQ(parse_date_expression("?1750-04").qualifier, DateQualifier::Uncertain);
    EXPECT_EQ(parse_date_expression("1750-04").start.precision, DatePrecision::Month);
    EXPECT_EQ(parse_date_expression("1820/..").kind, DateKind::OpenRange);
    EXPECT_EQ(parse_date_expression("2000-02-29").start.day, 29u);
    EXPECT_EQ(try_parse_date_expression("1830/1820").code(), Errc::RangeReversed);
    EXPECT_EQ(try_parse_date_expression("1820-13").code(), Errc::CalendarInvalid);
    EXPECT_EQ(try_parse_date_expression("1820-00").code(), Errc::CalendarInvalid);
    EXPECT_EQ(try_parse_date_expression("1820-04-31").code(), Errc::CalendarInvalid);
    for (const auto* bad : {"", "18", "18th century", "1820-4-1", "1820/", "~", "~1820/1830", "1820 ", "c. 1820",
                            "1820-04-01T10:00", "../1820"})
        EXPECT_EQ(try_parse_date_expression(bad).code(), Errc::GrammarMismatch) << bad;
}

TEST(DateExpression, RangeComparesAtCommonPrecision) {
    // the year 1820 contains March 1820, so neither end is after the other
    EXPECT_TRUE(try_parse_date_expression("1820/1820-03"));
    EXPECT_TRUE(try_parse_date_expression("1820-03-05/1820-03"));
    EXPECT_EQ(try_parse_date_expression("1820-04/1820-03-31").code(), Errc::RangeReversed);
}

TEST(DateExpression, TextRoundTrip) {
    for (const auto* s : {"1832", "1832-03", "1832-03-22", "1820/1825", "1820-01/1820-02-03", "1820/..", "~1750",
                          "?1750-12-31"})
        EXPECT_EQ(parse_date_expression(s).to_string(), s);
}

TEST(DateExpression, IntervalPerPrecision) {
    // year precision covers the whole year, month the whole month, day the day
    for (int y = 1500; y <= 1900; y += 7) {
        const auto yi = interval_of(parse_date_expression(std::to_string(y)));
        EXPECT_EQ(yi.first, ymd(y, 1, 1));
        EXPECT_EQ(*yi.last, ymd(y, 12, 31));
        for (unsigned m = 1; m <= 12; ++m) {
            char buf[16];
            std::snprintf(buf, sizeof buf, "%04d-%02u", y, m);
            const auto mi = interval_of(parse_date_expression(buf));
            EXPECT_EQ(mi.first, ymd(y, m, 1));
            const auto next = chr::sys_days(ymd(m == 12 ? y + 1 : y, m == 12 ? 1 : m + 1, 1)) - chr::days(1);
            EXPECT_EQ(chr::sys_days(*mi.last), next);
            std::snprintf(buf, sizeof buf, "%04d-%02u-15", y, m);
            const auto di = interval_of(parse_date_expression(buf));
            EXPECT_EQ(di.first, ymd(y, m, 15));
            EXPECT_EQ(*di.last, ymd(y, m, 15));
        }
    }
    EXPECT_FALSE(interval_of(parse_date_expression("1820/..")).last);
    const auto r = interval_of(parse_date_expression("1820-02/1821"));
    EXPECT_EQ(r.first, ymd(1820, 2, 1));
    EXPECT_EQ(*r.last, ymd(1821, 12, 31));
}

TEST(Shelfmark, Examples) {
    EXPECT_EQ(parse_shelfmark("SA, Keppler, Johannes").name, "Keppler, Johannes");
    EXPECT_EQ(parse_shelfmark("SA, X").name, "X");
    EXPECT_EQ(try_parse_shelfmark("Keppler, Johannes").code(), Errc::MissingPrefix);
    EXPECT_EQ(try_parse_shelfmark("SA,").code(), Errc::EmptyName);
    EXPECT_EQ(try_parse_shelfmark("SA,   ").code(), Errc::EmptyName);
    EXPECT_EQ(try_parse_shelfmark("SA,X").code(), Errc::MissingPrefix);
}

TEST(Shelfmark, UnitIdIsSlug) {
    EXPECT_EQ(parse_shelfmark("SA, Keppler, Johannes").unit_id(), "sa-keppler-johannes");
    EXPECT_EQ(parse_shelfmark("SA, A").unit_id(), "sa-a");
    EXPECT_EQ(parse_shelfmark("SA, X").to_string(), "SA, X");
}

TEST(Schema, DefaultBlockingExamples) {
    const auto s = default_schema();
    const auto b1 = blocked_fields(Category::Portraits, s);
    for (const auto* f : {"sender", "recipient", "issuer", "author"})
        EXPECT_TRUE(contains(b1, f)) << f;

    const auto a2 = applicable_fields(Category::OutgoingCorrespondence, s);
    EXPECT_TRUE(contains(a2, "sender"));
    EXPECT_TRUE(contains(a2, "recipient"));
    const auto b2 = blocked_fields(Category::OutgoingCorrespondence, s);
    EXPECT_TRUE(contains(b2, "issuer"));
    EXPECT_TRUE(contains(b2, "author"));

    const auto a3 = applicable_fields(Category::CreativeWorks, s);
    EXPECT_TRUE(contains(a3, "author"));
    const auto b3 = blocked_fields(Category::CreativeWorks, s);
    for (const auto* f : {"sender", "recipient", "issuer"})
        EXPECT_TRUE(contains(b3, f)) << f;
}

TEST(Schema, ApplicableAndBlockedPartitionFields) {
    const auto s = default_schema();
    const auto ids = s.field_ids();
    const std::set<std::string> all(ids.begin(), ids.end());
    for (const auto c : kAllCategories) {
        const auto a = applicable_fields(c, s);
        const auto b = blocked_fields(c, s);
        std::set<std::string> u(a.begin(), a.end());
        for (const auto& f : b)
            EXPECT_TRUE(u.insert(f).second) << f << " both applicable and blocked";
        EXPECT_EQ(u, all);
    }
}

TEST(Schema, DefaultContainsBuiltins) {
    const auto s = default_schema();
    EXPECT_NO_THROW(validate_schema(s));
    const auto* doc_no = s.find("doc_no");
    ASSERT_NE(doc_no, nullptr);
    EXPECT_TRUE(doc_no->mandatory);
    EXPECT_TRUE(s.find("title")->mandatory);
    EXPECT_EQ(s.find("date")->kind, ValueKind::DateExpression);
    EXPECT_EQ(s.find("cards")->kind, ValueKind::CardRange);
    EXPECT_EQ(s.find("sender_sec")->kind, ValueKind::SecPersonRef);
    EXPECT_EQ(s.find("place_sec")->kind, ValueKind::SecPlaceRef);
    EXPECT_EQ(s.find("nope"), nullptr);
}

TEST(Schema, ParseAddsAndOverridesFields) {
    std::istringstream in(R"(version = 2
sequencing_mode = "per-unit"

[fields.language]
label = "Language"
mandatory = false
categories = [1, 2, 3, 4, 5, 6, 7, 8, 9]
kind = "text"

[fields.remarks]
label = "Notes"
)");
    const auto s = parse_schema(in);
    EXPECT_EQ(s.version, 2);
    EXPECT_EQ(s.sequencing_mode, SequencingMode::PerUnit);
    ASSERT_NE(s.find("language"), nullptr);
    EXPECT_EQ(s.fields.back().id, "language");
    EXPECT_EQ(s.find("language")->label, "Language");
    EXPECT_EQ(s.find("remarks")->label, "Notes");
    EXPECT_EQ(s.fields.size(), default_schema().fields.size() + 1);
}

TEST(Schema, ParseRejectsBadConfig) {
    auto fails = [](const std::string& text) {
        std::istringstream in(text);
        try {
            parse_schema(in);
        } catch (const Error& e) {
            return e.code() == Errc::ConfigInvalid;
        }
        return false;
    };
    EXPECT_TRUE(fails("version = zero\n"));
    EXPECT_TRUE(fails("sequencing_mode = \"weekly\"\n"));
    EXPECT_TRUE(fails("[fields.x]\nkind = \"colour\"\n"));
    EXPECT_TRUE(fails("[fields.x]\ncategories = []\n"));
    EXPECT_TRUE(fails("[fields.x]\ncategories = [0]\n"));
    EXPECT_TRUE(fails("[fields.doc_no]\nmandatory = false\n"));
    EXPECT_TRUE(fails("[fields.date]\nkind = \"text\"\n"));
    EXPECT_TRUE(fails("colour = red\n"));
}

TEST(Schema, ValidateRejectsDuplicates) {
    auto s = default_schema();
    s.fields.push_back(s.fields.front());
    EXPECT_THROW(validate_schema(s), Error);
}
