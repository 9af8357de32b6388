#include "corpus.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include <unistd.h>

#include <fmt/format.h>

#include "chmeta/model/schema.hpp"

namespace testsupport {

namespace fs = std::filesystem;
using namespace chmeta;

fs::path fixtures_dir() {
    return CHMETA_FIXTURES_DIR;
}

TempDir::TempDir(std::string_view tag) {
    static std::atomic<int> counter{0};
    std::random_device rd;
    path_ = fs::temp_directory_path() /
            fmt::format("chmeta-{}-{}-{}-{:x}", tag, ::getpid(), counter++, rd());
    fs::remove_all(path_);
    fs::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
}

namespace {

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) {
    return std::bernoulli_distribution(p)(rng);
}

}  // namespace

std::string random_cell(Rng& rng) {
    static const std::vector<std::string> atoms = {
        "",       "",          "a",         "Brief",  ",",     "\"",       "\"\"", "\n",    "\r\n",   "\r",
        " ",      "\t",        "ä",         "€",      "𝄞",     "Keppler, Johannes",    "2.13",  "1820/1825",
        "~1750",  "P-000001",  "12-14,17",  "x\"y",   "key",   "value",    ";",    "|",     "\\",     "#",
    };
    std::string s;
    const int parts = uniform(rng, 0, 4);
    for (int i = 0; i < parts; ++i)
        s += pick(rng, atoms);
    return s;
}

UnitWorkbook random_workbook(Rng& rng, const SchemaConfig& schema) {
    UnitWorkbook w;
    w.unit_id = "u" + std::to_string(rng() % 100000);
    w.schema_version = schema.version;

    const int metric_rows = uniform(rng, 0, 6);
    for (int i = 0; i < metric_rows; ++i)
        w.metric.emplace_back(random_cell(rng), random_cell(rng));

    auto ids = schema.field_ids();
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(ids.size()))));
    w.columns = ids;

    const int rows = uniform(rng, 0, 8);
    for (int r = 0; r < rows; ++r) {
        DocumentRecord rec;
        for (const auto& c : w.columns)
            rec.values[c] = random_cell(rng);
        w.documents.push_back(std::move(rec));
    }

    if (chance(rng, 0.6)) {
        std::vector<ScanBinding> map;
        std::set<std::pair<std::uint32_t, std::string>> used;
        const int n = uniform(rng, 0, 6);
        static const std::vector<std::string> roles = {"recto", "verso", "detail", "a,b", "r\"1"};
        for (int i = 0; i < n; ++i) {
            ScanBinding b{static_cast<std::uint32_t>(uniform(rng, 1, 99999)), pick(rng, roles), random_cell(rng)};
            if (used.emplace(b.card_no, b.role).second)
                map.push_back(std::move(b));
        }
        w.map = std::move(map);
    }
    return w;
}

SecCatalog synthetic_sec(std::size_t persons, std::size_t places) {
    std::vector<SecEntry> ps;
    std::vector<SecEntry> ls;
    ps.reserve(persons);
    ls.reserve(places);
    for (std::size_t i = 1; i <= persons; ++i) {
        SecEntry e;
        e.id = SecId{SecKind::Person, static_cast<std::uint32_t>(i)};
        e.preferred_name = fmt::format("Person{}, Given", i);
        e.variant_names = {fmt::format("Persona{}, G.", i)};
        const int birth = 1500 + static_cast<int>(i % 350);
        e.birth = std::to_string(birth);
        e.death = std::to_string(birth + 30 + static_cast<int>(i % 70));
        e.external_urls = {fmt::format("https://d-nb.info/gnd/{}", 100000000 + i)};
        ps.push_back(std::move(e));
    }
    for (std::size_t i = 1; i <= places; ++i) {
        SecEntry e;
        e.id = SecId{SecKind::Place, static_cast<std::uint32_t>(i)};
        e.preferred_name = fmt::format("Place{}", i);
        e.external_urls = {fmt::format("https://www.geonames.org/{}/", 3000000 + i)};
        ls.push_back(std::move(e));
    }
    return SecCatalog(std::move(ps), std::move(ls));
}

UnitWorkbook clean_unit(Rng& rng, const std::string& name, int documents, const SecCatalog& sec, bool bind_scans) {
    const auto schema = default_schema();
    const auto shelfmark = parse_shelfmark("SA, " + name);
    UnitWorkbook w = new_unit_workbook(shelfmark, schema);
    const auto& persons = sec.persons();
    const auto& places = sec.places();
    auto person = [&] { return pick(rng, persons).id.to_string(); };

    std::array<std::uint32_t, 10> next_seq{};
    std::uint32_t card = 1;
    for (int i = 0; i < documents; ++i) {
        const auto cat = kAllCategories[static_cast<std::size_t>(uniform(rng, 0, 8))];
        const auto seq = ++next_seq[static_cast<std::size_t>(to_digit(cat))];
        DocumentRecord d;
        for (const auto& c : w.columns)
            d.values[c] = "";
        d.values[std::string(field::kDocNo)] = fmt::format("{}.{}", to_digit(cat), seq);
        d.values[std::string(field::kTitle)] = fmt::format("Document {} of {}", i + 1, name);
        const int year = uniform(rng, 1500, 1900);
        switch (uniform(rng, 0, 3)) {
        case 0: d.values[std::string(field::kDate)] = std::to_string(year); break;
        case 1: d.values[std::string(field::kDate)] = fmt::format("{}-{:02d}-{:02d}", year, uniform(rng, 1, 12), uniform(rng, 1, 28)); break;
        case 2: d.values[std::string(field::kDate)] = fmt::format("{}/{}", year, year + uniform(rng, 0, 5)); break;
        default: break;
        }
        if (cat == Category::OutgoingCorrespondence || cat == Category::IncomingCorrespondence) {
            d.values[std::string(field::kSender)] = "Sender name";
            d.values[std::string(field::kSenderSec)] = person();
            d.values[std::string(field::kRecipientSec)] = person();
        } else if (cat == Category::PersonalMaterials || cat == Category::HistoricalMaterials) {
            d.values[std::string(field::kIssuerSec)] = person();
        } else if (cat == Category::CreativeWorks) {
            d.values[std::string(field::kAuthor)] = "Author name";
            d.values[std::string(field::kAuthorSec)] = person();
        }
        if (!places.empty() && chance(rng, 0.5))
            d.values[std::string(field::kPlaceSec)] = pick(rng, places).id.to_string();
        const std::uint32_t span = static_cast<std::uint32_t>(uniform(rng, 1, 2));
        d.values[std::string(field::kCards)] =
            span == 1 ? std::to_string(card) : fmt::format("{}-{}", card, card + span - 1);
        card += span;
        w.documents.push_back(std::move(d));
    }

    for (auto& [k, v] : w.metric) {
        if (k == metric_key::kTitle)
            v = "Papers of " + name;
        else if (k == metric_key::kCardCount)
            v = std::to_string(card - 1);
        else if (k == metric_key::kFormat)
            v = "Folder";
    }

    if (bind_scans) {
        std::vector<ScanBinding> map;
        std::uint32_t file = 1;
        for (std::uint32_t c = 1; c < card; ++c) {
            map.push_back({c, "recto", fmt::format("{:05d}.tif", file++)});
            if (c % 2 == 0)
                map.push_back({c, "verso", fmt::format("{:05d}.tif", file++)});
        }
        w.map = std::move(map);
    }
    return w;
}

std::vector<std::string> bound_files(const UnitWorkbook& w) {
    std::set<std::string> files;
    if (w.map)
        for (const auto& b : *w.map)
            if (!b.scan_file.empty())
                files.insert(b.scan_file);
    return {files.begin(), files.end()};
}

UnitWorkbook inject_faults(UnitWorkbook w, Rng& rng, int count) {
    auto cell = [&](std::string_view id) -> std::string& {
        if (std::find(w.columns.begin(), w.columns.end(), id) == w.columns.end())
            w.columns.emplace_back(id);
        if (w.documents.empty()) {
            DocumentRecord d;
            d.values[std::string(field::kDocNo)] = "1.1";
            d.values[std::string(field::kTitle)] = "Injected";
            w.documents.push_back(std::move(d));
        }
        auto& d = w.documents[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(w.documents.size()) - 1))];
        return d.values[std::string(id)];
    };
    auto metric = [&](std::string_view key) -> std::string& {
        for (auto& [k, v] : w.metric)
            if (k == key)
                return v;
        return w.metric.emplace_back(std::string(key), "").second;
    };
    for (int i = 0; i < count; ++i) {
        switch (uniform(rng, 0, 15)) {
        case 0: cell(field::kTitle).clear(); break;
        case 1: cell(field::kDate) = "1900-02-29"; break;
        case 2: cell(field::kDate) = "18th century"; break;
        case 3: cell(field::kDate) = "1830/1820"; break;
        case 4: cell(field::kDocNo) = pick(rng, std::vector<std::string>{"10.2", "3.07", "x", "", "2"}); break;
        case 5: {
            // repeat another row's number
            const auto n = std::string(w.documents.empty() ? "1.1" : w.documents.front().value(field::kDocNo));
            cell(field::kDocNo) = n;
            break;
        }
        case 6: cell(field::kDocNo) = fmt::format("{}.{}", uniform(rng, 1, 9), uniform(rng, 40, 60)); break;
        case 7: cell(field::kSenderSec) = "P-999999"; break;
        case 8: cell(field::kPlaceSec) = "P-000001"; break;
        case 9: cell(field::kAuthorSec) = "L-000001"; break;
        case 10: cell(field::kCards) = pick(rng, std::vector<std::string>{"9-3", "0", "a-b", "1,,2"}); break;
        case 11: cell(field::kSender) = "Somebody"; break;
        case 12: cell(field::kIssuerSec) = "P-0001"; break;
        case 13: metric(metric_key::kTitle).clear(); break;
        case 14: metric(metric_key::kShelfmark) = "Keppler"; break;
        default: metric(metric_key::kCardCount) = "many"; break;
        }
    }
    return w;
}

}  // namespace testsupport
