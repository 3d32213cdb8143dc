#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "athos/store.hpp"
#include "support/generators.hpp"

namespace athos {
namespace {

namespace fs = std::filesystem;

class StoreTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("athos-store-" + std::to_string(::getpid()) + "-" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    static FormDocument doc(const std::string& name) {
        FormDocument d;
        d.form.name = name;
        d.form.title = name;
        return d;
    }

    fs::path dir_;
};

TEST_F(StoreTest, CreateThenGetReturnsCanonicalBytes) {
    FormStore store(dir_);
    const auto d = doc("MainForm");
    const auto id = store.create(d);
    EXPECT_TRUE(is_form_id(id));
    EXPECT_TRUE(store.exists(id));
    EXPECT_EQ(store.get_bytes(id), serialize_form(d));
    EXPECT_EQ(store.get(id), d);
    EXPECT_TRUE(fs::exists(dir_ / (id + ".athos.json")));
}

TEST_F(StoreTest, PutReplaces) {
    FormStore store(dir_);
    const auto id = store.create(doc("A"));
    store.put(id, doc("B"), true);
    EXPECT_EQ(store.get(id).form.name, "B");
}

TEST_F(StoreTest, MissingIds) {
    FormStore store(dir_);
    EXPECT_THROW(store.get("000000000000"), NotFound);
    EXPECT_THROW(store.put("000000000000", doc("A"), true), NotFound);
    EXPECT_THROW(store.remove("000000000000"), NotFound);
    EXPECT_THROW(store.get("../etc/passwd"), NotFound);
    EXPECT_FALSE(store.exists("ABCDEF000000"));
}

TEST_F(StoreTest, InvalidFormsAreNotStored) {
    FormStore store(dir_);
    auto bad = doc("A");
    bad.form.width = 0;
    EXPECT_THROW(store.create(bad), ValidationFailed);
    EXPECT_TRUE(store.list().empty());
}

TEST_F(StoreTest, ListIsSortedAndSkipsForeignFiles) {
    FormStore store(dir_);
    std::vector<std::string> ids;
    for (int i = 0; i < 5; ++i) ids.push_back(store.create(doc("F" + std::to_string(i))));
    std::ofstream(dir_ / "notes.txt") << "x";
    std::ofstream(dir_ / "zzzzzzzzzzzz.athos.json") << "{}";
    const auto list = store.list();
    ASSERT_EQ(list.size(), 5u);
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        EXPECT_EQ(list[i].id, ids[i]);
        EXPECT_EQ(list[i].updated_at.size(), 20u);
        EXPECT_EQ(list[i].updated_at.back(), 'Z');
    }
}

TEST_F(StoreTest, RemoveDeletes) {
    FormStore store(dir_);
    const auto id = store.create(doc("A"));
    store.remove(id);
    EXPECT_FALSE(store.exists(id));
    EXPECT_THROW(store.get(id), NotFound);
}

TEST_F(StoreTest, ConcurrentWritersLeaveAWholeDocument) {
    FormStore store(dir_);
    const auto id = store.create(doc("Start"));
    const auto reg = default_registry();
    std::vector<std::string> candidates;
    testing::FormGen gen(43);
    for (int i = 0; i < 16; ++i) candidates.push_back(serialize_form(gen.valid_document(reg)));

    std::atomic<bool> torn{false};
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&, t] {
            for (int i = 0; i < 50; ++i) {
                const auto& bytes = candidates[static_cast<std::size_t>(t * 2 + i % 2)];
                store.put(id, parse_form(bytes), true);
                const auto seen = store.get_bytes(id);
                if (std::find(candidates.begin(), candidates.end(), seen) == candidates.end()) torn = true;
            }
        });
    }
    for (auto& th : threads) th.join();
    EXPECT_FALSE(torn);
    const auto final_bytes = store.get_bytes(id);
    EXPECT_NE(std::find(candidates.begin(), candidates.end(), final_bytes), candidates.end());
    for (const auto& e : fs::directory_iterator(dir_)) {
        EXPECT_NE(e.path().extension(), ".tmp") << e.path();
    }
}

}  // namespace
}  // namespace athos
