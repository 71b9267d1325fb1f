// Check records shared by the verification suites and the CLI report
// writer.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace wpyr {

struct CheckRecord {
    std::string check_id;
    std::string instance;
    std::string status; // "pass", "fail", "skipped(guard)"
    std::string witness;
    std::string pyramid; // stamped by the harness
};

struct CheckReport {
    std::vector<CheckRecord> records;

    void pass(std::string id, std::string instance)
    {
        records.push_back({std::move(id), std::move(instance), "pass", "", ""});
    }
    void fail(std::string id, std::string instance, std::string witness)
    {
        records.push_back({std::move(id), std::move(instance), "fail", std::move(witness), ""});
    }
    void skip(std::string id, std::string instance, std::string why)
    {
        records.push_back(
            {std::move(id), std::move(instance), "skipped(guard)", std::move(why), ""});
    }
    void check(std::string id, std::string instance, bool ok, std::string witness = "")
    {
        if (ok)
            pass(std::move(id), std::move(instance));
        else
            fail(std::move(id), std::move(instance), std::move(witness));
    }

    void merge(const CheckReport& o)
    {
        records.insert(records.end(), o.records.begin(), o.records.end());
    }

    void sort()
    {
        std::sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
            return std::tie(a.check_id, a.pyramid, a.instance) <
                   std::tie(b.check_id, b.pyramid, b.instance);
        });
    }

    long long count(const std::string& status) const
    {
        long long n = 0;
        for (const auto& r : records)
            n += (r.status == status);
        return n;
    }
    long long passed() const { return count("pass"); }
    long long failed() const { return count("fail"); }
    long long skipped() const { return count("skipped(guard)"); }
    bool all_passed() const { return failed() == 0; }
};

} // namespace wpyr
