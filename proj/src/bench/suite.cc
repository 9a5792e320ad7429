#include "suite.h"

#include "../search/run.h"

#include <atomic>
#include <iostream>
#include <mutex>
#include <thread>

using namespace std;

namespace bench {

vector<RunRecord> run_suite(const vector<SuiteConfig> &configs,
                            const vector<SuiteProblem> &problems, int jobs) {
    struct Job {
        const SuiteConfig *config;
        const SuiteProblem *problem;
    };
    vector<Job> queue;
    for (const SuiteConfig &config : configs)
        for (const SuiteProblem &problem : problems)
            queue.push_back(Job{&config, &problem});

    vector<RunRecord> records(queue.size());
    atomic<size_t> next(0);
    mutex log_mutex;

    auto worker = [&]() {
        while (true) {
            size_t index = next.fetch_add(1);
            if (index >= queue.size())
                return;
            const Job &job = queue[index];
            search::SearchResult result =
                search::run_search(*job.problem->task, job.config->dck,
                                   job.config->search);
            RunRecord record;
            record.config_id = job.config->id;
            record.problem_id = job.problem->id;
            record.evaluations = result.stats.evaluated;
            if (result.solved) {
                if (search::validate_plan(*job.problem->task, result.plan)) {
                    record.solved = true;
                    record.time = rational_from_seconds(result.stats.time);
                    record.plan_length = result.plan_length();
                } else {
                    lock_guard<mutex> lock(log_mutex);
                    cerr << "SOUNDNESS BUG: invalid plan for "
                         << job.config->id << " on " << job.problem->id
                         << "; run marked failed\n";
                }
            }
            records[index] = move(record);
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        vector<thread> pool;
        for (int i = 0; i < jobs; ++i)
            pool.emplace_back(worker);
        for (thread &t : pool)
            t.join();
    }
    return records;
}

}
