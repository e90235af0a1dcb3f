#ifndef PUREO_SRC_SEARCH_ENGINE_HPP
#define PUREO_SRC_SEARCH_ENGINE_HPP

// Orderly generation of equal-degree monomial sets up to variable relabeling.
//
// Monomials of degree n on s variables are numbered in code order (larger
// leading exponent first). A node is a set of ids kept in increasing order;
// its children append a strictly larger id. A node is kept only if its id
// list is lexicographically minimal over all relabelings of its variables.
// Minimality is inherited by the prefix obtained by dropping the largest id,
// so every orbit is visited exactly once, and a minimal set always uses a
// prefix x1..xu of the variables.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include <pureo/monomial.hpp>
#include <pureo/search.hpp>

namespace pureo::detail
{

using mono_id = std::uint16_t;

class universe
{
public:
    /// Throws guardrail_error when the tables would be too large.
    universe(unsigned s, unsigned n);

    unsigned variables() const noexcept
    {
        return m_s;
    }
    unsigned degree() const noexcept
    {
        return m_n;
    }
    std::size_t size() const noexcept
    {
        return m_size;
    }
    std::span<const std::uint8_t> support(mono_id m) const noexcept
    {
        return m_support[m];
    }
    /// One past the largest variable (0-based) used by m.
    unsigned top_var(mono_id m) const noexcept
    {
        return m_top[m];
    }
    /// Ids of the degree-d divisors of m within the degree-d stratum, 1 <= d < n.
    std::span<const std::uint32_t> divisors(mono_id m, unsigned d) const noexcept
    {
        return m_divisors[d][m];
    }
    std::size_t stratum_size(unsigned d) const noexcept
    {
        return m_stratum_size[d];
    }
    /// Non-identity permutations that fix every variable from u on.
    std::span<const std::uint32_t> perms_within(unsigned u) const noexcept
    {
        return m_perms_within[u];
    }
    const mono_id *image_row(std::uint32_t perm) const noexcept
    {
        return m_images.data() + static_cast<std::size_t>(perm) * m_size;
    }
    monomial to_monomial(mono_id m) const;

private:
    unsigned m_s;
    unsigned m_n;
    std::size_t m_size = 0;
    std::vector<std::vector<std::uint8_t>> m_exponents;
    std::vector<std::vector<std::uint8_t>> m_support;
    std::vector<unsigned> m_top;
    std::vector<std::vector<std::vector<std::uint32_t>>> m_divisors;
    std::vector<std::size_t> m_stratum_size;
    std::vector<std::vector<std::uint32_t>> m_perms_within;
    std::vector<mono_id> m_images;
};

class search_state
{
public:
    explicit search_state(const universe &u);

    void push(mono_id m);
    void pop();

    std::span<const mono_id> chosen() const noexcept
    {
        return m_chosen;
    }
    std::size_t size() const noexcept
    {
        return m_chosen.size();
    }
    /// Distinct degree-d divisors of the chosen set; count(n) is size().
    std::uint64_t count(unsigned d) const noexcept
    {
        return m_counts[d];
    }
    unsigned variables_used() const noexcept
    {
        return m_vars_used;
    }
    bool support_is_prefix() const noexcept
    {
        return m_top.empty() || m_top.back() == m_vars_used;
    }
    std::vector<std::uint64_t> h() const
    {
        return m_counts;
    }

private:
    const universe &m_universe;
    std::vector<mono_id> m_chosen;
    std::vector<std::vector<std::uint32_t>> m_refs;
    std::vector<std::uint64_t> m_counts;
    std::vector<std::uint32_t> m_var_refs;
    unsigned m_vars_used = 0;
    std::vector<unsigned> m_top;
};

/// True iff no relabeling of the state's variables yields a smaller id list.
bool is_canonical(const universe &u, const search_state &st, std::vector<mono_id> &scratch);

generator_set to_generator_set(const universe &u, std::span<const mono_id> ids);

struct task {
    std::vector<mono_id> chosen;
    bool subtree;
};

// Shared by every worker of one run.
class run_control
{
public:
    run_control(std::uint64_t node_budget, std::chrono::milliseconds time_budget)
        : m_node_budget(node_budget), m_deadline(std::chrono::steady_clock::now() + time_budget)
    {
    }

    /// Counts one node; false once a budget is gone.
    bool count_node()
    {
        if (m_nodes.fetch_add(1, std::memory_order_relaxed) + 1 > m_node_budget) {
            abort("nodes");
            return false;
        }
        return !aborted();
    }
    bool check_clock()
    {
        if (std::chrono::steady_clock::now() > m_deadline) {
            abort("time");
        }
        return !aborted();
    }
    bool aborted() const noexcept
    {
        return m_aborted.load(std::memory_order_relaxed);
    }
    std::string exhausted_budget() const
    {
        std::lock_guard lock(m_mutex);
        return m_budget;
    }

    /// Lowest task index known to hold a hit; later tasks may stop early.
    std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};

private:
    void abort(const char *budget)
    {
        std::lock_guard lock(m_mutex);
        if (!m_aborted.load()) {
            m_budget = budget;
            m_aborted.store(true);
        }
    }

    std::uint64_t m_node_budget;
    std::chrono::steady_clock::time_point m_deadline;
    std::atomic<std::uint64_t> m_nodes{0};
    std::atomic<bool> m_aborted{false};
    mutable std::mutex m_mutex;
    std::string m_budget;
};

template <typename Policy>
struct task_outcome {
    Policy policy;
    std::uint64_t nodes = 0;
    bool complete = false;
};

// Depth-first expansion below the state's current node.
//
// Policy supplies:
//   bool admissible(const search_state &)        prune test for a fresh child
//   std::size_t candidate_end(const search_state &)   ids >= this are never tried
//   bool wants_children(const search_state &)
//   bool visit(const search_state &, std::uint64_t rank)   true stops the task
template <typename Policy>
class expander
{
public:
    expander(const universe &u, Policy &policy, run_control &control, std::size_t task_index, bool stop_on_hit)
        : m_universe(u), m_policy(policy), m_control(control), m_task(task_index), m_stop_on_hit(stop_on_hit)
    {
    }

    /// Visits the current node, then its subtree if requested. False when the
    /// task was cut short by a budget or by an earlier task's hit.
    bool run(search_state &st, bool subtree, std::uint64_t &nodes)
    {
        if (!m_control.count_node()) {
            return false;
        }
        ++nodes;
        if (m_policy.visit(st, nodes)) {
            return true;
        }
        if (subtree && m_policy.wants_children(st)) {
            return expand(st, nodes) != outcome::cut;
        }
        return true;
    }

    /// Appends one task per node down to split_depth, in preorder.
    bool collect(search_state &st, unsigned split_depth, std::vector<task> &out)
    {
        const std::size_t first = st.size() == 0 ? 0 : std::size_t{st.chosen().back()} + 1;
        const std::size_t end = std::min(m_policy.candidate_end(st), m_universe.size());
        for (std::size_t id = first; id < end; ++id) {
            if (!m_control.check_clock()) {
                return false;
            }
            st.push(static_cast<mono_id>(id));
            if (accept(st)) {
                const std::vector<mono_id> chosen(st.chosen().begin(), st.chosen().end());
                if (st.size() >= split_depth) {
                    out.push_back({chosen, true});
                } else {
                    out.push_back({chosen, false});
                    if (m_policy.wants_children(st) && !collect(st, split_depth, out)) {
                        st.pop();
                        return false;
                    }
                }
            }
            st.pop();
        }
        return true;
    }

private:
    enum class outcome { done, stopped, cut };

    bool accept(search_state &st)
    {
        return st.support_is_prefix() && m_policy.admissible(st) && is_canonical(m_universe, st, m_scratch);
    }

    outcome expand(search_state &st, std::uint64_t &nodes)
    {
        const std::size_t first = std::size_t{st.chosen().back()} + 1;
        const std::size_t end = std::min(m_policy.candidate_end(st), m_universe.size());
        for (std::size_t id = first; id < end; ++id) {
            if ((++m_ticks & 63u) == 0) {
                if (!m_control.check_clock()) {
                    return outcome::cut;
                }
                if (m_stop_on_hit && m_control.first_hit.load(std::memory_order_relaxed) < m_task) {
                    return outcome::cut;
                }
            }
            st.push(static_cast<mono_id>(id));
            if (accept(st)) {
                if (!m_control.count_node()) {
                    st.pop();
                    return outcome::cut;
                }
                ++nodes;
                if (m_policy.visit(st, nodes)) {
                    st.pop();
                    return outcome::stopped;
                }
                if (m_policy.wants_children(st)) {
                    const auto r = expand(st, nodes);
                    if (r != outcome::done) {
                        st.pop();
                        return r;
                    }
                }
            }
            st.pop();
        }
        return outcome::done;
    }

    const universe &m_universe;
    Policy &m_policy;
    run_control &m_control;
    std::size_t m_task;
    bool m_stop_on_hit;
    std::uint64_t m_ticks = 0;
    std::vector<mono_id> m_scratch;
};

/// Splits the tree into preorder tasks and runs them on up to `jobs` threads.
///
/// Outcomes come back in task order. With stop_on_hit, a task whose policy
/// reports a hit lets every later task stop; all earlier tasks still run to
/// completion so the first hit in serial order is well defined.
template <typename Policy>
std::optional<std::vector<task_outcome<Policy>>> run_tasks(const universe &u, const Policy &prototype,
                                                           run_control &control, unsigned jobs, bool stop_on_hit,
                                                           unsigned split_depth = 2)
{
    std::vector<task> tasks;
    {
        Policy p = prototype;
        search_state root(u);
        expander<Policy> e(u, p, control, 0, false);
        if (!e.collect(root, split_depth, tasks)) {
            return std::nullopt;
        }
    }

    std::vector<task_outcome<Policy>> outcomes(tasks.size(), task_outcome<Policy>{prototype});
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) {
                return;
            }
            if (stop_on_hit && control.first_hit.load() < i) {
                continue;
            }
            auto &out = outcomes[i];
            search_state st(u);
            for (auto id : tasks[i].chosen) {
                st.push(id);
            }
            expander<Policy> e(u, out.policy, control, i, stop_on_hit);
            out.complete = e.run(st, tasks[i].subtree, out.nodes);
            if (stop_on_hit && out.policy.hit()) {
                std::size_t cur = control.first_hit.load();
                while (i < cur && !control.first_hit.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    return outcomes;
}

} // namespace pureo::detail

#endif
