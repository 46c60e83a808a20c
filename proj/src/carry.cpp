#include <holdring/carry.hpp>
#include <holdring/error.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

namespace holdring {

    namespace {

        std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept {
            return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                                   : a + b;
        }

        // Carry digits of `carry` that land below `limit` relative positions,
        // with trailing Zero removed.
        std::vector<Digit> clipped(const DigitString& carry, std::size_t limit) {
            std::vector<Digit> out(carry.digits().begin(),
                                   carry.digits().begin() + static_cast<std::ptrdiff_t>(std::min(limit, carry.size())));
            while (!out.empty() && out.back().is_zero()) {
                out.pop_back();
            }
            return out;
        }

        bool by_exponent(Digit x, Digit y) noexcept { return x.exponent() < y.exponent(); }

        // Slots are folded in sorted order, so the process only depends on each slot's multiset.
        std::vector<int> state_key(const std::deque<std::vector<Digit>>& ahead) {
            std::vector<int> key;
            for (const auto& slot : ahead) {
                const auto start = key.size();
                for (const Digit d : slot) {
                    key.push_back(d.exponent());
                }
                std::sort(key.begin() + static_cast<std::ptrdiff_t>(start), key.end());
                key.push_back(-2);
            }
            return key;
        }

    } // namespace

    std::uint64_t CarryState::pending_count() const noexcept {
        return saturating_add(static_cast<std::uint64_t>(pending.size()), idle_lists);
    }

    FaithfulAdder::FaithfulAdder(const DigitString& a, const DigitString& b, std::size_t m, const NumberSystem& sys)
        : a_(a.padded(m)), b_(b.padded(m)), modulus_(m), sys_(&sys) {
        state_.produced.reserve(m);
    }

    void FaithfulAdder::step() {
        if (done()) {
            return;
        }
        const std::size_t k = state_.produced.size();
        const std::size_t room = modulus_ - k - 1;

        std::vector<PendingList> fresh;
        std::uint64_t fresh_idle = 0;
        Digit running = a_[k];
        auto fold = [&](Digit term) {
            const HoldPair& h = sys_->pair(running, term);
            running = h.low;
            auto digits = clipped(h.carry, room);
            if (digits.empty()) {
                ++fresh_idle;
            } else {
                fresh.push_back(PendingList{std::move(digits), 0});
            }
        };

        fold(b_[k]);
        for (const PendingList& list : state_.pending) {
            fold(list.front());
        }
        // Idle lists contribute Zero terms: H(x, 0) = (x, 0), one idle carry each.
        fresh_idle = saturating_add(fresh_idle, state_.idle_lists);

        std::vector<PendingList> next;
        next.reserve(state_.pending.size() + fresh.size());
        std::uint64_t idle = state_.idle_lists;
        for (PendingList& list : state_.pending) {
            ++list.offset;
            if (list.exhausted()) {
                idle = saturating_add(idle, 1);
            } else {
                next.push_back(std::move(list));
            }
        }
        for (PendingList& list : fresh) {
            next.push_back(std::move(list));
        }
        state_.pending = std::move(next);
        state_.idle_lists = saturating_add(idle, fresh_idle);
        state_.produced.push_back(running);
    }

    void FaithfulAdder::run() {
        while (!done()) {
            step();
        }
    }

    DigitString FaithfulAdder::result() const { return DigitString(state_.produced); }

    DigitString add_mod_faithful(const DigitString& a, const DigitString& b, std::size_t m, const NumberSystem& sys) {
        FaithfulAdder adder(a, b, m, sys);
        adder.run();
        return adder.result();
    }

    DigitString add_mod(const DigitString& a, const DigitString& b, std::size_t m, const NumberSystem& sys) {
        std::vector<std::vector<Digit>> queue(m);
        std::vector<Digit> out(m, Digit::zero());
        for (std::size_t k = 0; k < m; ++k) {
            Digit running = a[k];
            auto fold = [&](Digit term) {
                const HoldPair& h = sys.pair(running, term);
                running = h.low;
                const auto carry = h.carry.digits();
                for (std::size_t i = 0; i < carry.size() && k + 1 + i < m; ++i) {
                    if (!carry[i].is_zero()) {
                        queue[k + 1 + i].push_back(carry[i]);
                    }
                }
            };
            fold(b[k]);
            // Folding may append to later slots only, so iterating by index is safe.
            for (std::size_t i = 0; i < queue[k].size(); ++i) {
                fold(queue[k][i]);
            }
            queue[k].clear();
            out[k] = running;
        }
        return DigitString(std::move(out));
    }

    std::size_t default_cap(const DigitString& a, const DigitString& b) noexcept {
        return a.degree().value_or(0) + b.degree().value_or(0) + 64;
    }

    DigitString add(const DigitString& a, const DigitString& b, const NumberSystem& sys,
                    std::optional<std::size_t> cap) {
        const std::size_t limit = cap.value_or(default_cap(a, b));
        const std::size_t input_length = std::max(a.size(), b.size());

        std::deque<std::vector<Digit>> ahead;
        std::vector<Digit> out;
        std::map<std::vector<int>, std::size_t> seen;

        for (std::size_t k = 0;; ++k) {
            while (!ahead.empty() && ahead.back().empty()) {
                ahead.pop_back();
            }
            if (k >= input_length && ahead.empty()) {
                break;
            }
            if (k >= limit) {
                throw NonTerminating("add: carries still pending at position " + std::to_string(k) + " (cap " +
                                     std::to_string(limit) + ")");
            }
            if (k >= input_length) {
                const auto [it, inserted] = seen.emplace(state_key(ahead), k);
                if (!inserted) {
                    const bool silent = std::all_of(out.begin() + static_cast<std::ptrdiff_t>(it->second), out.end(),
                                                    [](Digit d) { return d.is_zero(); });
                    if (silent) {
                        break;
                    }
                    throw NonTerminating("add: carry state repeats with non-Zero output; the sum has no finite expansion");
                }
            }

            std::vector<Digit> current;
            if (!ahead.empty()) {
                current = std::move(ahead.front());
                ahead.pop_front();
                // Grouping equal digits keeps zero-valued carry patterns from multiplying.
                std::sort(current.begin(), current.end(), by_exponent);
            }
            Digit running = a[k];
            auto fold = [&](Digit term) {
                const HoldPair& h = sys.pair(running, term);
                running = h.low;
                const auto carry = h.carry.digits();
                if (ahead.size() < carry.size()) {
                    ahead.resize(carry.size());
                }
                for (std::size_t i = 0; i < carry.size(); ++i) {
                    if (!carry[i].is_zero()) {
                        ahead[i].push_back(carry[i]);
                    }
                }
            };
            fold(b[k]);
            for (const Digit term : current) {
                fold(term);
            }
            out.push_back(running);
        }
        return DigitString(std::move(out));
    }

    DigitString mul(const DigitString& a, const DigitString& b, const NumberSystem& sys,
                    std::optional<std::size_t> cap) {
        DigitString total;
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a[j].is_zero()) {
                continue;
            }
            total = add(total, scale_string(a[j], b, sys.order()).shifted(j), sys, cap);
        }
        return total;
    }

    DigitString mul_mod(const DigitString& a, const DigitString& b, std::size_t m, const NumberSystem& sys) {
        DigitString total;
        for (std::size_t j = 0; j < std::min(a.size(), m); ++j) {
            if (a[j].is_zero()) {
                continue;
            }
            total = add_mod(total, scale_string(a[j], b, sys.order()).shifted(j).truncated(m), m, sys);
        }
        return total;
    }

} // namespace holdring
