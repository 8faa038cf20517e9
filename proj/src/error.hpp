#pragma once

#include <stdexcept>
#include <string>

namespace cantor {

enum class errc {
    invalid_argument,
    parse_error,
    unresolved,
    io_error,
    internal,
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

// reals_differ proof not found within the stated budget; never a claim of equality
class difference_unresolved : public error {
  public:
    difference_unresolved(uint64_t i, uint64_t j, uint64_t budget)
        : error(errc::unresolved,
                "difference unresolved between elements " + std::to_string(i) + " and " +
                    std::to_string(j) + " within budget " + std::to_string(budget)),
          i_(i), j_(j), budget_(budget) {}
    uint64_t i() const { return i_; }
    uint64_t j() const { return j_; }
    uint64_t budget() const { return budget_; }

  private:
    uint64_t i_, j_, budget_;
};

} // namespace cantor
