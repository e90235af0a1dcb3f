#ifndef PUREO_CLI_HPP
#define PUREO_CLI_HPP

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <pureo/order_ideal.hpp>

namespace pureo::cli
{

// Exit statuses.
inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_inconclusive = 3;

class generator_file_error : public std::runtime_error
{
public:
    generator_file_error(const std::string &what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), m_line(line)
    {
    }
    /// 1-based; 0 when the error is not tied to a line.
    std::size_t line() const noexcept
    {
        return m_line;
    }

private:
    std::size_t m_line;
};

/// One monomial per line; blank lines and lines starting with '#' are skipped.
/// Duplicates and empty input are errors.
generator_set read_generators(std::istream &in);
generator_set load_generators(const std::string &path);

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace pureo::cli

#endif
