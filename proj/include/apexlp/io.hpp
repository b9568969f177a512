#ifndef APEXLP_IO_HPP
#define APEXLP_IO_HPP

#include <iosfwd>
#include <string>

#include "apexlp/model.hpp"
#include "apexlp/target.hpp"

namespace apexlp {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Shortest decimal string that reads back to exactly the same double.
std::string format_double(double v);

/*
 * Problem text format:
 *
 *     LPF1
 *     <n> <m>
 *     <a_i0> ... <a_i,n-1> <b_i>     (m rows)
 *     <c_0> ... <c_n-1>
 *
 * Tokens are whitespace separated; lines starting with '#' (and blank
 * lines) are skipped.  Values are written with the shortest
 * round-tripping representation, so write -> read -> write is
 * byte-identical.
 */
void write_problem(const LpProblem& problem, std::ostream& out);
void write_problem_file(const LpProblem& problem, const std::string& path);

// Throws ParseError with the offending line number; a zero constraint
// row or zero objective raises ValidationError naming the line.
LpProblem read_problem(std::istream& in);
LpProblem read_problem_file(const std::string& path);

// One row per trace record: k, objective, step_norm, proj_sweeps.
// step_norm is empty on the final record.
void write_trace_csv(const SolveReport& report, std::ostream& out);

}  // namespace apexlp

#endif  // APEXLP_IO_HPP
